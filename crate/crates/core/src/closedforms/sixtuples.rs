//! Conjectured closed forms for the six-tuple streams produced by iterating
//! the peeling step on the shift-2 and shift-3 family quadratics.
//!
//! Stream entry n packages (A_(n+1), B_(n+1), C_(n+1); k_n, a_n, D_n), i.e.
//! exactly what one peeling step outputs, so entries compare directly against
//! [`crate::quadratic::iterate_next_abc`]. Explicit values at n = 0 take
//! precedence over the generic index patterns; sub-expressions like R(j-1)
//! are only referenced at indices where they are defined.

use crate::closedforms::defs::{alpha_poly, beta_poly, m_qint, qint, r_signed, s_signed};
use crate::error::{Error, Result};
use crate::exactnum::{neg_one_pow, PolyT, RatFunc, Rational};
use crate::qseries::PolyQ;
use crate::quadratic::SixTuple;

/// Which family quadratic the stream describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StreamVariant {
    /// Shift 2: `(gamma - 1)^m / q^2`, m >= 2, period-2 pattern.
    Q2,
    /// Shift 3: `(gamma - 1)^m / q^3`, m >= 3, period-3 pattern.
    Q3,
}

/// Closed-form generator for one stream.
#[derive(Clone, Copy, Debug)]
pub struct SixTupleStream {
    variant: StreamVariant,
    m: usize,
}

/// Stream entry n as a [`SixTuple`].
pub fn conjectured_six_tuples(variant: StreamVariant, m: usize, n: usize) -> Result<SixTuple> {
    SixTupleStream::new(variant, m)?.entry(n)
}

impl SixTupleStream {
    pub fn new(variant: StreamVariant, m: usize) -> Result<Self> {
        let min_m = match variant {
            StreamVariant::Q2 => 2,
            StreamVariant::Q3 => 3,
        };
        if m < min_m {
            return Err(Error::InvalidParameter(format!(
                "{variant:?} stream requires m >= {min_m}, got {m}"
            )));
        }
        Ok(SixTupleStream { variant, m })
    }

    pub fn variant(&self) -> StreamVariant {
        self.variant
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The tuple a peeling step at index n outputs.
    pub fn entry(&self, n: usize) -> Result<SixTuple> {
        Ok(SixTuple {
            a_star: self.coefficient_a(n + 1)?,
            b_star: self.coefficient_b(n + 1)?,
            c_star: self.coefficient_c(n + 1)?,
            k: self.exponent_k(n),
            a: self.leading_a(n)?,
            d: self.denominator_d(n)?,
        })
    }

    /// The triple (A_n, B_n, C_n) that enters step n.
    pub fn triple(&self, n: usize) -> Result<(PolyQ, PolyQ, PolyQ)> {
        Ok((
            self.coefficient_a(n)?,
            self.coefficient_b(n)?,
            self.coefficient_c(n)?,
        ))
    }

    fn j1(&self, j: usize) -> RatFunc {
        RatFunc::from_poly(qint(j + 1, self.m))
    }

    fn coefficient_a(&self, n: usize) -> Result<PolyQ> {
        let m = self.m;
        match self.variant {
            StreamVariant::Q2 => {
                if n == 0 {
                    return Ok(PolyQ::monomial(RatFunc::from_integer(-1), m - 2));
                }
                let j = n / 2;
                let (j0, j1, j2) = self.q2_brackets(j);
                if n % 2 == 0 {
                    // A_(2j) = (-t)^m q^(m-2) [j]/[j+1]
                    let c = (&RatFunc::neg_t_pow(m) * &j0).checked_div(&j1)?;
                    Ok(PolyQ::monomial(c, m - 2))
                } else {
                    // A_(2j+1) = ((-1)^m [j+2]/[j+1]) beta
                    //          + ((1 - 2[j+2])/[j+1] - t^(m(j+1)) [j+2]/[j+1]^2) q^m
                    let lead = (&RatFunc::from_rational(neg_one_pow(m as u64)) * &j2)
                        .checked_div(&j1)?;
                    let one = RatFunc::one();
                    let two = RatFunc::from_integer(2);
                    let term1 = (&one - &(&two * &j2)).checked_div(&j1)?;
                    let term2 = (&RatFunc::t_pow(m * (j + 1)) * &j2)
                        .checked_div(&(&j1 * &j1))?;
                    Ok(&beta_poly(m)?.scale(&lead)
                        + &PolyQ::monomial(&term1 - &term2, m))
                }
            }
            StreamVariant::Q3 => {
                if n == 0 {
                    return Ok(PolyQ::monomial(RatFunc::from_integer(-1), m - 3));
                }
                let j = n / 3;
                match n % 3 {
                    0 => {
                        // A_(3j) = (-t)^m q^(m-3) R(j-1)/[j+1]^2
                        let j1 = self.j1(j);
                        let c = (&RatFunc::neg_t_pow(m)
                            * &RatFunc::from_poly(r_signed(m, j as i64 - 1)))
                            .checked_div(&(&j1 * &j1))?;
                        Ok(PolyQ::monomial(c, m - 3))
                    }
                    1 => self.q3_a_after_first_substep(j),
                    _ => {
                        // A_(3j+2) = -v(j)^2 C_(3j+3) / q^2
                        let v = self.q3_v(j)?;
                        let c_next = self.coefficient_c(3 * (j + 1))?;
                        Ok(c_next
                            .exact_div_qpow(2)
                            .expect("C at a multiple of 3 has valuation >= 2")
                            .scale(&-&(&v * &v)))
                    }
                }
            }
        }
    }

    fn coefficient_b(&self, n: usize) -> Result<PolyQ> {
        let m = self.m;
        match self.variant {
            StreamVariant::Q2 => {
                let j = n / 2;
                let (_, j1, _) = self.q2_brackets(j);
                let beta = beta_poly(m)?;
                let two = RatFunc::from_integer(2);
                let msign = RatFunc::from_rational(neg_one_pow(m as u64));
                if n % 2 == 0 {
                    // beta + 2 (1/[j+1] - 1)(-q)^m
                    let c = &(&two * &(&j1.inv()? - &RatFunc::one())) * &msign;
                    Ok(&beta + &PolyQ::monomial(c, m))
                } else {
                    // beta - 2 (t^(m(j+1))/[j+1] + 1)(-q)^m
                    let c = &(&two
                        * &(&RatFunc::t_pow(m * (j + 1)).checked_div(&j1)? + &RatFunc::one()))
                        * &msign;
                    Ok(&beta - &PolyQ::monomial(c, m))
                }
            }
            StreamVariant::Q3 => {
                let j = n / 3;
                let alpha = alpha_poly(m)?;
                match n % 3 {
                    0 => Ok(&alpha + &self.q3_w2(j)?),
                    1 => Ok(&alpha - &self.q3_w2(j)?),
                    _ => {
                        // 2 (1 + q v(j)) w1(j) - alpha + w2(j)
                        let v = self.q3_v(j)?;
                        let d = &PolyQ::one() + &PolyQ::monomial(v, 1);
                        let w1 = self.q3_w1(j)?;
                        let prod = (&d * &w1).scale(&RatFunc::from_integer(2));
                        Ok(&(&prod - &alpha) + &self.q3_w2(j)?)
                    }
                }
            }
        }
    }

    fn coefficient_c(&self, n: usize) -> Result<PolyQ> {
        let m = self.m;
        match self.variant {
            StreamVariant::Q2 => {
                if n == 0 {
                    return Ok(PolyQ::monomial(-RatFunc::t_pow(m), m + 2));
                }
                let j = n / 2;
                if n % 2 == 1 {
                    return Ok(PolyQ::monomial(RatFunc::from_integer(-1), m));
                }
                // C_(2j) = -beta q^2 - (1/[j+1] - t^(mj)/[j] - 2)(-q)^(m+2)
                let (j0, j1, _) = self.q2_brackets(j);
                if j0.is_zero() {
                    return Err(Error::UndefinedIndex(format!(
                        "C at even step references 1/[j] with j = {j}"
                    )));
                }
                let inner = &(&j1.inv()? - &RatFunc::t_pow(m * j).checked_div(&j0)?)
                    - &RatFunc::from_integer(2);
                let c = &inner * &RatFunc::from_rational(neg_one_pow(m as u64 + 2));
                Ok(&(-&beta_poly(m)?.shift_up(2)) - &PolyQ::monomial(c, m + 2))
            }
            StreamVariant::Q3 => {
                if n == 0 {
                    return Ok(PolyQ::monomial(-RatFunc::t_pow(m), m + 3));
                }
                let j = n / 3;
                match n % 3 {
                    0 => {
                        // C_(3j) = -alpha q^2 (1 + v(j-1) q) - u(j) q^(m+1)
                        //        + w3(j) (-q)^(m+2) - t^(mj) R(j-1)^(-1) (-q)^(m+3)
                        let r_prev = RatFunc::from_poly(r_signed(m, j as i64 - 1));
                        if r_prev.is_zero() {
                            return Err(Error::UndefinedIndex(format!(
                                "C at step 3j references 1/R(j-1) with j = {j}"
                            )));
                        }
                        let v_prev = self.q3_v(j - 1)?;
                        let factor = &PolyQ::one() + &PolyQ::monomial(v_prev, 1);
                        let first = -&(&alpha_poly(m)?.shift_up(2) * &factor);
                        let second = PolyQ::monomial(-&self.q3_u(j)?, m + 1);
                        let third = PolyQ::monomial(
                            &self.q3_w3(j)? * &RatFunc::from_rational(neg_one_pow(m as u64 + 2)),
                            m + 2,
                        );
                        let fourth = PolyQ::monomial(
                            &(-&RatFunc::t_pow(m * j).checked_div(&r_prev)?)
                                * &RatFunc::from_rational(neg_one_pow(m as u64 + 3)),
                            m + 3,
                        );
                        Ok(&(&(&first + &second) + &third) + &fourth)
                    }
                    1 => Ok(PolyQ::monomial(RatFunc::from_integer(-1), m - 1)),
                    _ => Ok((-&self.q3_w1(j)?).shift_up(2)),
                }
            }
        }
    }

    fn exponent_k(&self, n: usize) -> usize {
        let m = self.m;
        match self.variant {
            StreamVariant::Q2 => {
                if n % 2 == 0 {
                    m - 2
                } else {
                    0
                }
            }
            StreamVariant::Q3 => {
                if n % 3 == 0 {
                    m - 3
                } else {
                    0
                }
            }
        }
    }

    fn leading_a(&self, n: usize) -> Result<RatFunc> {
        let m = self.m;
        if n == 0 {
            return Ok(RatFunc::from_integer(-1));
        }
        match self.variant {
            StreamVariant::Q2 => {
                let j = n / 2;
                let (j0, j1, j2) = self.q2_brackets(j);
                if n % 2 == 0 {
                    (&RatFunc::neg_t_pow(m) * &j0).checked_div(&j1)
                } else {
                    (&RatFunc::from_rational(neg_one_pow(m as u64)) * &j2).checked_div(&j1)
                }
            }
            StreamVariant::Q3 => {
                let j = n / 3;
                match n % 3 {
                    0 => {
                        let j1 = self.j1(j);
                        (&RatFunc::neg_t_pow(m)
                            * &RatFunc::from_poly(r_signed(m, j as i64 - 1)))
                            .checked_div(&(&j1 * &j1))
                    }
                    1 => self.q3_u(j),
                    _ => {
                        let v = self.q3_v(j)?;
                        Ok(&v * &v)
                    }
                }
            }
        }
    }

    fn denominator_d(&self, n: usize) -> Result<PolyQ> {
        let m = self.m;
        match self.variant {
            StreamVariant::Q2 => {
                if n % 2 == 0 {
                    // beta - (-q)^m (1 + t^m)
                    let top = PolyQ::monomial(
                        &RatFunc::from_poly(
                            &PolyT::one() + &PolyT::monomial(Rational::one(), m),
                        ) * &RatFunc::from_rational(neg_one_pow(m as u64)),
                        m,
                    );
                    Ok(&beta_poly(m)? - &top)
                } else {
                    Ok(PolyQ::one())
                }
            }
            StreamVariant::Q3 => {
                let j = n / 3;
                match n % 3 {
                    0 => alpha_poly(m),
                    1 => Ok(&PolyQ::one() + &PolyQ::monomial(self.q3_v(j)?, 1)),
                    _ => Ok(&PolyQ::one() - &PolyQ::monomial(self.q3_v(j)?, 1)),
                }
            }
        }
    }

    fn q2_brackets(&self, j: usize) -> (RatFunc, RatFunc, RatFunc) {
        (
            RatFunc::from_poly(qint(j, self.m)),
            RatFunc::from_poly(qint(j + 1, self.m)),
            RatFunc::from_poly(qint(j + 2, self.m)),
        )
    }

    /// `u(j) = (-1)^(m+1) R(j)/[j+1]^2`.
    fn q3_u(&self, j: usize) -> Result<RatFunc> {
        let j1 = self.j1(j);
        (&RatFunc::from_rational(neg_one_pow(self.m as u64 + 1))
            * &RatFunc::from_poly(r_signed(self.m, j as i64)))
            .checked_div(&(&j1 * &j1))
    }

    /// `v(j) = [j+1][j+2]/R(j)`.
    fn q3_v(&self, j: usize) -> Result<RatFunc> {
        let num = &self.j1(j) * &RatFunc::from_poly(qint(j + 2, self.m));
        num.checked_div(&RatFunc::from_poly(r_signed(self.m, j as i64)))
    }

    /// `w1(j) = A_(3j+1)/a_(3j+1)`.
    fn q3_w1(&self, j: usize) -> Result<PolyQ> {
        let a = self.q3_a_after_first_substep(j)?;
        Ok(a.scale(&self.q3_u(j)?.inv()?))
    }

    /// `w2(j) = (-q)^(m-1) S(j)/[j+1]^2 + (-q)^m (1 + t^((j+1)m))/[j+1]`.
    fn q3_w2(&self, j: usize) -> Result<PolyQ> {
        let m = self.m;
        let j1 = self.j1(j);
        let first = RatFunc::from_poly(s_signed(m, j as i64))
            .checked_div(&(&j1 * &j1))?;
        let second = (&RatFunc::one() + &RatFunc::t_pow(m * (j + 1))).checked_div(&j1)?;
        Ok(&PolyQ::monomial(
            &first * &RatFunc::from_rational(neg_one_pow(m as u64 - 1)),
            m - 1,
        ) + &PolyQ::monomial(
            &second * &RatFunc::from_rational(neg_one_pow(m as u64)),
            m,
        ))
    }

    /// `w3(j) = m [m]_t v(j-1) - (1 + t^(m(j+1)))/[j+1]`, defined for j >= 1.
    fn q3_w3(&self, j: usize) -> Result<RatFunc> {
        if j == 0 {
            return Err(Error::UndefinedIndex(
                "w3 references v(j-1) at j = 0".into(),
            ));
        }
        let m = self.m;
        let first = &RatFunc::from_poly(m_qint(m)) * &self.q3_v(j - 1)?;
        let second =
            (&RatFunc::one() + &RatFunc::t_pow(m * (j + 1))).checked_div(&self.j1(j))?;
        Ok(&first - &second)
    }

    /// `A_(3j+1) = alpha (u(j) + (-1)^m [j+2]/[j+1] q)
    ///   - ((-1)^(m+1) u(j) R(j-1) + w3(j) R(j-1) q + t^(mj) q^2)
    ///     * t^m q^(m-1) / [j+1]^2`.
    ///
    /// The factor R(j-1) is distributed through the bracket: it cancels
    /// against the 1/R(j-1) carried by the `t^(mj)` term (mirroring the same
    /// term of C at multiples of 3), and
    /// `w3(j) R(j-1) = m [m]_t [j][j+1] - (1 + t^(m(j+1))) R(j-1)/[j+1]`
    /// stays defined down to j = 0, where R(-1) = 0 leaves exactly the
    /// `-t^m q^(m+1)` correction the initialization forces.
    fn q3_a_after_first_substep(&self, j: usize) -> Result<PolyQ> {
        let m = self.m;
        let alpha = alpha_poly(m)?;
        let j1 = self.j1(j);
        let j2 = RatFunc::from_poly(qint(j + 2, m));
        let u = self.q3_u(j)?;
        // alpha * (u(j) + (-1)^m ([j+2]/[j+1]) q)
        let lin = &PolyQ::constant(u.clone())
            + &PolyQ::monomial(
                &RatFunc::from_rational(neg_one_pow(m as u64)) * &j2.checked_div(&j1)?,
                1,
            );
        let head = &alpha * &lin;

        let r_prev = RatFunc::from_poly(r_signed(m, j as i64 - 1));
        let w3_r = {
            let first = &(&RatFunc::from_poly(m_qint(m)) * &RatFunc::from_poly(qint(j, m))) * &j1;
            let second = (&(&RatFunc::one() + &RatFunc::t_pow(m * (j + 1))) * &r_prev)
                .checked_div(&j1)?;
            &first - &second
        };
        if j >= 1 {
            debug_assert_eq!(w3_r, &self.q3_w3(j)? * &r_prev, "w3 recombination");
        }
        let bracket = &(&PolyQ::constant(
            &(&RatFunc::from_rational(neg_one_pow(m as u64 + 1)) * &u) * &r_prev,
        ) + &PolyQ::monomial(w3_r, 1))
            + &PolyQ::monomial(RatFunc::t_pow(m * j), 2);
        let scale = RatFunc::t_pow(m).checked_div(&(&j1 * &j1))?;
        let correction = bracket.scale(&scale).shift_up(m - 1);
        Ok(&head - &correction)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::{family_quadratic, iterate_next_abc, QuadTriple};

    #[test]
    fn stream_preconditions() {
        assert!(SixTupleStream::new(StreamVariant::Q2, 1).is_err());
        assert!(SixTupleStream::new(StreamVariant::Q3, 2).is_err());
        assert!(SixTupleStream::new(StreamVariant::Q2, 2).is_ok());
        assert!(SixTupleStream::new(StreamVariant::Q3, 3).is_ok());
    }

    #[test]
    fn q2_display_values() {
        let stream = SixTupleStream::new(StreamVariant::Q2, 3).unwrap();
        // C at odd steps is -q^m; D there is 1.
        for n in [1usize, 3, 5] {
            assert_eq!(
                stream.coefficient_c(n).unwrap(),
                PolyQ::monomial(RatFunc::from_integer(-1), 3)
            );
            assert_eq!(stream.denominator_d(n).unwrap(), PolyQ::one());
        }
        // B_0 reduces to beta itself ([1] = 1 kills the correction).
        assert_eq!(stream.coefficient_b(0).unwrap(), beta_poly(3).unwrap());
    }

    #[test]
    fn q3_display_values() {
        let stream = SixTupleStream::new(StreamVariant::Q3, 4).unwrap();
        assert_eq!(stream.denominator_d(0).unwrap(), alpha_poly(4).unwrap());
        assert_eq!(stream.denominator_d(3).unwrap(), alpha_poly(4).unwrap());
        let v0 = stream.q3_v(0).unwrap();
        assert_eq!(
            stream.denominator_d(1).unwrap(),
            &PolyQ::one() + &PolyQ::monomial(v0.clone(), 1)
        );
        assert_eq!(
            stream.denominator_d(2).unwrap(),
            &PolyQ::one() - &PolyQ::monomial(v0, 1)
        );
        // B_0 reduces to beta: alpha + w2(0) restores the two missing terms.
        assert_eq!(stream.coefficient_b(0).unwrap(), beta_poly(4).unwrap());
    }

    #[test]
    fn q2_stream_matches_the_algorithm() {
        for m in [2usize, 3] {
            let stream = SixTupleStream::new(StreamVariant::Q2, m).unwrap();
            let start = family_quadratic(m, 2).unwrap();
            let tuples = iterate_next_abc(&start, 6).unwrap();
            for (n, tuple) in tuples.iter().enumerate() {
                assert_eq!(&stream.entry(n).unwrap(), tuple, "m={m} step {n}");
            }
        }
    }

    #[test]
    fn q3_stream_matches_the_algorithm() {
        let m = 3;
        let stream = SixTupleStream::new(StreamVariant::Q3, m).unwrap();
        let start = family_quadratic(m, 3).unwrap();
        let tuples = iterate_next_abc(&start, 7).unwrap();
        for (n, tuple) in tuples.iter().enumerate() {
            assert_eq!(&stream.entry(n).unwrap(), tuple, "step {n}");
        }
    }

    #[test]
    fn stream_triples_are_valid_quadratics() {
        let stream = SixTupleStream::new(StreamVariant::Q3, 4).unwrap();
        for n in 0..6 {
            let (a, b, c) = stream.triple(n).unwrap();
            let tq = QuadTriple::new(a, b, c).unwrap();
            assert!(tq.b().constant_term().is_one(), "n={n}");
        }
    }
}
