//! Quadratic-series algebra: transforms of a quadratic equation under
//! scaling, shifting, and powering of its series solution; the family
//! quadratics; the NextABC peeling step; and its iteration into a Hankel
//! continued fraction.
//!
//! A triple (A, B, C) of polynomials in `q` over Q(t) encodes the unique
//! power series F with `A + B F + C F^2 = 0`, `B(0) = 1`, `C(0) = 0`.

use crate::closedforms::{beta_poly, lucas_eval};
use crate::error::{Error, Result};
use crate::exactnum::{RatFunc, Rational};
use crate::hfrac::{ExpansionStatus, HFraction, Quotient};
use crate::qseries::{PolyQ, SeriesQ};

/// Coefficients of `A + B F + C F^2 = 0` with `B(0) = 1` and `C(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadTriple {
    a: PolyQ,
    b: PolyQ,
    c: PolyQ,
}

impl QuadTriple {
    /// Normalizes by the constant term of `B` (which must be a unit) and
    /// requires `C(0) = 0`.
    pub fn new(a: PolyQ, b: PolyQ, c: PolyQ) -> Result<Self> {
        let b0 = b.constant_term();
        if b0.is_zero() {
            return Err(Error::DegenerateTriple("B(0) must be a unit".into()));
        }
        let (a, b, c) = if b0.is_one() {
            (a, b, c)
        } else {
            let inv = b0.inv()?;
            (a.scale(&inv), b.scale(&inv), c.scale(&inv))
        };
        if !c.constant_term().is_zero() {
            return Err(Error::DegenerateTriple(
                "C(0) must vanish after normalization".into(),
            ));
        }
        Ok(QuadTriple { a, b, c })
    }

    pub fn a(&self) -> &PolyQ {
        &self.a
    }

    pub fn b(&self) -> &PolyQ {
        &self.b
    }

    pub fn c(&self) -> &PolyQ {
        &self.c
    }
}

/// One output step of the peeling algorithm: the next triple together with
/// the extracted quotient data (k, a, D).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixTuple {
    pub a_star: PolyQ,
    pub b_star: PolyQ,
    pub c_star: PolyQ,
    pub k: usize,
    pub a: RatFunc,
    pub d: PolyQ,
}

impl std::fmt::Display for SixTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "k={}\ta={}\tD={}\tA*={}\tB*={}\tC*={}",
            self.k, self.a, self.d, self.a_star, self.b_star, self.c_star
        )
    }
}

/// Extracts the power-series solution of a triple to the given order by the
/// coefficient recursion `F = (-A - C F^2)/B`; `val(C) >= 1` guarantees each
/// coefficient only depends on earlier ones.
pub fn quad_solve_series(tq: &QuadTriple, order: usize) -> Result<SeriesQ> {
    let order = order.max(1);
    let b0 = tq.b.constant_term();
    if b0.is_zero() {
        return Err(Error::DegenerateTriple("B(0) must be a unit".into()));
    }
    if !tq.c.constant_term().is_zero() {
        return Err(Error::InconsistentTriple(0));
    }
    let b0_inv = b0.inv()?;
    let mut f: Vec<RatFunc> = Vec::with_capacity(order);
    let mut f_sq: Vec<RatFunc> = Vec::with_capacity(order);
    for n in 0..order {
        let mut rhs = -&tq.a.coeff(n);
        for i in 1..=n.min(tq.b.degree()) {
            let bi = tq.b.coeff(i);
            if !bi.is_zero() {
                rhs = &rhs - &(&bi * &f[n - i]);
            }
        }
        for i in 1..=n.min(tq.c.degree()) {
            let ci = tq.c.coeff(i);
            if !ci.is_zero() {
                rhs = &rhs - &(&ci * &f_sq[n - i]);
            }
        }
        let fn_val = &rhs * &b0_inv;
        // Maintain the coefficients of F^2 as F grows.
        let mut sq = RatFunc::zero();
        for i in 0..=n {
            let gj = if i == n { &fn_val } else { &f[i] };
            let hj = if n - i == n { &fn_val } else { &f[n - i] };
            if !gj.is_zero() && !hj.is_zero() {
                sq = &sq + &(gj * hj);
            }
        }
        f.push(fn_val);
        f_sq.push(sq);
    }
    Ok(SeriesQ::new(f))
}

/// Residual `A + B F + C F^2` as a series, for verification.
pub fn quad_residual(tq: &QuadTriple, f: &SeriesQ) -> SeriesQ {
    let bf = f.mul_polyq(&tq.b);
    let cff = (f * f).mul_polyq(&tq.c);
    let a = SeriesQ::from_polyq(&tq.a, f.order());
    &(&a + &bf) + &cff
}

/// Triple whose solution is `U * F`: `(A U^2, B U, C)` renormalized.
/// `U(0)` must be nonzero, otherwise `B U` loses its unit constant term.
pub fn quad_scale(tq: &QuadTriple, u: &PolyQ) -> Result<QuadTriple> {
    if u.constant_term().is_zero() {
        return Err(Error::DegenerateTriple(
            "scaling factor must have a nonzero constant term".into(),
        ));
    }
    QuadTriple::new(&(&tq.a * u) * u, &tq.b * u, tq.c.clone())
}

/// Triple whose solution is `F + U`:
/// `(A - B U + C U^2, B - 2 C U, C)` renormalized.
pub fn quad_shift(tq: &QuadTriple, u: &PolyQ) -> Result<QuadTriple> {
    let a = &(&tq.a - &(&tq.b * u)) + &(&(&tq.c * u) * u);
    let b = &tq.b - &(&tq.c * u).scale(&RatFunc::from_integer(2));
    QuadTriple::new(a, b, tq.c.clone())
}

/// Triple whose solution is `F^n` for n >= 1:
/// `(A^n, (-1)^(n+1) L_n(B, -A C), C^n)` renormalized. The n = 0 case would
/// force the degenerate identity `1 - 2 + 1 = 0` and is rejected.
pub fn quad_power(tq: &QuadTriple, n: usize) -> Result<QuadTriple> {
    if n == 0 {
        return Err(Error::DegenerateTriple(
            "zeroth power of a quadratic series is degenerate".into(),
        ));
    }
    let minus_ac = -&(&tq.a * &tq.c);
    let lucas = lucas_eval(n, &tq.b, &minus_ac);
    let middle = if n % 2 == 1 { lucas } else { -lucas };
    QuadTriple::new(tq.a.pow(n), middle, tq.c.pow(n))
}

/// The quadratic satisfied by `(gamma(t,q) - 1)^m / q^m0`:
/// `(-q^(m-m0), beta(m; t, q), -t^m q^(m+m0))`, for `m >= max(1, m0)`.
pub fn family_quadratic(m: usize, m0: usize) -> Result<QuadTriple> {
    if m < 1 || m < m0 {
        return Err(Error::InvalidParameter(format!(
            "family quadratic requires m >= max(1, m0); got m={m}, m0={m0}"
        )));
    }
    let a = PolyQ::monomial(RatFunc::from_integer(-1), m - m0);
    let b = beta_poly(m)?;
    let c = PolyQ::monomial(-RatFunc::t_pow(m), m + m0);
    QuadTriple::new(a, b, c)
}

/// One step of the peeling algorithm for delta = 2.
///
/// With `A = a q^k + O(q^(k+1))`, defines `D` as the truncation to degree
/// k + 1 of `(a q^k B)/A - (a q^k C)/B`, then
///
/// ```text
/// A* = (-D^2 A / a + B D q^k - C a q^(2k)) / q^(2k+2)
/// B* = 2 A D / (a q^k) - B
/// C* = -A q^2 / a
/// ```
///
/// All divisions must be exact; an inexact one reports a violated invariant.
/// The solutions are related by `F = -a q^k / (D - q^(k+2) G)`.
pub fn next_abc(tq: &QuadTriple) -> Result<SixTuple> {
    if tq.a.is_zero() {
        return Err(Error::InvalidParameter("next_abc requires A != 0".into()));
    }
    if tq.c.is_zero() {
        return Err(Error::InvalidParameter("next_abc requires C != 0".into()));
    }
    let k = tq.a.valuation().expect("A is nonzero");
    let a_lead = tq.a.coeff(k);

    // The shortcut (C divisible by q^2) skips the C/B division; tests pin it
    // against the general two-term expansion.
    let d = match step2_d_shortcut(tq, k, &a_lead)? {
        Some(d) => d,
        None => step2_d(tq, k, &a_lead)?,
    };

    // A* = (-D^2 A/a + B D q^k - C a q^(2k)) / q^(2k+2)
    let d_sq = &d * &d;
    let a_inv = a_lead.inv()?;
    let num = &(&(&tq.b * &d).shift_up(k) - &(&d_sq * &tq.a).scale(&a_inv))
        - &(&tq.c.scale(&a_lead)).shift_up(2 * k);
    let a_star = num
        .exact_div_qpow(2 * k + 2)
        .map_err(|_| Error::AlgorithmInvariantViolated(
            "the A* numerator is not divisible by q^(2k+2)".into(),
        ))?;

    // B* = 2 A D / (a q^k) - B
    let b_star_num = (&tq.a * &d).exact_div_qpow(k).map_err(|_| {
        Error::AlgorithmInvariantViolated("A is not divisible by q^k".into())
    })?;
    let b_star = &b_star_num.scale(&(&RatFunc::from_integer(2) * &a_inv)) - &tq.b;

    // C* = -A q^2 / a
    let c_star = (-&tq.a).scale(&a_inv).shift_up(2);

    debug_assert!(b_star.constant_term().is_one());
    debug_assert!(c_star.constant_term().is_zero());
    Ok(SixTuple {
        a_star,
        b_star,
        c_star,
        k,
        a: a_lead,
        d,
    })
}

/// Step 2: the defining series expansion of D, with the shortcut cases
/// (C divisible by q^2, or A a monomial) validated against it in tests.
fn step2_d(tq: &QuadTriple, k: usize, a_lead: &RatFunc) -> Result<PolyQ> {
    let order = k + 2;
    // a q^k B / A = B / (A / (a q^k)), and A/(a q^k) is a unit polynomial.
    let a_unit = tq
        .a
        .exact_div_qpow(k)
        .expect("valuation k")
        .scale(&a_lead.inv()?);
    let term1 = SeriesQ::from_polyq(&tq.b, order)
        * SeriesQ::from_polyq(&a_unit, order).invert()?;
    // a q^k C / B
    let term2 = SeriesQ::from_polyq(&tq.c, order + k)
        .shift(k as i64)?
        .truncated(order)
        .scale(a_lead)
        * SeriesQ::from_polyq(&tq.b, order).invert()?;
    let d_series = &term1 - &term2;
    let d = d_series.to_polyq().truncated(k + 2);
    debug_assert!(d.constant_term().is_one());
    debug_assert!(d.degree() <= k + 1);
    Ok(d)
}

/// Step-2 shortcut when `C = q^2 C'`: D is the truncation of `a q^k B / A`;
/// when additionally `A = a q^k` exactly, D is the truncation of B itself.
pub(crate) fn step2_d_shortcut(tq: &QuadTriple, k: usize, a_lead: &RatFunc) -> Result<Option<PolyQ>> {
    if tq.c.valuation().map_or(true, |v| v < 2) {
        return Ok(None);
    }
    let a_unit = tq
        .a
        .exact_div_qpow(k)
        .expect("valuation k")
        .scale(&a_lead.inv()?);
    if a_unit.is_one() {
        return Ok(Some(tq.b.truncated(k + 2)));
    }
    let order = k + 2;
    let d = (SeriesQ::from_polyq(&tq.b, order) * SeriesQ::from_polyq(&a_unit, order).invert()?)
        .to_polyq()
        .truncated(k + 2);
    Ok(Some(d))
}

/// Chains the peeling step; element n is the output of step n. Iteration
/// ends early when some `A` becomes 0 (the series solution is a terminating
/// fraction).
pub fn iterate_next_abc(start: &QuadTriple, steps: usize) -> Result<Vec<SixTuple>> {
    let mut out = Vec::with_capacity(steps);
    let mut cur = start.clone();
    for _ in 0..steps {
        if cur.a.is_zero() {
            break;
        }
        let tuple = next_abc(&cur)?;
        cur = QuadTriple::new(
            tuple.a_star.clone(),
            tuple.b_star.clone(),
            tuple.c_star.clone(),
        )?;
        out.push(tuple);
    }
    Ok(out)
}

/// The Hankel continued fraction read off the iteration: quotient j has
/// `k = k_j`, `v = -a_j`, and `1 + u q = D_j`.
pub fn hfrac_from_quadratic(start: &QuadTriple, steps: usize) -> Result<HFraction> {
    let tuples = iterate_next_abc(start, steps)?;
    let terminated = tuples.len() < steps || tuples.last().map_or(true, |t| t.a_star.is_zero());
    let quotients = tuples
        .into_iter()
        .map(|t| {
            let u = (&t.d - &PolyQ::one()).exact_div_qpow(1).map_err(|_| {
                Error::AlgorithmInvariantViolated("D(0) != 1".into())
            })?;
            Ok(Quotient {
                k: t.k,
                v: -&t.a,
                u,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HFraction {
        quotients,
        delta: 2,
        status: if terminated {
            ExpansionStatus::Complete
        } else {
            ExpansionStatus::MaxTermsReached
        },
    })
}

/// Checks `F = -a q^k / (D - q^(k+2) G)` given the input (for F) and output
/// (for G) of one step, to the order of the provided solutions.
pub fn check_step_soundness(input: &QuadTriple, tuple: &SixTuple, order: usize) -> Result<bool> {
    let f = quad_solve_series(input, order)?;
    let next = QuadTriple::new(
        tuple.a_star.clone(),
        tuple.b_star.clone(),
        tuple.c_star.clone(),
    )?;
    let g = quad_solve_series(&next, order)?;
    let denom = &SeriesQ::from_polyq(&tuple.d, order) - &g.shift((tuple.k + 2) as i64)?.truncated(order);
    let rhs = denom
        .invert()?
        .scale(&-&tuple.a)
        .shift(tuple.k as i64)?
        .truncated(order);
    Ok(rhs == f.truncated(order))
}

/// Convenience: `q^e` as a polynomial in q.
pub fn qpow(e: usize) -> PolyQ {
    PolyQ::monomial(RatFunc::one(), e)
}

/// Convenience: the constant `c` as a rational scalar polynomial.
pub fn qconst(c: i64) -> PolyQ {
    PolyQ::constant(RatFunc::from_rational(Rational::from_integer(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::PolyT;
    use crate::hfrac::hfrac_expand;
    use crate::sequences::{family_series, narayana_series, FamilySpec};

    fn narayana_triple() -> QuadTriple {
        // -1 + (1 - q + tq) gamma - tq gamma^2 = 0
        let t = RatFunc::var();
        QuadTriple::new(
            qconst(-1),
            PolyQ::new(vec![RatFunc::one(), &t - &RatFunc::one()]),
            PolyQ::monomial(-&t, 1),
        )
        .unwrap()
    }

    #[test]
    fn solve_recovers_narayana() {
        let f = quad_solve_series(&narayana_triple(), 12).unwrap();
        assert_eq!(f, narayana_series(12));
        assert!(quad_residual(&narayana_triple(), &f).is_zero_to_order());
    }

    #[test]
    fn solve_geometric_with_zero_c() {
        // -1 + (1 - q) F = 0 has solution 1/(1-q); C = 0 is fine here.
        let tq = QuadTriple::new(
            qconst(-1),
            &PolyQ::one() - &qpow(1),
            PolyQ::zero(),
        )
        .unwrap();
        let f = quad_solve_series(&tq, 8).unwrap();
        assert_eq!(f, SeriesQ::new(vec![RatFunc::one(); 8]));
    }

    #[test]
    fn shift_by_minus_one_gives_the_shifted_narayana_triple() {
        // Shifting gamma by -1: -q + (1 - q - tq)(gamma-1) - tq (gamma-1)^2.
        let t = RatFunc::var();
        let shifted = quad_shift(&narayana_triple(), &qconst(-1)).unwrap();
        let expect = QuadTriple::new(
            PolyQ::monomial(RatFunc::from_integer(-1), 1),
            PolyQ::new(vec![RatFunc::one(), &(-&t) - &RatFunc::one()]),
            PolyQ::monomial(-&t, 1),
        )
        .unwrap();
        assert_eq!(shifted, expect);
        // Shift then unshift is the identity.
        let back = quad_shift(&shifted, &qconst(1)).unwrap();
        assert_eq!(back, narayana_triple());
    }

    #[test]
    fn scale_and_shift_solutions_match() {
        let base = narayana_triple();
        let f = quad_solve_series(&base, 10).unwrap();
        // U = 1 + q
        let u = &PolyQ::one() + &qpow(1);
        let scaled = quad_scale(&base, &u).unwrap();
        assert_eq!(
            quad_solve_series(&scaled, 10).unwrap(),
            f.mul_polyq(&u).truncated(10)
        );
        // U = constant 3
        let scaled3 = quad_scale(&base, &qconst(3)).unwrap();
        assert_eq!(
            quad_solve_series(&scaled3, 10).unwrap(),
            f.scale(&RatFunc::from_integer(3))
        );
        // U = 0 shift is the identity.
        assert_eq!(quad_shift(&base, &PolyQ::zero()).unwrap(), base);
        assert!(quad_scale(&base, &qpow(1)).is_err());
    }

    #[test]
    fn power_transform_examples() {
        let base = narayana_triple();
        assert_eq!(quad_power(&base, 1).unwrap(), base);
        assert!(quad_power(&base, 0).is_err());
        // n = 2: middle coefficient is -(B^2 - 2AC) up to normalization, and
        // the solution squares.
        let squared = quad_power(&base, 2).unwrap();
        let f = quad_solve_series(&base, 12).unwrap();
        let f2 = quad_solve_series(&squared, 12).unwrap();
        assert_eq!(f2, (&f * &f).truncated(12));
        assert!(quad_residual(&squared, &f2).is_zero_to_order());
    }

    #[test]
    fn family_quadratic_solutions_match_the_series() {
        for (m, m0) in [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3)] {
            let tq = family_quadratic(m, m0).unwrap();
            let f = quad_solve_series(&tq, 15).unwrap();
            let spec = FamilySpec::new(m, m0).unwrap();
            assert_eq!(f, family_series(&spec, 15), "m={m} m0={m0}");
        }
        assert!(family_quadratic(1, 2).is_err());
        assert!(family_quadratic(0, 0).is_err());

        // Displayed initializations.
        let q22 = family_quadratic(2, 2).unwrap();
        assert_eq!(q22.a(), &qconst(-1));
        assert_eq!(q22.b(), &beta_poly(2).unwrap());
        assert_eq!(
            q22.c(),
            &PolyQ::monomial(-RatFunc::t_pow(2), 4)
        );
        let q33 = family_quadratic(3, 3).unwrap();
        assert_eq!(q33.a(), &qconst(-1));
        assert_eq!(q33.c(), &PolyQ::monomial(-RatFunc::t_pow(3), 6));
    }

    #[test]
    fn next_abc_first_step_on_the_22_family() {
        let tuple = next_abc(&family_quadratic(2, 2).unwrap()).unwrap();
        assert_eq!(tuple.k, 0);
        assert_eq!(tuple.a, RatFunc::from_integer(-1));
        // D = 1 - 2(1+t) q = beta(2) - (1 + t^2) q^2
        let expect_d = PolyQ::new(vec![
            RatFunc::one(),
            RatFunc::from_poly(PolyT::from_ints(&[-2, -2])),
        ]);
        assert_eq!(tuple.d, expect_d);
        assert_eq!(tuple.c_star, PolyQ::monomial(RatFunc::from_integer(-1), 2));
        // B* = 2D - B = 1 - 2(1+t) q - (1+t^2) q^2
        let expect_b = PolyQ::new(vec![
            RatFunc::one(),
            RatFunc::from_poly(PolyT::from_ints(&[-2, -2])),
            RatFunc::from_poly(PolyT::from_ints(&[-1, 0, -1])),
        ]);
        assert_eq!(tuple.b_star, expect_b);
    }

    #[test]
    fn step2_shortcut_matches_general_path() {
        for (m, m0) in [(2, 2), (3, 2), (3, 3), (4, 2), (2, 1)] {
            let mut cur = family_quadratic(m, m0).unwrap();
            for step in 0..5 {
                if cur.a().is_zero() {
                    break;
                }
                let k = cur.a().valuation().unwrap();
                let a_lead = cur.a().coeff(k);
                let general = step2_d(&cur, k, &a_lead).unwrap();
                if let Some(short) = step2_d_shortcut(&cur, k, &a_lead).unwrap() {
                    assert_eq!(short, general, "m={m} m0={m0} step={step}");
                }
                let tuple = next_abc(&cur).unwrap();
                cur = QuadTriple::new(tuple.a_star, tuple.b_star, tuple.c_star).unwrap();
            }
        }
    }

    #[test]
    fn first_steps_have_the_expected_k_and_a() {
        // From the shift-2 family: k0 = m - 2, a0 = -1.
        for m in 2..=5 {
            let tuple = next_abc(&family_quadratic(m, 2).unwrap()).unwrap();
            assert_eq!(tuple.k, m - 2, "m={m}");
            assert_eq!(tuple.a, RatFunc::from_integer(-1), "m={m}");
        }
    }

    #[test]
    fn step_soundness_on_families() {
        for (m, m0) in [(2, 2), (3, 3), (2, 1), (3, 2)] {
            let start = family_quadratic(m, m0).unwrap();
            let tuples = iterate_next_abc(&start, 4).unwrap();
            let mut cur = start;
            for (i, tuple) in tuples.iter().enumerate() {
                assert!(
                    check_step_soundness(&cur, tuple, 20).unwrap(),
                    "m={m} m0={m0} step {i}"
                );
                cur = QuadTriple::new(
                    tuple.a_star.clone(),
                    tuple.b_star.clone(),
                    tuple.c_star.clone(),
                )
                .unwrap();
            }
        }
    }

    #[test]
    fn output_invariants_on_random_valid_triples() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0xABCD);
        let mut checked = 0;
        while checked < 30 {
            let deg_a = rng.gen_range(0..3);
            let a = PolyQ::new(
                (0..=deg_a)
                    .map(|_| RatFunc::from_integer(rng.gen_range(-3..=3)))
                    .collect(),
            );
            let mut bcoeffs = vec![RatFunc::one()];
            for _ in 0..rng.gen_range(1..3) {
                bcoeffs.push(RatFunc::from_integer(rng.gen_range(-3..=3)));
            }
            let b = PolyQ::new(bcoeffs);
            let c = PolyQ::monomial(
                RatFunc::from_integer(rng.gen_range(1..=3)),
                rng.gen_range(1..=2),
            );
            if a.is_zero() {
                continue;
            }
            let tq = QuadTriple::new(a, b, c).unwrap();
            let tuple = next_abc(&tq).unwrap();
            assert!(tuple.b_star.constant_term().is_one());
            assert!(tuple.c_star.constant_term().is_zero());
            assert!(tuple.d.constant_term().is_one());
            assert!(tuple.d.is_zero() || tuple.d.degree() <= tuple.k + 1);
            assert!(!tuple.a.is_zero());
            checked += 1;
        }
    }

    #[test]
    fn iteration_stops_on_rational_tail() {
        // F = q solves -(q + q^4) + F + q^2 F^2 = 0.
        let a = &PolyQ::monomial(RatFunc::from_integer(-1), 1)
            + &PolyQ::monomial(RatFunc::from_integer(-1), 4);
        let tq = QuadTriple::new(a, PolyQ::one(), qpow(2)).unwrap();
        let tuples = iterate_next_abc(&tq, 6).unwrap();
        assert_eq!(tuples.len(), 1);
        assert!(tuples[0].a_star.is_zero());
        let h = hfrac_from_quadratic(&tq, 6).unwrap();
        assert_eq!(h.status, ExpansionStatus::Complete);
        assert_eq!(h.quotients.len(), 1);
        assert_eq!(h.quotients[0].k, 1);
        assert_eq!(h.quotients[0].v, RatFunc::one());
        assert!(h.quotients[0].u.is_zero());
    }

    #[test]
    fn hfrac_from_quadratic_matches_generic_expansion() {
        for (m, m0) in [(1, 1), (2, 2), (2, 1), (3, 3), (2, 0)] {
            let start = family_quadratic(m, m0).unwrap();
            let h_alg = hfrac_from_quadratic(&start, 6).unwrap();
            let spec = FamilySpec::new(m, m0).unwrap();
            let f = family_series(&spec, 30);
            let h_gen = hfrac_expand(&f, 2, 6).unwrap();
            assert_eq!(
                h_alg.quotients, h_gen.quotients,
                "m={m} m0={m0}"
            );
        }
    }

    #[test]
    fn family_11_fraction_has_constant_quotients() {
        // k_j = 0, v_0 = 1, v_j = t afterwards.
        let h = hfrac_from_quadratic(&family_quadratic(1, 1).unwrap(), 5).unwrap();
        assert_eq!(h.quotients[0].v, RatFunc::one());
        for quot in &h.quotients {
            assert_eq!(quot.k, 0);
        }
        for quot in &h.quotients[1..] {
            assert_eq!(quot.v, RatFunc::var());
        }
    }

    #[test]
    fn random_transform_residuals() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x1EA5);
        let mut done = 0;
        while done < 24 {
            let a = PolyQ::new(
                (0..=rng.gen_range(0..2))
                    .map(|_| RatFunc::from_integer(rng.gen_range(-2..=2)))
                    .collect(),
            );
            let mut bcoeffs = vec![RatFunc::one()];
            bcoeffs.push(RatFunc::from_integer(rng.gen_range(-2..=2)));
            let b = PolyQ::new(bcoeffs);
            let c = PolyQ::monomial(RatFunc::from_integer(rng.gen_range(1..=2)), 1);
            let Ok(tq) = QuadTriple::new(a, b, c) else { continue };
            let f = quad_solve_series(&tq, 15).unwrap();
            let deg = rng.gen_range(0..=2);
            let mut ucoeffs: Vec<RatFunc> =
                (0..=deg).map(|_| RatFunc::from_integer(rng.gen_range(-2..=2))).collect();
            match done % 3 {
                0 => {
                    if ucoeffs[0].is_zero() {
                        ucoeffs[0] = RatFunc::one();
                    }
                    let u = PolyQ::new(ucoeffs);
                    let out = quad_scale(&tq, &u).unwrap();
                    assert_eq!(
                        quad_solve_series(&out, 15).unwrap(),
                        f.mul_polyq(&u).truncated(15)
                    );
                }
                1 => {
                    let u = PolyQ::new(ucoeffs);
                    let out = quad_shift(&tq, &u).unwrap();
                    let expect = &f + &SeriesQ::from_polyq(&u, 15);
                    assert_eq!(quad_solve_series(&out, 15).unwrap(), expect);
                }
                _ => {
                    let n = rng.gen_range(1..=4);
                    let out = quad_power(&tq, n).unwrap();
                    assert_eq!(quad_solve_series(&out, 15).unwrap(), f.pow(n).truncated(15));
                }
            }
            done += 1;
        }
    }
}
