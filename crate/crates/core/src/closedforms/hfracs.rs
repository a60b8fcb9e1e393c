//! Expected Hankel continued fractions of the four shifted families, emitted
//! directly from their closed quotient patterns.
//!
//! Storage convention matches [`crate::hfrac`]: quotient j carries
//! `(k_j, v_j, u_{j+1})` with `1 + u_{j+1}(q) q` the denominator polynomial
//! under `v_j q^(k_j)`. Explicit early values take precedence over the
//! generic index patterns.

use crate::closedforms::defs::{alpha_poly, beta_poly, qint, r_signed};
use crate::error::{Error, Result};
use crate::exactnum::{PolyT, RatFunc, Rational};
use crate::hfrac::{ExpansionStatus, HFraction, Quotient};
use crate::qseries::PolyQ;
use crate::sequences::FamilySpec;

fn qint_rf(n: usize, e: usize) -> RatFunc {
    RatFunc::from_poly(qint(n, e))
}

fn neg_t_pow(e: usize) -> RatFunc {
    RatFunc::neg_t_pow(e)
}

/// `(p - 1)/q` for a polynomial with constant term 1.
fn u_from_denominator(p: &PolyQ) -> Result<PolyQ> {
    (p - &PolyQ::one())
        .exact_div_qpow(1)
        .map_err(|_| Error::InvalidParameter("denominator polynomial must have constant term 1".into()))
}

/// The expected H-fraction of a family, to the requested number of
/// quotients. Validity: shift 0 and 2 need m >= 2, shift 1 needs m >= 1,
/// shift 3 needs m >= 3 (otherwise a quotient exponent would be negative).
pub fn expected_hfrac(family: &FamilySpec, terms: usize) -> Result<HFraction> {
    let m = family.m();
    let shift = family.shift();
    let min_m = match shift {
        0 => 2,
        1 => 1,
        2 => 2,
        _ => 3,
    };
    if m < min_m {
        return Err(Error::InvalidParameter(format!(
            "expected H-fraction for shift {shift} needs m >= {min_m} \
             (exponent k would be {m} - {min_m} < 0); got m = {m}"
        )));
    }

    let beta = beta_poly(m)?;
    // beta with its top term (-q)^m (1 + t^m) removed.
    let beta_trimmed = {
        let top_sign = if m % 2 == 0 { 1 } else { -1 };
        let top = PolyQ::monomial(
            RatFunc::from_poly(
                (&PolyT::one() + &PolyT::monomial(Rational::one(), m))
                    .scale(&Rational::from_integer(top_sign)),
            ),
            m,
        );
        &beta - &top
    };
    let u_beta = u_from_denominator(&beta)?;
    let u_beta_trimmed = u_from_denominator(&beta_trimmed)?;

    let mut quotients = Vec::with_capacity(terms);
    for j in 0..terms {
        let quot = match shift {
            0 => {
                // k_0 = m, k_(2i+1) = m-2, k_(2i+2) = 0;
                // v_0 = 1, v_1 = t^m, then the alternating ratio pattern;
                // u_1 from beta, even u from trimmed beta, odd u >= 3 zero.
                let k = if j == 0 {
                    m
                } else if j % 2 == 1 {
                    m - 2
                } else {
                    0
                };
                let v = if j == 0 {
                    RatFunc::one()
                } else if j == 1 {
                    RatFunc::t_pow(m)
                } else if j % 2 == 1 {
                    let i = (j - 1) / 2;
                    (-&neg_t_pow(m) * &qint_rf(i, m))
                        .checked_div(&qint_rf(i + 1, m))?
                } else {
                    let i = (j - 2) / 2;
                    (&RatFunc::from_rational(crate::exactnum::neg_one_pow(m as u64 + 1))
                        * &qint_rf(i + 2, m))
                        .checked_div(&qint_rf(i + 1, m))?
                };
                let u_index = j + 1;
                let u = if u_index == 1 {
                    u_beta.clone()
                } else if u_index % 2 == 0 {
                    u_beta_trimmed.clone()
                } else {
                    PolyQ::zero()
                };
                Quotient { k, v, u }
            }
            1 => {
                // k_j = m-1, v_0 = 1 then t^m, all denominators beta.
                let v = if j == 0 { RatFunc::one() } else { RatFunc::t_pow(m) };
                Quotient {
                    k: m - 1,
                    v,
                    u: u_beta.clone(),
                }
            }
            2 => {
                // k even = m-2, k odd = 0; v_0 = 1 with the same ratio
                // pattern shifted; odd u from trimmed beta, even u >= 2 zero.
                let k = if j % 2 == 0 { m - 2 } else { 0 };
                let v = if j == 0 {
                    RatFunc::one()
                } else if j % 2 == 0 {
                    let i = j / 2;
                    (-&neg_t_pow(m) * &qint_rf(i, m))
                        .checked_div(&qint_rf(i + 1, m))?
                } else {
                    let i = (j - 1) / 2;
                    (&RatFunc::from_rational(crate::exactnum::neg_one_pow(m as u64 + 1))
                        * &qint_rf(i + 2, m))
                        .checked_div(&qint_rf(i + 1, m))?
                };
                let u = if (j + 1) % 2 == 1 {
                    u_beta_trimmed.clone()
                } else {
                    PolyQ::zero()
                };
                Quotient { k, v, u }
            }
            _ => {
                // shift 3: period-3 pattern built from R and the q-integers.
                // v_0 and the v at multiples of 3 are pinned by the peeling
                // step (v = -a with a_0 = -1 and a_(3i) = (-t)^m R(i-1)/[i+1]^2),
                // which the generic expansion confirms quotient by quotient.
                let k = if j % 3 == 0 { m - 3 } else { 0 };
                let v = match j % 3 {
                    0 => {
                        if j == 0 {
                            RatFunc::one()
                        } else {
                            let i = j / 3;
                            let j1 = qint_rf(i + 1, m);
                            (-&(&neg_t_pow(m) * &RatFunc::from_poly(r_signed(m, i as i64 - 1))))
                                .checked_div(&(&j1 * &j1))?
                        }
                    }
                    1 => {
                        let i = (j - 1) / 3;
                        let j1 = qint_rf(i + 1, m);
                        (&RatFunc::from_rational(crate::exactnum::neg_one_pow(m as u64))
                            * &RatFunc::from_poly(r_signed(m, i as i64)))
                            .checked_div(&(&j1 * &j1))?
                    }
                    _ => {
                        let i = (j - 2) / 3;
                        let j1 = qint_rf(i + 1, m);
                        let j2 = qint_rf(i + 2, m);
                        let r = RatFunc::from_poly(r_signed(m, i as i64));
                        -&(&(&j1 * &j1) * &(&j2 * &j2)).checked_div(&(&r * &r))?
                    }
                };
                // u index j+1: multiples of 3 are the constant -[i][i+1]/R(i-1),
                // 3i+1 comes from alpha, 3i+2 is the constant [i+1][i+2]/R(i).
                let u_index = j + 1;
                let u = match u_index % 3 {
                    0 => {
                        let i = u_index / 3;
                        let c = (-&(&qint_rf(i, m) * &qint_rf(i + 1, m)))
                            .checked_div(&RatFunc::from_poly(r_signed(m, i as i64 - 1)))?;
                        PolyQ::constant(c)
                    }
                    1 => u_from_denominator(&alpha_poly(m)?)?,
                    _ => {
                        let i = (u_index - 2) / 3;
                        let c = (&qint_rf(i + 1, m) * &qint_rf(i + 2, m))
                            .checked_div(&RatFunc::from_poly(r_signed(m, i as i64)))?;
                        PolyQ::constant(c)
                    }
                };
                Quotient { k, v, u }
            }
        };
        quotients.push(quot);
    }
    let h = HFraction {
        quotients,
        delta: 2,
        status: ExpansionStatus::MaxTermsReached,
    };
    h.check_invariants()?;
    Ok(h)
}
