//! Generators for the Narayana polynomials, their generating function,
//! convolution powers, the four shifted determinant families, and integer
//! helper sequences.
//!
//! The generating function gamma(t,q) = sum_n gamma_n(t) q^n satisfies
//! -1 + (1 - q + t*q) gamma - t*q gamma^2 = 0, and the convolution powers are
//! defined through G(t,q) = (gamma - 1)/q: even orders 2m have generating
//! function G^m, odd orders 2m+1 have gamma * G^m.

use num::bigint::BigInt;
use num::traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, PolyT, RatFunc, Rational};
use crate::qseries::SeriesQ;

/// One of the four shifted determinant families: the series
/// `(gamma(t,q) - 1)^m / q^shift` with `0 <= shift <= 3 <= ... <= m`.
///
/// Its Hankel entries are the convolution powers `gamma^(2m)_{i+shift-m}`
/// with the zero convention for negative subscripts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    m: usize,
    shift: usize,
}

impl FamilySpec {
    /// Requires `shift <= 3`, `m >= 1`, and `m >= shift` (nonnegative
    /// valuation of the family series).
    pub fn new(m: usize, shift: usize) -> Result<Self> {
        if shift > 3 {
            return Err(Error::InvalidParameter(format!(
                "shift must be at most 3, got {shift}"
            )));
        }
        if m < 1 || m < shift {
            return Err(Error::InvalidParameter(format!(
                "family requires m >= max(1, shift); got m={m}, shift={shift}"
            )));
        }
        Ok(FamilySpec { m, shift })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn shift(&self) -> usize {
        self.shift
    }
}

/// n-th Narayana polynomial by the double-binomial formula
/// `sum_k C(n,k) C(n-1,k) t^k / (k+1)`, with the n = 0 value pinned to 1.
pub fn narayana_poly(n: usize) -> PolyT {
    if n == 0 {
        return PolyT::one();
    }
    let n = n as u64;
    let coeffs = (0..n)
        .map(|k| {
            Rational::new(
                binomial(n, k) * binomial(n - 1, k),
                BigInt::from(k + 1),
            )
            .expect("k + 1 > 0")
        })
        .collect();
    PolyT::new(coeffs)
}

/// The generating function gamma(t,q) to the given order, by the coefficient
/// recursion extracted from its quadratic equation:
/// `g_0 = 1`, `g_n = (1 - t) g_{n-1} + t * sum_{i<n} g_i g_{n-1-i}`.
pub fn narayana_series(order: usize) -> SeriesQ {
    let order = order.max(1);
    let t = PolyT::var();
    let one_minus_t = &PolyT::one() - &t;
    let mut g: Vec<PolyT> = Vec::with_capacity(order);
    g.push(PolyT::one());
    for n in 1..order {
        let mut conv = PolyT::zero();
        for i in 0..n {
            conv = &conv + &(&g[i] * &g[n - 1 - i]);
        }
        g.push(&(&one_minus_t * &g[n - 1]) + &(&t * &conv));
    }
    SeriesQ::new(g.into_iter().map(RatFunc::from_poly).collect())
}

/// First `count` convolution powers `gamma^(tau)_0 .. gamma^(tau)_{count-1}`.
pub fn conv_power_seq(tau: usize, count: usize) -> Result<Vec<PolyT>> {
    if tau < 1 {
        return Err(Error::InvalidParameter(
            "convolution order tau must be at least 1".into(),
        ));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let m = tau / 2;
    // G = (gamma - 1)/q needs one extra order; the power of G keeps it.
    let gamma = narayana_series(count + 1);
    let g = (&gamma - &SeriesQ::one(count + 1)).shift(-1)?;
    let series = if tau % 2 == 0 {
        g.pow(m)
    } else {
        &gamma * &g.pow(m)
    };
    debug_assert!(series.order() >= count);
    Ok((0..count)
        .map(|n| {
            series.coeff(n).as_poly().cloned().unwrap_or_else(|| {
                unreachable!("convolution powers are polynomials in t")
            })
        })
        .collect())
}

/// The family series `(gamma - 1)^m / q^shift` to the given order.
pub fn family_series(spec: &FamilySpec, order: usize) -> SeriesQ {
    let order = order.max(1);
    // (gamma - 1)^m gains m - 1 orders from its valuation, then loses shift.
    let base = (order + 1 + spec.shift).saturating_sub(spec.m).max(2);
    let gamma = narayana_series(base);
    let pow = (&gamma - &SeriesQ::one(base)).pow(spec.m);
    let shifted = pow.shift(-(spec.shift as i64)).expect("valuation m >= shift");
    debug_assert!(shifted.order() >= order);
    shifted.truncated(order)
}

/// Entries `gamma^(2m)_{i+shift-m}` of a family, zero for negative subscripts.
pub fn family_entry(spec: &FamilySpec, i: i64) -> PolyT {
    let sub = i + spec.shift as i64 - spec.m as i64;
    if sub < 0 {
        return PolyT::zero();
    }
    conv_power_seq(2 * spec.m, sub as usize + 1)
        .expect("tau >= 2")
        .pop()
        .expect("count >= 1")
}

/// Entries 0..count-1 of a family in one pass.
pub fn family_entries(spec: &FamilySpec, count: usize) -> Vec<PolyT> {
    let needed = (count as i64 + spec.shift as i64 - spec.m as i64).max(0) as usize;
    let powers = conv_power_seq(2 * spec.m, needed).expect("tau >= 2");
    (0..count as i64)
        .map(|i| {
            let sub = i + spec.shift as i64 - spec.m as i64;
            if sub < 0 {
                PolyT::zero()
            } else {
                powers[sub as usize].clone()
            }
        })
        .collect()
}

/// Fibonacci numbers with F_0 = 0, F_1 = 1, pinned so that the 1x1
/// consecutive-Catalan determinant c_0 + c_1 = 2 equals F_3.
pub fn fibonacci_number(n: usize) -> BigInt {
    let mut a = BigInt::zero();
    let mut b = BigInt::from(1);
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::catalan_number;
    use crate::qseries::PolyQ;

    #[test]
    fn narayana_initial_terms() {
        assert_eq!(narayana_poly(0), PolyT::one());
        assert_eq!(narayana_poly(1), PolyT::one());
        assert_eq!(narayana_poly(2), PolyT::from_ints(&[1, 1]));
        assert_eq!(narayana_poly(4), PolyT::from_ints(&[1, 6, 6, 1]));
        assert_eq!(narayana_poly(5), PolyT::from_ints(&[1, 10, 20, 10, 1]));
    }

    #[test]
    fn narayana_specializes_to_catalan() {
        for n in 0..12u64 {
            assert_eq!(
                narayana_poly(n as usize).eval(&Rational::one()),
                Rational::from_bigint(catalan_number(n))
            );
        }
    }

    #[test]
    fn series_matches_binomial_formula() {
        let s = narayana_series(10);
        for n in 0..10 {
            assert_eq!(s.coeff(n).as_poly().unwrap(), &narayana_poly(n));
        }
    }

    #[test]
    fn series_satisfies_quadratic() {
        let order = 18;
        let gamma = narayana_series(order);
        let t = RatFunc::var();
        // -1 + (1 - q + tq) gamma - tq gamma^2
        let linear = PolyQ::new(vec![RatFunc::one(), &t - &RatFunc::one()]);
        let tq = PolyQ::monomial(t, 1);
        let residual = &(&gamma.mul_polyq(&linear) - &(&gamma * &gamma).mul_polyq(&tq))
            - &SeriesQ::one(order);
        assert!(residual.is_zero_to_order());
        assert!(residual.order() >= order);
    }

    #[test]
    fn conv_powers_tau_one_is_narayana() {
        let seq = conv_power_seq(1, 8).unwrap();
        for (n, p) in seq.iter().enumerate() {
            assert_eq!(p, &narayana_poly(n));
        }
        // G has constant term 1, so every even power starts at 1.
        assert_eq!(conv_power_seq(6, 1).unwrap()[0], PolyT::one());
    }

    #[test]
    fn gamma_squared_low_coefficients() {
        // By hand: (sum g_n q^n)^2 has q^2 coefficient 2 g_2 + g_1^2 = 3 + 2t.
        let gamma = narayana_series(6);
        let sq = &gamma * &gamma;
        assert_eq!(sq.coeff(0), &RatFunc::one());
        assert_eq!(sq.coeff(1), &RatFunc::from_integer(2));
        assert_eq!(sq.coeff(2), &RatFunc::from_poly(PolyT::from_ints(&[3, 2])));
    }

    #[test]
    fn conv_powers_at_one_count_lattice_paths() {
        // gamma^(tau)_n(1) = tau/(2n+tau) * C(2n+tau, n)
        for tau in 1..=8usize {
            let seq = conv_power_seq(tau, 7).unwrap();
            for (n, p) in seq.iter().enumerate() {
                let n_u = n as u64;
                let tau_u = tau as u64;
                let expect = Rational::new(
                    BigInt::from(tau_u) * binomial(2 * n_u + tau_u, n_u),
                    BigInt::from(2 * n_u + tau_u),
                )
                .unwrap();
                assert_eq!(p.eval(&Rational::one()), expect, "tau={tau} n={n}");
            }
        }
    }

    #[test]
    fn conv_power_generating_function_consistency() {
        // sum gamma^(2m)_n q^n * q^m = (gamma - 1)^m
        let order = 14;
        for m in 1..=5 {
            let gamma = narayana_series(order + m);
            let pow = (&gamma - &SeriesQ::one(order + m)).pow(m);
            let seq = conv_power_seq(2 * m, order).unwrap();
            for (n, p) in seq.iter().enumerate() {
                assert_eq!(
                    pow.coeff(n + m),
                    &RatFunc::from_poly(p.clone()),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn family_entry_matches_series_coefficient() {
        for (m, shift) in [(1, 0), (2, 2), (3, 1), (4, 3)] {
            let spec = FamilySpec::new(m, shift).unwrap();
            let series = family_series(&spec, 9);
            let entries = family_entries(&spec, 9);
            for i in 0..9 {
                assert_eq!(series.coeff(i), &RatFunc::from_poly(entries[i].clone()));
                assert_eq!(entries[i], family_entry(&spec, i as i64));
            }
        }
    }

    #[test]
    fn family_entry_examples() {
        let spec = FamilySpec::new(2, 2).unwrap();
        assert_eq!(family_entry(&spec, 0), PolyT::one());
        assert_eq!(
            family_entry(&spec, 1).eval(&Rational::one()),
            Rational::from_integer(4)
        );
        let spec30 = FamilySpec::new(3, 0).unwrap();
        assert!(family_entry(&spec30, 0).is_zero());
        assert!(!family_entry(&spec30, 3).is_zero());
    }

    #[test]
    fn family_entry_at_one_matches_integer_formula() {
        for (m, shift) in [(1usize, 1usize), (2, 0), (2, 2), (3, 3), (4, 2)] {
            let spec = FamilySpec::new(m, shift).unwrap();
            for i in 0..10i64 {
                let n = i + shift as i64 - m as i64;
                let value = family_entry(&spec, i).eval(&Rational::one());
                if n < 0 {
                    assert!(value.is_zero());
                } else {
                    let n = n as u64;
                    let tau = 2 * m as u64;
                    let expect = Rational::new(
                        BigInt::from(tau) * binomial(2 * n + tau, n),
                        BigInt::from(2 * n + tau),
                    )
                    .unwrap();
                    assert_eq!(value, expect);
                }
            }
        }
    }

    #[test]
    fn family_spec_preconditions() {
        assert!(FamilySpec::new(2, 3).is_err());
        assert!(FamilySpec::new(0, 0).is_err());
        assert!(FamilySpec::new(3, 4).is_err());
        assert!(FamilySpec::new(3, 3).is_ok());
    }

    #[test]
    fn fibonacci_normalization() {
        let f: Vec<i64> = (0..10).map(|n| {
            let b: BigInt = fibonacci_number(n);
            i64::try_from(&b).unwrap()
        }).collect();
        assert_eq!(f, vec![0, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
        // Anchor: the 1x1 consecutive-Catalan determinant is 2 = F_3.
        assert_eq!(fibonacci_number(3), BigInt::from(2));
        assert_eq!(fibonacci_number(7), BigInt::from(13));
    }
}
