//! Truncated power series in `q` over Q(t).
//!
//! A series stores exact coefficients for degrees `0..order` and asserts
//! nothing about degrees `>= order`. The truncation order is carried
//! explicitly and strictly: operations that would consume more precision
//! than available fail loudly instead of silently zero-padding.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::RatFunc;
use crate::qseries::polyq::{render_qpoly, PolyQ};

/// A power series known exactly modulo `q^order`, `order >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesQ {
    coeffs: Vec<RatFunc>,
}

impl SeriesQ {
    /// Builds a series from the coefficients of degrees `0..len`; the order
    /// is the length. Panics on an empty list.
    pub fn new(coeffs: Vec<RatFunc>) -> Self {
        assert!(!coeffs.is_empty(), "series order must be at least 1");
        SeriesQ { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        SeriesQ::new(vec![RatFunc::zero(); order.max(1)])
    }

    pub fn one(order: usize) -> Self {
        SeriesQ::from_polyq(&PolyQ::one(), order)
    }

    /// Truncates a polynomial to a series of the given order.
    pub fn from_polyq(p: &PolyQ, order: usize) -> Self {
        let order = order.max(1);
        let mut coeffs: Vec<RatFunc> = (0..order.min(p.coeffs().len()))
            .map(|i| p.coeff(i))
            .collect();
        coeffs.resize(order, RatFunc::zero());
        SeriesQ { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &RatFunc {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    /// Degree of the lowest nonzero stored coefficient; None when the series
    /// is zero through its whole order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when every stored coefficient is zero.
    pub fn is_zero_to_order(&self) -> bool {
        self.valuation().is_none()
    }

    /// Valuation bound used for precision accounting: the valuation, or the
    /// full order when the series is zero through its order.
    fn val_bound(&self) -> usize {
        self.valuation().unwrap_or(self.order())
    }

    /// Restriction to a smaller order. Panics if more precision is requested
    /// than available.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(
            1 <= order && order <= self.order(),
            "truncation order {order} out of range 1..={}",
            self.order()
        );
        SeriesQ::new(self.coeffs[..order].to_vec())
    }

    pub fn scale(&self, s: &RatFunc) -> Self {
        SeriesQ::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplies by a polynomial. The result order is valuation-aware:
    /// `order + val(p)`, capped only by exactness of the inputs.
    pub fn mul_polyq(&self, p: &PolyQ) -> Self {
        let Some(vp) = p.valuation() else {
            return SeriesQ::zero(self.order());
        };
        let order = self.order() + vp;
        let mut out = vec![RatFunc::zero(); order];
        for (i, a) in p.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.coeffs.iter().enumerate() {
                if i + j >= order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        SeriesQ::new(out)
    }

    /// Multiplicative inverse to the same order; the constant term must be a
    /// unit.
    pub fn invert(&self) -> Result<SeriesQ> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NotAUnit);
        }
        let a0_inv = self.coeffs[0].inv()?;
        let n = self.order();
        let mut out = Vec::with_capacity(n);
        out.push(a0_inv.clone());
        for d in 1..n {
            let mut acc = RatFunc::zero();
            for k in 1..=d {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &out[d - k]);
            }
            out.push(-&(&acc * &a0_inv));
        }
        Ok(SeriesQ::new(out))
    }

    /// Multiplies by `q^e` (negative `e` divides). Division requires the low
    /// `-e` coefficients to be zero and enough remaining order.
    pub fn shift(&self, e: i64) -> Result<SeriesQ> {
        if e >= 0 {
            let e = e as usize;
            let mut coeffs = vec![RatFunc::zero(); e];
            coeffs.extend(self.coeffs.iter().cloned());
            return Ok(SeriesQ::new(coeffs));
        }
        let k = (-e) as usize;
        if self.order() <= k {
            return Err(Error::InsufficientOrder {
                needed: k + 1,
                available: self.order(),
            });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible(k));
        }
        Ok(SeriesQ::new(self.coeffs[k..].to_vec()))
    }

    /// Exact truncated power by repeated squaring; `pow(a, 0) = 1`.
    pub fn pow(&self, m: usize) -> SeriesQ {
        if m == 0 {
            return SeriesQ::one(self.order());
        }
        if m == 1 {
            return self.clone();
        }
        let half = self.pow(m / 2);
        let sq = &half * &half;
        if m % 2 == 0 {
            sq
        } else {
            &sq * self
        }
    }

    /// The polynomial formed by the stored coefficients.
    pub fn to_polyq(&self) -> PolyQ {
        PolyQ::new(self.coeffs.clone())
    }
}

impl Neg for &SeriesQ {
    type Output = SeriesQ;
    fn neg(self) -> SeriesQ {
        SeriesQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for SeriesQ {
    type Output = SeriesQ;
    fn neg(self) -> SeriesQ {
        -&self
    }
}

impl Add<&SeriesQ> for &SeriesQ {
    type Output = SeriesQ;
    fn add(self, rhs: &SeriesQ) -> SeriesQ {
        let order = self.order().min(rhs.order());
        SeriesQ::new(
            (0..order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        )
    }
}

impl Sub<&SeriesQ> for &SeriesQ {
    type Output = SeriesQ;
    fn sub(self, rhs: &SeriesQ) -> SeriesQ {
        let order = self.order().min(rhs.order());
        SeriesQ::new(
            (0..order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        )
    }
}

impl Mul<&SeriesQ> for &SeriesQ {
    type Output = SeriesQ;
    fn mul(self, rhs: &SeriesQ) -> SeriesQ {
        // With a = O(q^Oa) exact and b = O(q^Ob) exact, the product is exact
        // through min(Oa + val(b), Ob + val(a)).
        let order = (self.order() + rhs.val_bound()).min(rhs.order() + self.val_bound());
        let mut out = vec![RatFunc::zero(); order.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= order {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        SeriesQ::new(out)
    }
}

macro_rules! series_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<SeriesQ> for SeriesQ {
            type Output = SeriesQ;
            fn $method(self, rhs: SeriesQ) -> SeriesQ {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&SeriesQ> for SeriesQ {
            type Output = SeriesQ;
            fn $method(self, rhs: &SeriesQ) -> SeriesQ {
                (&self).$method(rhs)
            }
        }
    };
}

series_owned_binop!(Add, add);
series_owned_binop!(Sub, sub);
series_owned_binop!(Mul, mul);

impl fmt::Display for SeriesQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", render_qpoly(&self.coeffs), self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> RatFunc {
        RatFunc::from_integer(n)
    }

    fn series(coeffs: &[i64], order: usize) -> SeriesQ {
        let p = PolyQ::new(coeffs.iter().map(|&n| c(n)).collect());
        SeriesQ::from_polyq(&p, order)
    }

    #[test]
    fn mul_examples() {
        // (1+q)(1-q) = 1 - q^2 at order 5
        let prod = &series(&[1, 1], 5) * &series(&[1, -1], 5);
        assert_eq!(prod, series(&[1, 0, -1], 5));
        assert_eq!(&series(&[0, 1], 5) + &series(&[0, 1], 5), series(&[0, 2], 5));
    }

    #[test]
    fn mul_is_valuation_aware() {
        let a = series(&[0, 1], 5); // q + O(q^5)
        let b = series(&[0, 1, 1], 5); // q + q^2 + O(q^5)
        let prod = &a * &b;
        assert_eq!(prod.order(), 6);
        assert_eq!(prod, series(&[0, 0, 1, 1], 6));
    }

    #[test]
    fn invert_geometric() {
        let inv = series(&[1, -1], 6).invert().unwrap();
        assert_eq!(inv, series(&[1, 1, 1, 1, 1, 1], 6));
        assert_eq!(SeriesQ::one(4).invert().unwrap(), SeriesQ::one(4));
        assert_eq!(series(&[0, 1], 4).invert(), Err(Error::NotAUnit));
    }

    #[test]
    fn shift_examples() {
        let a = series(&[0, 0, 1, 1], 4); // q^2 + q^3
        assert_eq!(a.shift(-2).unwrap(), series(&[1, 1], 2));
        assert_eq!(SeriesQ::one(3).shift(3).unwrap(), series(&[0, 0, 0, 1], 6));
        assert_eq!(series(&[0, 1], 4).shift(-2), Err(Error::NotDivisible(2)));
        assert!(matches!(
            series(&[0], 1).shift(-1),
            Err(Error::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn shift_round_trip() {
        let a = series(&[1, 2, 3], 7);
        assert_eq!(a.shift(3).unwrap().shift(-3).unwrap(), a);
    }

    #[test]
    fn pow_examples() {
        assert_eq!(series(&[1, 1], 5).pow(2), series(&[1, 2, 1], 5));
        assert_eq!(series(&[1, 7], 5).pow(0), SeriesQ::one(5));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = series(&[0, 1, 5, -2], 9);
        for m in 1..=6 {
            let mut acc = a.clone();
            for _ in 1..m {
                acc = &acc * &a;
            }
            assert_eq!(a.pow(m), acc);
        }
    }

    #[test]
    fn invert_round_trip_on_random_units() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..50 {
            let order = rng.gen_range(2..10);
            let mut coeffs: Vec<RatFunc> = (0..order)
                .map(|_| {
                    RatFunc::from_rational(crate::exactnum::Rational::from_ratio(
                        rng.gen_range(-5..=5),
                        rng.gen_range(1..=4),
                    ))
                })
                .collect();
            coeffs[0] = c(rng.gen_range(1..=5));
            let a = SeriesQ::new(coeffs);
            let prod = &a * &a.invert().unwrap();
            assert_eq!(prod, SeriesQ::one(order));
        }
    }

    #[test]
    fn valuation_additivity() {
        let a = series(&[0, 0, 3, 1], 9);
        let b = series(&[0, 2, 1], 9);
        let prod = &a * &b;
        assert_eq!(prod.valuation(), Some(3));
        assert_eq!(a.valuation().unwrap() + b.valuation().unwrap(), 3);
    }

    #[test]
    fn display_marker() {
        assert_eq!(series(&[1, 0, -1], 5).to_string(), "1 - q^2 + O(q^5)");
        assert_eq!(SeriesQ::zero(3).to_string(), "0 + O(q^3)");
    }
}
