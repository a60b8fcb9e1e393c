//! Arbitrary-precision rational numbers, the coefficient ground field.
//!
//! Canonical form: gcd(|numerator|, denominator) = 1, denominator >= 1,
//! zero is 0/1. Backed by `num::BigRational`, which maintains exactly this
//! normalization.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number in canonical reduced form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in canonical form. Fails on a zero denominator.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `a/b` from machine integers; panics on b = 0.
    pub fn from_ratio(a: i64, b: i64) -> Self {
        assert!(b != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(a), BigInt::from(b)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power with negative exponents allowed (base must be nonzero
    /// for negative exponents).
    pub fn pow(&self, e: i32) -> Self {
        if e == 0 {
            return Rational::one();
        }
        if e < 0 {
            assert!(!self.is_zero(), "zero base with negative exponent");
        }
        Rational(num::traits::Pow::pow(&self.0, e))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

/// Division panics on zero divisors; use [`Rational::checked_div`] where the
/// divisor is not known to be nonzero.
impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// n-th Catalan number C(2n, n)/(n + 1).
pub fn catalan_number(n: u64) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// Sign (-1)^e as a BigInt-friendly rational.
pub fn neg_one_pow(e: u64) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub use num::bigint::BigInt as Integer;

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::from_ratio(a, b)
    }

    #[test]
    fn canonical_form() {
        let x = q(4, -6);
        assert_eq!(x, q(-2, 3));
        assert_eq!(x.numerator(), &BigInt::from(-2));
        assert_eq!(x.denominator(), &BigInt::from(3));
        assert_eq!(q(0, 5), Rational::zero());
        assert_eq!(q(0, 5).denominator(), &BigInt::from(1));
    }

    #[test]
    fn field_ops() {
        let a = q(1, 2);
        let b = q(1, 3);
        assert_eq!(&a + &b, q(5, 6));
        assert_eq!(&a - &b, q(1, 6));
        assert_eq!(&a * &b, q(1, 6));
        assert_eq!(a.checked_div(&b).unwrap(), q(3, 2));
        assert_eq!(a.inv().unwrap(), q(2, 1));
        assert!(Rational::zero().inv().is_err());
        assert_eq!(q(-2, 3).pow(-2), q(9, 4));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(catalan_number(6), BigInt::from(132));
    }

    #[test]
    fn display() {
        assert_eq!(q(3, 1).to_string(), "3");
        assert_eq!(q(-3, 2).to_string(), "-3/2");
        assert_eq!(Rational::zero().to_string(), "0");
    }
}
