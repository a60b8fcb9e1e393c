//! The rational-function field Q(t).
//!
//! Canonical form: denominator nonzero and monic, gcd(num, den) = 1, zero is
//! 0/1. Equality is therefore structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::polyt::{polyt_gcd, PolyT};
use crate::exactnum::rational::Rational;

/// An element of Q(t) in canonical reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: PolyT,
    den: PolyT,
}

impl RatFunc {
    /// Builds `num/den` in canonical form; fails on a zero denominator.
    pub fn new(num: PolyT, den: PolyT) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: PolyT, den: PolyT) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num: PolyT::zero(),
                den: PolyT::one(),
            };
        }
        if den.is_constant() {
            let inv = den.leading_coeff().inv().expect("nonzero denominator");
            return RatFunc {
                num: num.scale(&inv),
                den: PolyT::one(),
            };
        }
        let g = polyt_gcd(&num, &den).expect("not both zero");
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        Self::monic_pair(num, den)
    }

    /// Assembles an already-coprime pair, normalizing the denominator to be
    /// monic. Skips the gcd that `normalized` would redo.
    fn monic_pair(mut num: PolyT, mut den: PolyT) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num: PolyT::zero(),
                den: PolyT::one(),
            };
        }
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            num = num.scale(&inv);
            den = if den.is_constant() {
                PolyT::one()
            } else {
                den.scale(&inv)
            };
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: PolyT) -> Self {
        RatFunc {
            num: p,
            den: PolyT::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RatFunc::from_poly(PolyT::constant(c))
    }

    pub fn from_integer(n: i64) -> Self {
        RatFunc::from_rational(Rational::from_integer(n))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(PolyT::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(PolyT::one())
    }

    /// The variable `t`.
    pub fn var() -> Self {
        RatFunc::from_poly(PolyT::var())
    }

    /// `(-t)^e`.
    pub fn neg_t_pow(e: usize) -> Self {
        let sign = if e % 2 == 0 { 1 } else { -1 };
        RatFunc::from_poly(PolyT::monomial(Rational::from_integer(sign), e))
    }

    /// `t^e`.
    pub fn t_pow(e: usize) -> Self {
        RatFunc::from_poly(PolyT::monomial(Rational::one(), e))
    }

    pub fn num(&self) -> &PolyT {
        &self.num
    }

    pub fn den(&self) -> &PolyT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&PolyT> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Some(c) when the value is a rational constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // num and den are already coprime.
        Ok(Self::monic_pair(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = RatFunc::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a rational point; None at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).checked_div(&d).expect("nonzero"))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RatFunc {
            num: self.num.scale(s),
            den: if s.is_zero() {
                PolyT::one()
            } else {
                self.den.clone()
            },
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Henrici's scheme: with g0 = gcd(d1, d2), the only reduction the sum
        // needs is against g0, never against the full denominator product.
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            let t = &self.num + &rhs.num;
            if t.is_zero() {
                return RatFunc::zero();
            }
            let g1 = polyt_gcd(&t, &self.den).expect("not both zero");
            return if g1.is_one() {
                RatFunc::monic_pair(t, self.den.clone())
            } else {
                RatFunc::monic_pair(
                    t.exact_div(&g1).expect("gcd divides"),
                    self.den.exact_div(&g1).expect("gcd divides"),
                )
            };
        }
        let g0 = polyt_gcd(&self.den, &rhs.den).expect("nonzero denominators");
        if g0.is_one() {
            return RatFunc::monic_pair(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        let d1p = self.den.exact_div(&g0).expect("gcd divides");
        let d2p = rhs.den.exact_div(&g0).expect("gcd divides");
        let t = &(&self.num * &d2p) + &(&rhs.num * &d1p);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let g1 = polyt_gcd(&t, &g0).expect("not both zero");
        if g1.is_one() {
            RatFunc::monic_pair(t, &d1p * &rhs.den)
        } else {
            RatFunc::monic_pair(
                t.exact_div(&g1).expect("gcd divides"),
                &d1p * &rhs.den.exact_div(&g1).expect("gcd divides"),
            )
        }
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-reduce; afterwards numerator and denominator are coprime by
        // construction and no further gcd is needed.
        let g1 = if self.den.is_one() {
            PolyT::one()
        } else {
            polyt_gcd(&rhs.num, &self.den).expect("not both zero")
        };
        let g2 = if rhs.den.is_one() {
            PolyT::one()
        } else {
            polyt_gcd(&self.num, &rhs.den).expect("not both zero")
        };
        let n1 = if g2.is_one() {
            self.num.clone()
        } else {
            self.num.exact_div(&g2).expect("gcd divides")
        };
        let n2 = if g1.is_one() {
            rhs.num.clone()
        } else {
            rhs.num.exact_div(&g1).expect("gcd divides")
        };
        let d1 = if g1.is_one() {
            self.den.clone()
        } else {
            self.den.exact_div(&g1).expect("gcd divides")
        };
        let d2 = if g2.is_one() {
            rhs.den.clone()
        } else {
            rhs.den.exact_div(&g2).expect("gcd divides")
        };
        RatFunc::monic_pair(&n1 * &n2, &d1 * &d2)
    }
}

macro_rules! ratfunc_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
    };
}

ratfunc_owned_binop!(Add, add);
ratfunc_owned_binop!(Sub, sub);
ratfunc_owned_binop!(Mul, mul);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> PolyT {
        PolyT::from_ints(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn add_example() {
        // t + (1 - t) = 1
        let a = RatFunc::from_poly(p(&[0, 1]));
        let b = RatFunc::from_poly(p(&[1, -1]));
        assert_eq!(&a + &b, RatFunc::one());
    }

    #[test]
    fn mul_example_monic_denominator() {
        // 1/(1-t) * 1/(1+t) = (-1)/(t^2 - 1), sign carried into the numerator.
        let a = rf(&[1], &[1, -1]);
        let b = rf(&[1], &[1, 1]);
        let prod = &a * &b;
        assert_eq!(prod.num(), &p(&[-1]));
        assert_eq!(prod.den(), &p(&[-1, 0, 1]));
        assert_eq!(prod.to_string(), "(-1) / (-1 + t^2)");
    }

    #[test]
    fn sub_self_is_zero() {
        let x = rf(&[1, 2, 3], &[1, 0, 5]);
        assert_eq!(&x - &x, RatFunc::zero());
        assert_eq!((&x - &x).den(), &PolyT::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let x = rf(&[1], &[1, 1]);
        assert_eq!(x.checked_div(&RatFunc::zero()), Err(Error::DivisionByZero));
        assert_eq!(RatFunc::new(p(&[1]), PolyT::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn normalization_is_idempotent() {
        let x = rf(&[0, 2, 2], &[0, 0, 4]); // (2t + 2t^2) / 4t^2 = (1 + t) / 2t
        let y = RatFunc::new(x.num().clone(), x.den().clone()).unwrap();
        assert_eq!(x, y);
        assert!(x.den().is_monic());
        assert!(polyt_gcd(x.num(), x.den()).unwrap().is_one());
    }

    #[test]
    fn eval_and_poles() {
        let x = rf(&[1], &[-1, 1]); // 1/(t-1)
        assert_eq!(x.eval(&Rational::from_integer(1)), None);
        assert_eq!(
            x.eval(&Rational::from_integer(3)),
            Some(Rational::from_ratio(1, 2))
        );
    }

    #[test]
    fn display_polynomial_case() {
        assert_eq!(rf(&[1, 3, 1], &[1]).to_string(), "1 + 3*t + t^2");
        assert_eq!(RatFunc::zero().to_string(), "0");
    }
}
