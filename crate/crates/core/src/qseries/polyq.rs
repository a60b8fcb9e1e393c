//! Dense polynomials in `q` with coefficients in Q(t).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::{push_term, scalar_term, RatFunc};

/// A polynomial in `q` over Q(t), ascending coefficients, trailing nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyQ {
    coeffs: Vec<RatFunc>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().map_or(false, RatFunc::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(RatFunc::one())
    }

    pub fn constant(c: RatFunc) -> Self {
        if c.is_zero() {
            PolyQ::zero()
        } else {
            PolyQ { coeffs: vec![c] }
        }
    }

    /// `c * q^e`.
    pub fn monomial(c: RatFunc, e: usize) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![RatFunc::zero(); e + 1];
        coeffs[e] = c;
        PolyQ { coeffs }
    }

    /// The variable `q`.
    pub fn var() -> Self {
        PolyQ::monomial(RatFunc::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> RatFunc {
        self.coeffs.get(i).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> RatFunc {
        self.coeff(0)
    }

    /// Degree of the lowest nonzero coefficient; None for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, s: &RatFunc) -> Self {
        if s.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift_up(&self, e: usize) -> Self {
        if self.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![RatFunc::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyQ { coeffs }
    }

    /// Exact division by `q^e`; fails if any of the low `e` coefficients is
    /// nonzero.
    pub fn exact_div_qpow(&self, e: usize) -> Result<Self> {
        if self.is_zero() {
            return Ok(PolyQ::zero());
        }
        if self.coeffs.len() < e || self.coeffs[..e].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible(e));
        }
        Ok(PolyQ {
            coeffs: self.coeffs[e..].to_vec(),
        })
    }

    /// Truncation to degrees < `order`.
    pub fn truncated(&self, order: usize) -> Self {
        PolyQ::new(self.coeffs.iter().take(order).cloned().collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = PolyQ::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

impl Add<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolyQ::new(out)
    }
}

macro_rules! polyq_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: &PolyQ) -> PolyQ {
                (&self).$method(rhs)
            }
        }
    };
}

polyq_owned_binop!(Add, add);
polyq_owned_binop!(Sub, sub);
polyq_owned_binop!(Mul, mul);

/// Renders one `q`-term; compound Q(t) coefficients are parenthesized so the
/// output stays unambiguous.
pub(crate) fn qterm(c: &RatFunc, e: usize) -> String {
    if let Some(r) = c.as_rational() {
        return scalar_term(&r, "q", e);
    }
    let coeff = format!("({c})");
    match e {
        0 => coeff,
        1 => format!("{coeff}*q"),
        _ => format!("{coeff}*q^{e}"),
    }
}

pub(crate) fn render_qpoly(coeffs: &[RatFunc]) -> String {
    let mut out = String::new();
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        push_term(&mut out, &qterm(c, e));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_qpoly(&self.coeffs))
    }
}
