//! Dense univariate polynomials in `t` over the rationals.
//!
//! Coefficients are stored ascending by degree; the trailing coefficient is
//! nonzero unless the polynomial is the canonical empty-list zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::intpoly::{ip_gcd_primitive, ip_mul, ip_try_exact_div};
use crate::exactnum::rational::Rational;

/// A polynomial in `t` with [`Rational`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyT {
    coeffs: Vec<Rational>,
}

impl PolyT {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, Rational::is_zero) {
            coeffs.pop();
        }
        PolyT { coeffs }
    }

    pub fn zero() -> Self {
        PolyT { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyT::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            PolyT::zero()
        } else {
            PolyT { coeffs: vec![c] }
        }
    }

    /// The variable `t`.
    pub fn var() -> Self {
        PolyT::monomial(Rational::one(), 1)
    }

    /// `c * t^e`.
    pub fn monomial(c: Rational, e: usize) -> Self {
        if c.is_zero() {
            return PolyT::zero();
        }
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = c;
        PolyT { coeffs }
    }

    /// Convenience constructor from small integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        PolyT::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; zero polynomial reports 0 (check [`PolyT::is_zero`] first
    /// where the distinction matters).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `t^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, Rational::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return PolyT::zero();
        }
        PolyT {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiplies by `t^e`.
    pub fn shift_up(&self, e: usize) -> Self {
        if self.is_zero() {
            return PolyT::zero();
        }
        let mut coeffs = vec![Rational::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyT { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = PolyT::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => PolyT::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor). Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &PolyT) -> (PolyT, PolyT) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (PolyT::zero(), self.clone());
        }
        let dlc_inv = divisor.leading_coeff().inv().expect("nonzero divisor");
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.degree() - dd + 1];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &dlc_inv;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let delta = &q * dc;
                rem[i - dd + j] = &rem[i - dd + j] - &delta;
            }
            quot[i - dd] = q;
        }
        (PolyT::new(quot), PolyT::new(rem))
    }

    /// Exact division; fails if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &PolyT) -> Result<PolyT> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(PolyT::zero());
        }
        if self.coeffs.len().min(divisor.coeffs.len()) >= INT_FAST_PATH_LEN {
            // By Gauss's lemma exact divisibility over Q transfers to the
            // primitive integer parts.
            let (fi, sf) = self.primitive_parts();
            let (gi, sg) = divisor.primitive_parts();
            return match ip_try_exact_div(&fi, &gi) {
                Some(q) => Ok(PolyT::from_integers(q)
                    .scale(&sf.checked_div(&sg).expect("nonzero factor"))),
                None => Err(Error::NotDivisible(divisor.degree())),
            };
        }
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible(divisor.degree()))
        }
    }

    fn from_integers(v: Vec<BigInt>) -> Self {
        PolyT::new(v.into_iter().map(Rational::from_bigint).collect())
    }

    /// Integer-coefficient image: `self = (sign-normalized primitive poly) * factor`
    /// with a primitive, positive-leading integer polynomial. Zero maps to
    /// an empty vector with factor 0.
    fn primitive_parts(&self) -> (Vec<BigInt>, Rational) {
        if self.is_zero() {
            return (Vec::new(), Rational::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = num::integer::lcm(den_lcm, c.denominator().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numerator() * (&den_lcm / c.denominator()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = num::integer::gcd(content, v.clone());
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|v| v / &content).collect();
        let factor = Rational::new(content, den_lcm).expect("nonzero lcm");
        (prim, factor)
    }
}

/// Monic greatest common divisor of two polynomials, not both zero.
///
/// Strips the shared power of `t`, then hands the primitive integer parts to
/// the modular gcd.
pub fn polyt_gcd(a: &PolyT, b: &PolyT) -> Result<PolyT> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeroPair);
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(PolyT::one());
    }
    let va = a.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
    let vb = b.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
    let shared = va.min(vb);
    // gcd(t^va a', t^vb b') = t^min(va,vb) gcd(a', b') with t dividing
    // neither stripped part.
    let (f, _) = PolyT::new(a.coeffs[va..].to_vec()).primitive_parts();
    let (g, _) = PolyT::new(b.coeffs[vb..].to_vec()).primitive_parts();
    let gcd = PolyT::from_integers(ip_gcd_primitive(&f, &g));
    Ok(gcd.monic().shift_up(shared))
}

/// Least common multiple, monic. Zero if either input is zero.
pub fn polyt_lcm(a: &PolyT, b: &PolyT) -> Result<PolyT> {
    if a.is_zero() || b.is_zero() {
        return Ok(PolyT::zero());
    }
    let g = polyt_gcd(a, b)?;
    Ok((&a.exact_div(&g)? * b).monic())
}

impl Neg for &PolyT {
    type Output = PolyT;
    fn neg(self) -> PolyT {
        PolyT {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for PolyT {
    type Output = PolyT;
    fn neg(self) -> PolyT {
        -&self
    }
}

impl Add<&PolyT> for &PolyT {
    type Output = PolyT;
    fn add(self, rhs: &PolyT) -> PolyT {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        PolyT::new(out)
    }
}

impl Sub<&PolyT> for &PolyT {
    type Output = PolyT;
    fn sub(self, rhs: &PolyT) -> PolyT {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) - &rhs.coeff(i));
        }
        PolyT::new(out)
    }
}

/// Above this many coefficients, multiplication and exact division run over
/// primitive integer polynomials, which avoids per-operation rational
/// normalization.
const INT_FAST_PATH_LEN: usize = 8;

impl Mul<&PolyT> for &PolyT {
    type Output = PolyT;
    fn mul(self, rhs: &PolyT) -> PolyT {
        if self.is_zero() || rhs.is_zero() {
            return PolyT::zero();
        }
        if self.coeffs.len().min(rhs.coeffs.len()) >= INT_FAST_PATH_LEN {
            let (fi, sf) = self.primitive_parts();
            let (gi, sg) = rhs.primitive_parts();
            return PolyT::from_integers(ip_mul(&fi, &gi)).scale(&(&sf * &sg));
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolyT::new(out)
    }
}

macro_rules! polyt_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<PolyT> for PolyT {
            type Output = PolyT;
            fn $method(self, rhs: PolyT) -> PolyT {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&PolyT> for PolyT {
            type Output = PolyT;
            fn $method(self, rhs: &PolyT) -> PolyT {
                (&self).$method(rhs)
            }
        }
    };
}

polyt_owned_binop!(Add, add);
polyt_owned_binop!(Sub, sub);
polyt_owned_binop!(Mul, mul);

impl fmt::Display for PolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_scalar_poly(&self.coeffs, "t"))
    }
}

/// Canonical rendering shared with the q-side polynomials: ascending terms,
/// bare integer coefficients, `a/b` for non-integers, `*` and `^`.
pub(crate) fn render_scalar_poly(coeffs: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = scalar_term(c, var, e);
        push_term(&mut out, &term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn scalar_term(c: &Rational, var: &str, e: usize) -> String {
    let base = match e {
        0 => return c.to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    };
    if c.is_one() {
        base
    } else if (-c).is_one() {
        format!("-{base}")
    } else {
        format!("{c}*{base}")
    }
}

pub(crate) fn push_term(out: &mut String, term: &str) {
    if out.is_empty() {
        out.push_str(term);
    } else if let Some(mag) = term.strip_prefix('-') {
        out.push_str(" - ");
        out.push_str(mag);
    } else {
        out.push_str(" + ");
        out.push_str(term);
    }
}
