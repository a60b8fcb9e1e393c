//! The basic explicit quantities: q-integers, the rho/beta/alpha polynomials,
//! the weighted sums S and R, and the Lucas and Fibonacci polynomial
//! families.
//!
//! Conventions (all in the variable `t` unless stated otherwise):
//! - `[n]_x = 1 + x + ... + x^(n-1)`;
//! - `rho(m; t, d)`, `0 <= d <= m`, the double-binomial sums with
//!   `rho(m; t, m) = 1 + t^m`;
//! - `beta(m; t, q) = sum_{d=0}^{m} rho(d) (-q)^d` and
//!   `alpha(m; t, q) = sum_{d=0}^{m-2} rho(d) (-q)^d`;
//! - `S(m; t, n)` and `R(m; t, n)`, both multiples of `m [m]_t`;
//! - Lucas polynomials `L_0 = 2`, `L_1 = x`, `L_n = x L_{n-1} + s L_{n-2}`;
//!   Fibonacci polynomials `F_0 = 0`, `F_1 = 1`, same recurrence.

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, PolyT, RatFunc, Rational};
use crate::qseries::PolyQ;

/// q-integer `[n]_(t^e) = 1 + t^e + ... + t^(e(n-1))` as a polynomial in `t`.
pub fn qint(n: usize, e: usize) -> PolyT {
    if n == 0 {
        return PolyT::zero();
    }
    let mut coeffs = vec![Rational::zero(); (n - 1) * e + 1];
    for i in 0..n {
        coeffs[i * e] = &coeffs[i * e] + &Rational::one();
    }
    PolyT::new(coeffs)
}

/// `m (1 - t^m)/(1 - t) = m [m]_t`.
pub(crate) fn m_qint(m: usize) -> PolyT {
    qint(m, 1).scale(&Rational::from_integer(m as i64))
}

/// The double-binomial polynomial rho(m; t, d), defined for 0 <= d <= m.
pub fn rho_poly(m: usize, d: usize) -> Result<PolyT> {
    if d > m {
        return Err(Error::InvalidParameter(format!(
            "rho requires d <= m, got d={d}, m={m}"
        )));
    }
    if d == m {
        return Ok(&PolyT::one() + &PolyT::monomial(Rational::one(), m));
    }
    let (m64, d64) = (m as u64, d as u64);
    let coeffs = (0..=d64)
        .map(|i| {
            Rational::new(
                BigInt::from(m64)
                    * BigInt::from(m64 - d64)
                    * binomial(m64 - d64 + i, i)
                    * binomial(m64 - i, d64 - i),
                BigInt::from((m64 - i) * (m64 - d64 + i)),
            )
            .expect("positive denominator")
        })
        .collect();
    Ok(PolyT::new(coeffs))
}

/// The equivalent single-prefactor form of rho for d < m, used as a
/// cross-check of the double-binomial sum.
pub fn rho_poly_alt(m: usize, d: usize) -> Result<PolyT> {
    if d >= m {
        return Err(Error::InvalidParameter(format!(
            "alternative rho form requires d < m, got d={d}, m={m}"
        )));
    }
    let (m64, d64) = (m as u64, d as u64);
    let coeffs = (0..=d64)
        .map(|i| {
            Rational::new(
                BigInt::from(m64)
                    * binomial(m64 - 1 - d64 + i, i)
                    * binomial(m64 - 1 - i, d64 - i),
                BigInt::from(m64 - d64),
            )
            .expect("positive denominator")
        })
        .collect();
    Ok(PolyT::new(coeffs))
}

/// `beta(m; t, q)`, a degree-m polynomial in q over Q(t), for m >= 1.
pub fn beta_poly(m: usize) -> Result<PolyQ> {
    if m < 1 {
        return Err(Error::InvalidParameter("beta requires m >= 1".into()));
    }
    let coeffs = (0..=m)
        .map(|d| {
            let rho = rho_poly(m, d)?;
            let signed = if d % 2 == 0 { rho } else { -rho };
            Ok(RatFunc::from_poly(signed))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyQ::new(coeffs))
}

/// `alpha(m; t, q)`, the truncation of beta to q-degree m - 2, for m >= 2.
/// (At m = 1 the sum is empty; no formula uses it there, so the call is
/// rejected.)
pub fn alpha_poly(m: usize) -> Result<PolyQ> {
    if m < 2 {
        return Err(Error::InvalidParameter("alpha requires m >= 2".into()));
    }
    let coeffs = (0..=m - 2)
        .map(|d| {
            let rho = rho_poly(m, d)?;
            let signed = if d % 2 == 0 { rho } else { -rho };
            Ok(RatFunc::from_poly(signed))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyQ::new(coeffs))
}

/// The square-weighted sum `S(m; t, n)`.
pub fn s_poly(m: usize, n: usize) -> PolyT {
    s_signed(m, n as i64)
}

/// The triangular-weighted sum `R(m; t, n)`.
pub fn r_poly(m: usize, n: usize) -> PolyT {
    r_signed(m, n as i64)
}

/// `R` at a possibly negative index; both sums are empty for n < 0.
pub(crate) fn r_signed(m: usize, n: i64) -> PolyT {
    if n < 0 {
        return PolyT::zero();
    }
    let n = n as usize;
    let mut inner = PolyT::zero();
    for i in 0..=n {
        let w = Rational::from_bigint(binomial(i as u64 + 2, 2));
        inner = &inner + &PolyT::monomial(w, m * i);
    }
    for i in n + 1..=2 * n {
        let w = Rational::from_bigint(binomial((2 * n - i) as u64 + 2, 2));
        inner = &inner + &PolyT::monomial(w, m * i);
    }
    &m_qint(m) * &inner
}

pub(crate) fn s_signed(m: usize, n: i64) -> PolyT {
    if n < 0 {
        return PolyT::zero();
    }
    let n = n as usize;
    let mut inner = PolyT::zero();
    for i in 0..=n {
        let w = Rational::from_integer(((i + 1) * (i + 1)) as i64);
        inner = &inner + &PolyT::monomial(w, m * i);
    }
    for i in n + 1..=2 * n {
        let w = Rational::from_integer(((2 * n - i + 1) * (2 * n - i + 1)) as i64);
        inner = &inner + &PolyT::monomial(w, m * i);
    }
    &m_qint(m) * &inner
}

/// Lucas polynomial `L_n(x, s)` by its defining sum, at polynomial arguments.
pub fn lucas_eval(n: usize, x: &PolyQ, s: &PolyQ) -> PolyQ {
    if n == 0 {
        return PolyQ::constant(RatFunc::from_integer(2));
    }
    let n64 = n as u64;
    let mut acc = PolyQ::zero();
    for i in 0..=(n / 2) as u64 {
        let w = Rational::new(
            binomial(n64 - i, i) * BigInt::from(n64),
            BigInt::from(n64 - i),
        )
        .expect("positive denominator");
        let term = s.pow(i as usize) * x.pow(n - 2 * i as usize);
        acc = acc + term.scale(&RatFunc::from_rational(w));
    }
    acc
}

/// Fibonacci polynomial `F_n(x, s)` by its defining sum.
pub fn fib_eval(n: usize, x: &PolyQ, s: &PolyQ) -> PolyQ {
    if n == 0 {
        return PolyQ::zero();
    }
    let n64 = n as u64;
    let mut acc = PolyQ::zero();
    for k in 0..=((n - 1) / 2) as u64 {
        let w = Rational::from_bigint(binomial(n64 - 1 - k, k));
        let term = s.pow(k as usize) * x.pow(n - 1 - 2 * k as usize);
        acc = acc + term.scale(&RatFunc::from_rational(w));
    }
    acc
}

/// `L_n` / `F_n` by the three-term recurrence, the independent route.
pub fn lucas_by_recurrence(n: usize, x: &PolyQ, s: &PolyQ) -> PolyQ {
    let mut prev = PolyQ::constant(RatFunc::from_integer(2));
    let mut cur = x.clone();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(x * &cur) + &(s * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

pub fn fib_by_recurrence(n: usize, x: &PolyQ, s: &PolyQ) -> PolyQ {
    let mut prev = PolyQ::zero();
    let mut cur = PolyQ::one();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(x * &cur) + &(s * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// The `(x^2 + 4s)`-form of the Lucas polynomials:
/// `L_n = 2^(1-n) sum_k C(n, 2k) (x^2 + 4s)^k x^(n-2k)`.
pub fn lucas_sqrt_form(n: usize, x: &PolyQ, s: &PolyQ) -> PolyQ {
    let disc = &(x * x) + &s.scale(&RatFunc::from_integer(4));
    let n64 = n as u64;
    let mut acc = PolyQ::zero();
    for k in 0..=(n / 2) {
        let w = Rational::from_bigint(binomial(n64, 2 * k as u64));
        let term = disc.pow(k) * x.pow(n - 2 * k);
        acc = acc + term.scale(&RatFunc::from_rational(w));
    }
    acc.scale(&RatFunc::from_rational(Rational::from_integer(2).pow(1 - n as i32)))
}

/// The `(x^2 + 4s)`-form of the Fibonacci polynomials, n >= 1:
/// `F_n = 2^(1-n) sum_k C(n, 2k-1) (x^2 + 4s)^(k-1) x^(n-2k+1)`.
pub fn fib_sqrt_form(n: usize, x: &PolyQ, s: &PolyQ) -> Result<PolyQ> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "the Fibonacci square-root form requires n >= 1".into(),
        ));
    }
    let disc = &(x * x) + &s.scale(&RatFunc::from_integer(4));
    let n64 = n as u64;
    let mut acc = PolyQ::zero();
    for k in 1..=((n + 1) / 2) {
        let w = Rational::from_bigint(binomial(n64, 2 * k as u64 - 1));
        let term = disc.pow(k - 1) * x.pow(n + 1 - 2 * k);
        acc = acc + term.scale(&RatFunc::from_rational(w));
    }
    Ok(acc.scale(&RatFunc::from_rational(Rational::from_integer(2).pow(1 - n as i32))))
}
