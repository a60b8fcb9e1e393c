//! The quadratic equation satisfied by the odd-type series
//! `gamma (gamma - 1)^m / q^m0`.
//!
//! With `T = (1 - q + tq) L_m(-1 + q + tq, -t q^2)
//!          - ((1 + q - tq)^2 - 4q) F_m(-1 + q + tq, -t q^2)`,
//! the series solves `0 = -2 q^(m-m0) + (-1)^m T F - 2 t^(m+1) q^(m+m0+1) F^2`;
//! the triple is normalized by its constant term T(0) = 2 (-1)^m.

use crate::error::{Error, Result};
use crate::exactnum::{PolyT, RatFunc, Rational};
use crate::qseries::PolyQ;
use crate::quadratic::QuadTriple;

use super::defs::{fib_eval, lucas_eval};

/// Builds the normalized quadratic triple for `gamma (gamma-1)^m / q^m0`,
/// requiring `m >= m0`.
pub fn odd_case_triple(m: usize, m0: usize) -> Result<QuadTriple> {
    if m < m0 {
        return Err(Error::InvalidParameter(format!(
            "odd-case series needs m >= m0 for a nonnegative valuation; got m={m}, m0={m0}"
        )));
    }
    let t = RatFunc::var();
    // Arguments of the polynomial families: x = -1 + q + tq, s = -t q^2.
    let x_arg = PolyQ::new(vec![RatFunc::from_integer(-1), &RatFunc::one() + &t]);
    let s_arg = PolyQ::monomial(-&t, 2);
    // 1 - q + tq and (1 + q - tq)^2 - 4q.
    let one_minus = PolyQ::new(vec![RatFunc::one(), &t - &RatFunc::one()]);
    let one_plus = PolyQ::new(vec![RatFunc::one(), &RatFunc::one() - &t]);
    let disc = &(&one_plus * &one_plus) - &PolyQ::monomial(RatFunc::from_integer(4), 1);

    let big_t = &(&one_minus * &lucas_eval(m, &x_arg, &s_arg))
        - &(&disc * &fib_eval(m, &x_arg, &s_arg));

    let a = PolyQ::monomial(RatFunc::from_integer(-2), m - m0);
    let b = big_t.scale(&RatFunc::from_rational(crate::exactnum::neg_one_pow(m as u64)));
    let c = PolyQ::monomial(
        RatFunc::from_poly(PolyT::monomial(Rational::from_integer(-2), m + 1)),
        m + m0 + 1,
    );
    QuadTriple::new(a, b, c)
}
