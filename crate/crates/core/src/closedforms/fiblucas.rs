//! Cross-checks of the `(x^2 + 4s)`-form representations of the Fibonacci
//! and Lucas polynomials against their recurrences.
//!
//! A bivariate identity of s-degree at most ceil(n/2) is pinned by
//! evaluating at symbolic x = t and at ceil(n/2) + 2 distinct rational
//! values of s; substituting the transcendental t keeps the x-dependence
//! exact without a second polynomial ring.

use crate::error::{Error, Result};
use crate::exactnum::{RatFunc, Rational};
use crate::qseries::PolyQ;

use super::defs::{fib_by_recurrence, fib_sqrt_form, lucas_by_recurrence, lucas_sqrt_form};

/// Which polynomial family to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyFamily {
    Fibonacci,
    Lucas,
}

/// True iff the `(x^2 + 4s)`-form equals the recurrence-generated polynomial
/// at index n. Fibonacci requires n >= 1.
pub fn fib_lucas_closed_check(n: usize, which: PolyFamily) -> Result<bool> {
    if which == PolyFamily::Fibonacci && n < 1 {
        return Err(Error::InvalidParameter(
            "the Fibonacci representation is stated for n >= 1".into(),
        ));
    }
    let x = PolyQ::constant(RatFunc::var());
    // 0, 1, -1, 2, -2, ... gives ceil(n/2) + 2 distinct rational samples.
    let samples = n.div_ceil(2) + 2;
    for idx in 0..samples {
        let value = if idx % 2 == 0 {
            (idx / 2) as i64
        } else {
            -((idx / 2 + 1) as i64)
        };
        let s = PolyQ::constant(RatFunc::from_rational(Rational::from_integer(value)));
        let (closed, by_rec) = match which {
            PolyFamily::Fibonacci => (fib_sqrt_form(n, &x, &s)?, fib_by_recurrence(n, &x, &s)),
            PolyFamily::Lucas => (lucas_sqrt_form(n, &x, &s), lucas_by_recurrence(n, &x, &s)),
        };
        if closed != by_rec {
            return Ok(false);
        }
    }
    Ok(true)
}
