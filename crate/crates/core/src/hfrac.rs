//! Super delta-fraction machinery: generic expansion of a power series,
//! evaluation back to a series, and Hankel-determinant reconstruction for
//! delta = 2.
//!
//! A super delta-fraction is the nested form
//!
//! ```text
//! F(q) = v0 q^k0 / (1 + u1(q) q  -  v1 q^(k0+k1+d) / (1 + u2(q) q - ...))
//! ```
//!
//! with constants v_j != 0, exponents k_j >= 0, and deg(u_{j+1}) <= k_j + d - 2.
//! Quotient j stores (k_j, v_j, u_{j+1}). Every power series has exactly one
//! such expansion, and for d = 2 (the Hankel case) the nonzero Hankel
//! determinants of F are read off the quotients.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::RatFunc;
use crate::qseries::{PolyQ, SeriesQ};

/// One partial quotient: exponent `k`, nonzero constant `v`, and the
/// polynomial `u` under it (`1 + u(q) q` is the quotient's denominator part).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub k: usize,
    pub v: RatFunc,
    pub u: PolyQ,
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} v={} u={}", self.k, self.v, self.u)
    }
}

/// How an expansion run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionStatus {
    /// The remainder was zero through at least `delta` exact orders.
    Complete,
    /// Too few exact coefficients remained to extract a reliable quotient.
    PrecisionExhausted,
    /// The requested number of quotients was produced.
    MaxTermsReached,
}

/// A super delta-fraction prefix together with its termination status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HFraction {
    pub quotients: Vec<Quotient>,
    pub delta: usize,
    pub status: ExpansionStatus,
}

impl HFraction {
    /// Orders of the input series consumed by the emitted quotients:
    /// extracting quotient j costs 2 k_j + delta orders.
    pub fn consumed_order(&self) -> usize {
        self.quotients
            .iter()
            .map(|q| 2 * q.k + self.delta)
            .sum()
    }

    /// Checks the degree bounds of Definition-style validity:
    /// deg(u) <= k + delta - 2 within each quotient, v != 0.
    pub fn check_invariants(&self) -> Result<()> {
        for (j, quot) in self.quotients.iter().enumerate() {
            if quot.v.is_zero() {
                return Err(Error::InvalidParameter(format!(
                    "quotient {j} has v = 0"
                )));
            }
            if !quot.u.is_zero() && quot.u.degree() + 2 > quot.k + self.delta {
                return Err(Error::InvalidParameter(format!(
                    "quotient {j}: deg(u) = {} exceeds k + delta - 2 = {}",
                    quot.u.degree(),
                    quot.k + self.delta - 2
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for HFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for quot in &self.quotients {
            writeln!(f, "{quot}")?;
        }
        write!(f, "status={:?}", self.status)
    }
}

/// Greedy super delta-fraction expansion of a series.
///
/// Each round peels `k := val(f)`, `v := leading coefficient`, computes the
/// unit quotient `E := v q^k / f`, takes `u` from the coefficients of `E` in
/// degrees `1 ..= k + delta - 1`, and continues with
/// `f_next := ((1 + u q) - E) / q^(k+delta)`.
///
/// Expanding one quotient consumes `2k + delta` exact orders (`k` of them in
/// the unit division), and the expander stops with `PrecisionExhausted`
/// rather than emit an unreliable quotient. A zero remainder is reported as
/// `Complete` only when at least `delta` exact orders vouch for it.
pub fn hfrac_expand(f: &SeriesQ, delta: usize, max_terms: usize) -> Result<HFraction> {
    if delta < 1 {
        return Err(Error::InvalidParameter("delta must be at least 1".into()));
    }
    if f.is_zero_to_order() {
        return Err(Error::ZeroSeries);
    }
    let mut quotients = Vec::new();
    let mut cur = f.clone();
    let status = loop {
        let remaining = cur.order();
        let Some(k) = cur.valuation() else {
            break if remaining >= delta {
                ExpansionStatus::Complete
            } else {
                ExpansionStatus::PrecisionExhausted
            };
        };
        if quotients.len() == max_terms {
            break ExpansionStatus::MaxTermsReached;
        }
        if remaining < 2 * k + delta + 1 {
            break ExpansionStatus::PrecisionExhausted;
        }

        let v = cur.coeff(k).clone();
        // E = v q^k / f = 1 / (f / (v q^k)), a unit series of order R - k.
        let unit = cur.shift(-(k as i64))?.scale(&v.inv()?);
        if quotients.len() + 1 == max_terms {
            // The last requested quotient does not need its tail; u only
            // takes E through degree k + delta - 1.
            let e = unit.truncated(k + delta).invert()?;
            let u = PolyQ::new((1..k + delta).map(|d| e.coeff(d).clone()).collect());
            quotients.push(Quotient { k, v, u });
            break ExpansionStatus::MaxTermsReached;
        }
        let e = unit.invert()?;
        // u q matches E in degrees 1 ..= k + delta - 1.
        let u = PolyQ::new((1..k + delta).map(|d| e.coeff(d).clone()).collect());
        debug_assert!(u.is_zero() || u.degree() + 2 <= k + delta);

        // (1 + u q) - E vanishes through degree k + delta - 1 by construction.
        let one_plus_uq = PolyQ::one() + u.shift_up(1);
        let next = (&SeriesQ::from_polyq(&one_plus_uq, e.order()) - &e)
            .shift(-((k + delta) as i64))?;
        quotients.push(Quotient { k, v, u });
        cur = next;
    };
    Ok(HFraction {
        quotients,
        delta,
        status,
    })
}

/// Bottom-up evaluation of the nested fraction, truncated at `order`.
/// The empty fraction evaluates to 0.
pub fn hfrac_eval(h: &HFraction, order: usize) -> SeriesQ {
    let order = order.max(1);
    let mut acc = SeriesQ::zero(order);
    for quot in h.quotients.iter().rev() {
        // level = v q^k / ((1 + u q) - q^(k+delta) * acc)
        let denom_tail = acc
            .shift((quot.k + h.delta) as i64)
            .expect("upward shift")
            .truncated(order);
        let one_plus_uq = PolyQ::one() + quot.u.shift_up(1);
        let denom = &SeriesQ::from_polyq(&one_plus_uq, order) - &denom_tail;
        let inv = denom.invert().expect("denominator is a unit");
        acc = inv
            .scale(&quot.v)
            .shift(quot.k as i64)
            .expect("upward shift")
            .truncated(order);
    }
    acc
}

/// All non-vanishing Hankel determinant indices `s_j <= max_index` with their
/// values, per the delta = 2 reconstruction
/// `H_{s_j} = (-1)^{eps_j} prod_{i<j} v_i^(s_j - s_i)`,
/// `s_j = k_0 + ... + k_{j-1} + j`, `eps_j = sum_{i<j} k_i (k_i + 1) / 2`.
///
/// Indices not listed have zero Hankel determinant, provided the fraction
/// prefix reaches past `max_index` (it always includes index 0, value 1).
pub fn hankel_from_hfrac(h: &HFraction, max_index: usize) -> Result<Vec<(usize, RatFunc)>> {
    if h.delta != 2 {
        return Err(Error::DeltaUnsupported(h.delta));
    }
    let mut out = vec![(0, RatFunc::one())];
    let mut s = 0usize; // s_j
    let mut eps = 0usize; // eps_j mod 2 tracked exactly
    let mut power = RatFunc::one(); // prod_{i<j} v_i^(s_j - s_i)
    let mut vprod = RatFunc::one(); // prod_{i<=j} v_i
    for quot in &h.quotients {
        vprod = &vprod * &quot.v;
        s += quot.k + 1;
        if s > max_index {
            break;
        }
        eps += quot.k * (quot.k + 1) / 2;
        power = &power * &vprod.pow(quot.k + 1);
        let value = if eps % 2 == 0 {
            power.clone()
        } else {
            -&power
        };
        out.push((s, value));
    }
    Ok(out)
}

/// Largest determinant index classified by this fraction prefix: indices up
/// to and including this bound that are not produced by
/// [`hankel_from_hfrac`] have zero determinant.
pub fn classified_index_bound(h: &HFraction) -> usize {
    let s_last: usize = h.quotients.iter().map(|q| q.k + 1).sum();
    match h.status {
        ExpansionStatus::Complete => usize::MAX,
        _ => s_last,
    }
}
