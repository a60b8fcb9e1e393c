//! Exact computer algebra for Hankel determinants of Narayana-type
//! polynomial families.
//!
//! The crate computes Hankel determinants of (convolution powers of) the
//! Narayana polynomial sequence three independent ways and cross-checks them:
//!
//! - brute force: exact fraction-free determinants over Q(t) ([`hankel`]);
//! - Hankel continued fractions, obtained either generically from a series
//!   ([`hfrac`]) or by iterating a quadratic-equation step ([`quadratic`]);
//! - explicit closed forms ([`closedforms`]).
//!
//! Everything is exact: scalars live in Q(t) ([`exactnum`]) and series are
//! truncated with explicit order tracking ([`qseries`]).

pub mod closedforms;
pub mod error;
pub mod exactnum;
pub mod hankel;
pub mod hfrac;
pub mod qseries;
pub mod quadratic;
pub mod sequences;

pub use error::{Error, Result};
