//! Polynomials and truncated power series in `q` over Q(t); the arithmetic
//! substrate for all series manipulations.

mod polyq;
mod series;

pub use polyq::PolyQ;
pub use series::SeriesQ;
