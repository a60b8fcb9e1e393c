//! Every explicit formula the library verifies: the section-2 quantities,
//! the expected continued fractions of the four families, the conjectured
//! six-tuple streams, the piecewise determinant closed forms, and the
//! Fibonacci/Lucas identities.

mod defs;
mod dets;
mod fiblucas;
mod hfracs;
mod oddcase;
mod sixtuples;

pub use defs::{
    alpha_poly, beta_poly, fib_by_recurrence, fib_eval, fib_sqrt_form, lucas_by_recurrence,
    lucas_eval, lucas_sqrt_form, qint, r_poly, rho_poly, rho_poly_alt, s_poly,
};
pub use dets::{cigler_det, main_det, CiglerVariant, DetCase};
pub use fiblucas::{fib_lucas_closed_check, PolyFamily};
pub use hfracs::expected_hfrac;
pub use oddcase::odd_case_triple;
pub use sixtuples::{conjectured_six_tuples, SixTupleStream, StreamVariant};


