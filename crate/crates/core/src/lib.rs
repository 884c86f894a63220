//! Bar Codes of finite sets of terms and their use for Janet and Janet-like
//! division.
//!
//! * [`term`]: terms, the Lex order `x1 < ... < xn`, and the text grammar.
//! * [`barcode`]: building and decoding Bar Codes, e-lists, admissibility,
//!   stars and star sets.
//! * [`janet`]: multiplicative variables, nonmultiplicative powers, divisor
//!   queries, completeness and completion.
//! * [`corners`]: infinite corners of Janet-like cones.
//! * [`points`]: reduced Janet-like bases of ideals of points over the
//!   rationals.
//! * [`io`] and [`report`]: file formats and JSON reports.

pub mod barcode;
pub mod corners;
pub mod error;
pub mod io;
pub mod janet;
pub mod points;
pub mod report;
pub mod term;

pub use barcode::{Bar, BarCode, EList, StarPlacement};
pub use corners::{infinite_corners, CornerEntry, CornerVector};
pub use error::{Error, Result};
pub use janet::{
    complete, complete_with_report, divisor_for_nm_product, find_janet_like_divisor, is_complete,
    is_multiplier, janet_divisor, janet_implies_janet_like_check, janet_multiplicative_vars,
    nmp_table, CompletionReport, JanetAnnotation, JanetTable, Power, Witness,
};
pub use points::{
    compute_basis, evaluate, groebner_escalier, janet_like_basis, monomial_generators, normal_form,
    Interpolator, PointSet, Polynomial, Rational, RationalMatrix,
};
pub use term::{divides, format_term, lex_compare, parse_term, pi_projection, Term, TermSet};
