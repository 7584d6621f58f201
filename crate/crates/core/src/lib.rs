//! Exact computations in the algebra `R = k<x,y>/(yx - 1)` over the rationals:
//! element arithmetic, the shift representation, simple modules and their
//! extensions, two-sided ideals, links between primes, and a claim-by-claim
//! verification suite.

pub mod algebra;
pub mod error;
pub mod extension;
pub mod ideal;
pub mod laurent;
pub mod linalg;
pub mod link;
pub mod matrix;
pub mod module;
pub mod parse;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod suite;
pub mod witness;

pub use algebra::{center_slice, matrix_unit, AlgebraElement, Monomial};
pub use error::{Error, Result};
pub use laurent::{diffop_action, laurent_image, LaurentPoly, Poly};
pub use matrix::{to_matrix, TruncMatrix};
pub use module::{LinMap, ModVector, SimpleDesc};
pub use parse::parse_element;
pub use report::{ClaimEntry, ClaimReport, Verdict};
pub use scalar::Scalar;
