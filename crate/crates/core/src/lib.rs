//! Exact-arithmetic toolkit for MDS codes over finite fields: perturbed
//! Vandermonde constructions with a polynomial-degree MDS certificate, the
//! Schur-square GRS test, and generalized twisted Reed-Solomon recognition.

pub mod code;
pub mod field;
pub mod gtrs;
pub mod json;
pub mod linalg;
pub mod perturb;
pub mod poly;

pub use code::{classify, ClassificationReport, GrsBranch, GrsVerdict, LinearCode};
pub use field::{embed, min_poly_degree, Field, FieldElement, FieldError, FieldOp};
pub use linalg::{vandermonde, vandermonde_full, EvalPoint, Matrix, MatrixError, PolyMatrix};
pub use poly::Polynomial;

/// Default ceiling on the number of k-column minors enumerated by MDS checks.
pub const DEFAULT_MINOR_CAP: u128 = 10_000_000;
