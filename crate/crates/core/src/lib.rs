//! Exact computer algebra for finite-dimensional Hom-Leibniz and
//! Hom-associative algebras over `Q` and `GF(p)`.
//!
//! Algebras are stored as structure constants plus a twist matrix. Every
//! construction (quotients, non-abelian tensor products, homology, universal
//! central extensions, Hochschild-type sequences) is an explicit quotient
//! space, and every theorem-shaped claim is reported as an exact certificate.

// Index loops mirror the subscripts of the formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod actions;
pub mod algebra;
pub mod catalog;
pub mod error;
pub mod exactness;
pub mod extensions;
pub mod field;
pub mod homassoc;
pub mod homology;
pub mod linalg;
pub mod random;
pub mod report;
pub mod tensor;

pub use algebra::{AlgebraHom, HomLeibnizAlgebra, IdealHandle, Predicates};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{LinearMap, Matrix, QuotientSpace, Subspace};
pub use report::{ExactnessReport, ValidationReport};
