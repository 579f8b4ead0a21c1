use thiserror::Error;

use crate::field::FieldError;
use crate::linalg::LinAlgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("structure error: {0}")]
    Structure(String),
    #[error("ideals belong to different algebras")]
    ParentMismatch,
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("not alpha-stable: {0}")]
    NotAlphaStable(String),
    #[error("not an endomorphism: {0}")]
    NotEndomorphism(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("not a Leibniz algebra (twist must be the identity)")]
    NotLeibniz,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("incompatible actions: {0}")]
    IncompatibleActions(String),
    #[error("internal consistency failure, bracket not well defined: {0}")]
    BracketNotWellDefined(String),
    #[error("not equivariant: {0}")]
    NotEquivariant(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("algebra is not perfect")]
    NotPerfect,
    #[error("algebra is not alpha-perfect")]
    NotAlphaPerfect,
    #[error("projection is not surjective")]
    NotSurjective,
    #[error("kernel mismatch: {0}")]
    KernelMismatch(String),
    #[error("extensions have different bases")]
    BaseMismatch,
    #[error("extension is not central")]
    NotCentral,
    #[error("alpha-identity condition fails: {0}")]
    AlphaIdentityFails(String),
}

pub type Result<T> = std::result::Result<T, Error>;
