//! Exact dense linear algebra over [`FieldSpec`] fields.
//!
//! Everything downstream (ideals, quotients, tensor products, chain
//! complexes) is expressed through the four types exported here. There are no
//! tolerances: equality is field equality.

mod map;
mod matrix;
mod quotient;
mod subspace;

pub use map::LinearMap;
pub use matrix::{Matrix, Rref};
pub use quotient::QuotientSpace;
pub use subspace::{SpanBuilder, Subspace};

use thiserror::Error;

use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("field mismatch: expected {expected}, found an entry over {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionError { expected: usize, got: usize },
    #[error("map does not descend to the quotient: relation #{relation} is sent outside the target relations")]
    NotWellDefined { relation: usize },
}

/// Row reduction of `m`.
pub fn rref(m: &Matrix) -> Result<Rref, LinAlgError> {
    m.rref()
}

/// Kernel of `f` as a subspace of its domain.
pub fn kernel(f: &LinearMap) -> Subspace {
    f.kernel()
}

/// The quotient of `K^ambient_dim` by the span of `relations`.
pub fn quotient(
    field: FieldSpec,
    ambient_dim: usize,
    relations: &[Vec<Scalar>],
) -> Result<QuotientSpace, LinAlgError> {
    QuotientSpace::new(field, ambient_dim, relations)
}

/// The map on quotient coordinates induced by `f`, if `f` carries the source
/// relations into the target relations.
pub fn induced_map(
    f: &LinearMap,
    src: &QuotientSpace,
    dst: &QuotientSpace,
) -> Result<LinearMap, LinAlgError> {
    f.induced(src, dst)
}

pub(crate) fn zero_vec(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub(crate) fn unit_vec(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub(crate) fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `dst += c * src`.
pub(crate) fn axpy(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        d.add_mul(c, s);
    }
}

pub(crate) fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Kronecker product of two coordinate vectors, row-major in `(a, b)`.
pub(crate) fn kron(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let field = a.first().or(b.first()).map(Scalar::field);
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        if x.is_zero() {
            out.extend(std::iter::repeat_n(x.clone(), b.len()));
        } else {
            out.extend(b.iter().map(|y| x * y));
        }
    }
    debug_assert!(field.is_some() || out.is_empty());
    out
}

/// Evaluates a bilinear map stored as `data[(a * nb + b) * nc + c]` on `x ∈ K^na`, `y ∈ K^nb`.
pub(crate) fn bilinear(field: FieldSpec, data: &[Scalar], nb: usize, nc: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = zero_vec(field, nc);
    for (a, s) in x.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        for (b, t) in y.iter().enumerate() {
            if t.is_zero() {
                continue;
            }
            let st = s * t;
            let start = (a * nb + b) * nc;
            axpy(&mut out, &st, &data[start..start + nc]);
        }
    }
    out
}
