use super::{LinAlgError, Subspace};
use crate::field::{FieldSpec, Scalar};

/// `K^n / R` with canonical coordinates.
///
/// Quotient coordinates are the non-pivot columns of the RREF basis of `R`,
/// in increasing order. `lift` puts a coordinate vector on those columns and
/// zero elsewhere; `project` reduces modulo `R` and reads the same columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    relations: Subspace,
    coset_basis: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(field: FieldSpec, ambient_dim: usize, relations: &[Vec<Scalar>]) -> Result<Self, LinAlgError> {
        let rel = Subspace::span(field, ambient_dim, relations.iter().cloned())?;
        Ok(Self::from_subspace(rel))
    }

    pub fn from_subspace(relations: Subspace) -> Self {
        let pivots = relations.pivots();
        let coset_basis = (0..relations.ambient_dim()).filter(|c| pivots.binary_search(c).is_err()).collect();
        QuotientSpace { relations, coset_basis }
    }

    pub fn field(&self) -> FieldSpec {
        self.relations.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.coset_basis.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn coset_basis(&self) -> &[usize] {
        &self.coset_basis
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.relations.reduce(v);
        self.coset_basis.iter().map(|&c| r[c].clone()).collect()
    }

    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(q.len(), self.dim(), "quotient coordinate length mismatch");
        let mut v = vec![self.field().zero(); self.ambient_dim()];
        for (x, &c) in q.iter().zip(&self.coset_basis) {
            v[c] = x.clone();
        }
        v
    }

    /// Canonical representative of the `i`-th quotient basis vector.
    pub fn lift_basis(&self, i: usize) -> Vec<Scalar> {
        super::unit_vec(self.field(), self.ambient_dim(), self.coset_basis[i])
    }

    pub fn is_zero_class(&self, v: &[Scalar]) -> bool {
        self.relations.contains(v)
    }
}
