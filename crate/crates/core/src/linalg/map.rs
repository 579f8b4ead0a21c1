use super::{LinAlgError, Matrix, QuotientSpace, SpanBuilder, Subspace};
use crate::field::{FieldSpec, Scalar};

/// A linear map `K^domain -> K^codomain`; matrix columns are the images of
/// the domain basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn from_matrix(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn from_columns(field: FieldSpec, codomain_dim: usize, columns: &[Vec<Scalar>]) -> Result<Self, LinAlgError> {
        Ok(LinearMap { matrix: Matrix::from_columns(field, codomain_dim, columns)? })
    }

    /// Builds the map column by column from the images of basis vectors.
    pub fn from_fn(
        field: FieldSpec,
        domain_dim: usize,
        codomain_dim: usize,
        image: impl Fn(usize) -> Vec<Scalar>,
    ) -> Self {
        let cols: Vec<Vec<Scalar>> = (0..domain_dim).map(image).collect();
        Self::from_columns(field, codomain_dim, &cols).expect("image has wrong length")
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        LinearMap { matrix: Matrix::identity(field, n) }
    }

    pub fn zero(field: FieldSpec, domain_dim: usize, codomain_dim: usize) -> Self {
        LinearMap { matrix: Matrix::zeros(field, codomain_dim, domain_dim) }
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        self.matrix.column(j)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.mul(&inner.matrix) }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.codomain_dim()
    }

    pub fn kernel(&self) -> Subspace {
        let r = self.matrix.rref_unchecked();
        let n = self.domain_dim();
        let field = self.field();
        let free: Vec<usize> = (0..n).filter(|c| r.pivots.binary_search(c).is_err()).collect();
        let mut b = SpanBuilder::new(field, n);
        for &f in &free {
            let mut v = vec![field.zero(); n];
            v[f] = field.one();
            for (i, &p) in r.pivots.iter().enumerate() {
                v[p] = -r.reduced.get(i, f);
            }
            b.insert(v);
        }
        b.finish()
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.field(), self.codomain_dim(), (0..self.domain_dim()).map(|j| self.column(j))).unwrap()
    }

    /// Some `x` with `self(x) = target`, if one exists.
    pub fn solve(&self, target: &[Scalar]) -> Option<Vec<Scalar>> {
        let field = self.field();
        let (m, n) = (self.codomain_dim(), self.domain_dim());
        let mut aug = Matrix::zeros(field, m, n + 1);
        for i in 0..m {
            for j in 0..n {
                aug.set(i, j, self.matrix.get(i, j).clone());
            }
            aug.set(i, n, target[i].clone());
        }
        let r = aug.rref_unchecked();
        if r.pivots.last() == Some(&n) {
            return None;
        }
        let mut x = vec![field.zero(); n];
        for (i, &p) in r.pivots.iter().enumerate() {
            x[p] = r.reduced.get(i, n).clone();
        }
        Some(x)
    }

    /// Restriction to a subspace of the domain, in the subspace's basis coordinates.
    pub fn restrict(&self, domain: &Subspace) -> LinearMap {
        let cols: Vec<Vec<Scalar>> = domain.basis().iter().map(|v| self.apply(v)).collect();
        LinearMap::from_columns(self.field(), self.codomain_dim(), &cols).unwrap()
    }

    /// The map on quotient coordinates, provided `self` sends `src` relations into `dst` relations.
    pub fn induced(&self, src: &QuotientSpace, dst: &QuotientSpace) -> Result<LinearMap, LinAlgError> {
        if self.domain_dim() != src.ambient_dim() {
            return Err(LinAlgError::DimensionError { expected: src.ambient_dim(), got: self.domain_dim() });
        }
        if self.codomain_dim() != dst.ambient_dim() {
            return Err(LinAlgError::DimensionError { expected: dst.ambient_dim(), got: self.codomain_dim() });
        }
        for (i, r) in src.relations().basis().iter().enumerate() {
            if !dst.is_zero_class(&self.apply(r)) {
                return Err(LinAlgError::NotWellDefined { relation: i });
            }
        }
        let cols: Vec<Vec<Scalar>> =
            (0..src.dim()).map(|i| dst.project(&self.apply(&src.lift_basis(i)))).collect();
        LinearMap::from_columns(self.field(), dst.dim(), &cols)
    }

    /// `self - other`.
    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        let cols: Vec<Vec<Scalar>> = (0..self.domain_dim())
            .map(|j| super::sub_vec(&self.column(j), &other.column(j)))
            .collect();
        LinearMap::from_columns(self.field(), self.codomain_dim(), &cols).unwrap()
    }
}
