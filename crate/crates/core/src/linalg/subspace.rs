use super::{axpy, is_zero_vec, LinAlgError, Matrix};
use crate::field::{FieldSpec, Scalar};

/// Incremental reduced row-echelon basis.
///
/// Rows are kept fully reduced and sorted by pivot, so a vector is reduced
/// against the whole basis in a single pass.
#[derive(Debug, Clone)]
pub struct SpanBuilder {
    field: FieldSpec,
    n: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(field: FieldSpec, ambient_dim: usize) -> Self {
        SpanBuilder { field, n: ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Subtracts the basis component of `v` in place.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -&v[p];
                axpy(v, &c, row);
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vec(&w)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.n, "vector length does not match ambient dimension");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut().skip(p) {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                axpy(row, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    pub fn finish(self) -> Subspace {
        let basis = Matrix::from_rows(self.field, self.n, self.rows).unwrap();
        Subspace { field: self.field, ambient_dim: self.n, basis, pivots: self.pivots }
    }
}

/// A subspace of `K^n`, stored by its canonical RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        SpanBuilder::new(field, n).finish()
    }

    pub fn full(field: FieldSpec, n: usize) -> Self {
        Subspace { field, ambient_dim: n, basis: Matrix::identity(field, n), pivots: (0..n).collect() }
    }

    /// Span of the given vectors.
    pub fn span<I>(field: FieldSpec, n: usize, vectors: I) -> Result<Self, LinAlgError>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut b = SpanBuilder::new(field, n);
        for v in vectors {
            if v.len() != n {
                return Err(LinAlgError::DimensionError { expected: n, got: v.len() });
            }
            if let Some(x) = v.iter().find(|x| x.field() != field) {
                return Err(LinAlgError::FieldMismatch { expected: field, found: x.field() });
            }
            if !b.is_full() {
                b.insert(v);
            }
        }
        Ok(b.finish())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// RREF basis as a `dim x ambient_dim` matrix.
    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn basis_vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn builder(&self) -> SpanBuilder {
        SpanBuilder {
            field: self.field,
            n: self.ambient_dim,
            rows: self.basis.row_vectors(),
            pivots: self.pivots.clone(),
        }
    }

    /// `v` minus its component along the canonical basis; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = -&w[p];
                axpy(&mut w, &c, self.basis.row(i));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given basis coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.ambient_dim];
        for (i, c) in coords.iter().enumerate() {
            axpy(&mut out, c, self.basis.row(i));
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut b = self.builder();
        for v in other.basis() {
            b.insert(v);
        }
        b.finish()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve sum a_i u_i = sum b_j w_j; each solution gives sum a_i u_i.
        let du = self.dim();
        let mut cols: Vec<Vec<Scalar>> = self.basis();
        cols.extend(other.basis().into_iter().map(|w| w.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(self.field, self.ambient_dim, &cols).unwrap();
        let ker = super::LinearMap::from_matrix(m).kernel();
        let vectors = ker.basis().into_iter().map(|k| self.combine(&k[..du]));
        Subspace::span(self.field, self.ambient_dim, vectors).unwrap()
    }

    /// Image of the subspace under a linear map given by `f`.
    pub fn map(&self, f: &super::LinearMap) -> Subspace {
        Subspace::span(f.field(), f.codomain_dim(), self.basis().iter().map(|v| f.apply(v))).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| FieldSpec::Rationals.from_i64(x)).collect()
    }

    #[test]
    fn span_is_canonical() {
        let f = FieldSpec::Rationals;
        let a = Subspace::span(f, 3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(f, 3, vec![v(&[1, 2, 1]), v(&[1, 0, -1])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1]);
    }

    #[test]
    fn intersection_and_sum() {
        let f = FieldSpec::Rationals;
        let a = Subspace::span(f, 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(f, 3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(a.intersection(&b), Subspace::span(f, 3, vec![v(&[0, 1, 0])]).unwrap());
        assert!(a.sum(&b).is_full());
    }

    #[test]
    fn coordinates_round_trip() {
        let f = FieldSpec::Rationals;
        let s = Subspace::span(f, 3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]).unwrap();
        let x = v(&[2, 7, 9]);
        let c = s.coordinates(&x).unwrap();
        assert_eq!(s.combine(&c), x);
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn span_rejects_bad_length() {
        let err = Subspace::span(FieldSpec::Rationals, 3, vec![v(&[1, 2])]).unwrap_err();
        assert_eq!(err, LinAlgError::DimensionError { expected: 3, got: 2 });
    }
}
