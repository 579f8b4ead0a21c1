use rayon::prelude::*;

use super::LinAlgError;
use crate::field::{FieldSpec, Scalar};

/// A dense matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from row vectors, checking shape only.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinAlgError::DimensionError { expected: cols, got: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { field, rows: n, cols, data })
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self, LinAlgError> {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LinAlgError::DimensionError { expected: rows, got: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    /// Every entry lies in `self.field`.
    pub fn check_field(&self) -> Result<(), LinAlgError> {
        match self.data.iter().find(|x| x.field() != self.field) {
            Some(x) => Err(LinAlgError::FieldMismatch { expected: self.field, found: x.field() }),
            None => Ok(()),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                o.add_mul(self.get(r, c), x);
            }
        }
        out
    }

    /// Matrix product `self * rhs`; columns are computed in parallel and
    /// assembled in index order.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let columns: Vec<Vec<Scalar>> = (0..rhs.cols)
            .into_par_iter()
            .map(|j| {
                let mut col = vec![self.field.zero(); self.rows];
                for k in 0..rhs.rows {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    for (i, o) in col.iter_mut().enumerate() {
                        o.add_mul(self.get(i, k), b);
                    }
                }
                col
            })
            .collect();
        Matrix::from_columns(self.field, self.rows, &columns).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.rref_unchecked().rank
    }

    /// Reduced row-echelon form, its rank, and pivot columns.
    pub fn rref(&self) -> Result<Rref, LinAlgError> {
        self.check_field()?;
        Ok(self.rref_unchecked())
    }

    pub(crate) fn rref_unchecked(&self) -> Rref {
        let mut rows: Vec<Vec<Scalar>> = self.row_vectors();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv().unwrap();
            for x in rows[r].iter_mut().skip(c) {
                *x *= &inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    x.sub_mul(&f, y);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let reduced = Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: rows.into_iter().flatten().collect(),
        };
        Rref { reduced, rank: pivots.len(), pivots }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = FieldSpec::Rationals;
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(f, cols, rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(FieldSpec::Rationals, 2);
        let r = m.rref().unwrap();
        assert_eq!(r.reduced, m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_zero() {
        let m = Matrix::zeros(FieldSpec::Rationals, 3, 3);
        let r = m.rref().unwrap();
        assert_eq!(r.reduced, m);
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let r = q(&[&[1, 2], &[2, 4]]).rref().unwrap();
        assert_eq!(r.reduced, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_rejects_mixed_fields() {
        let f = FieldSpec::Rationals;
        let p = FieldSpec::prime(5).unwrap();
        let m = Matrix::from_rows(f, 2, vec![vec![f.one(), p.one()]]).unwrap();
        assert!(matches!(m.rref(), Err(LinAlgError::FieldMismatch { .. })));
    }

    #[test]
    fn product_matches_hand_computation() {
        let a = q(&[&[1, 2], &[3, 4]]);
        let b = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), q(&[&[2, 1], &[4, 3]]));
    }
}
