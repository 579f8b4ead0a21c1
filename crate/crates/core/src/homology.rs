//! Hom-co-representations and the homology complex `CL_n = M ⊗ L^{⊗n}`.
//!
//! The basis of `CL_n` is mixed-radix row-major over `(m, x₁, …, x_n)`:
//! index `((m * dl + x₁) * dl + x₂) …`.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::HomLeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{bilinear, sub_vec, LinearMap, SpanBuilder, Subspace};
use crate::report::ValidationReport;

/// Default highest degree computed when none is requested.
pub const DEFAULT_MAX_DEGREE: usize = 4;

pub const COREP_AXIOMS: [&str; 5] = [
    "a: ^[x,y]alpha(m) = ^alpha(x)(^y m) - ^alpha(y)(^x m)",
    "b: alpha(m)^[x,y] = (^y m)^alpha(x) - ^alpha(y)(m^x)",
    "c: (m^x)^alpha(y) = -^alpha(y)(m^x)",
    "d: alpha(^x m) = ^alpha(x) alpha(m)",
    "e: alpha(m^x) = alpha(m)^alpha(x)",
];

/// Coefficients `(M, α_M)` for the homology of `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoRepresentation {
    algebra: HomLeibnizAlgebra,
    dim: usize,
    alpha: LinearMap,
    /// `left[(x * dm + m) * dm + k]`: coefficient of `e_k` in `ˣm`.
    left: Vec<Scalar>,
    /// `right[(m * dl + x) * dm + k]`: coefficient of `e_k` in `mˣ`.
    right: Vec<Scalar>,
}

impl CoRepresentation {
    pub fn from_parts(algebra: HomLeibnizAlgebra, alpha: LinearMap, left: Vec<Scalar>, right: Vec<Scalar>) -> Result<Self> {
        let dm = alpha.domain_dim();
        let dl = algebra.dim();
        if alpha.codomain_dim() != dm {
            return Err(Error::Structure("coefficient twist is not square".into()));
        }
        if left.len() != dl * dm * dm || right.len() != dl * dm * dm {
            return Err(Error::Structure(format!(
                "co-representation tensors have {} and {} entries, expected {}",
                left.len(),
                right.len(),
                dl * dm * dm
            )));
        }
        if alpha.field() != algebra.field() {
            return Err(Error::Structure("coefficients over a different field".into()));
        }
        Ok(CoRepresentation { algebra, dim: dm, alpha, left, right })
    }

    /// Trivial coefficients `(K^dim, α_M)`.
    pub fn trivial(algebra: &HomLeibnizAlgebra, alpha: LinearMap) -> Result<Self> {
        let n = algebra.dim() * alpha.domain_dim() * alpha.domain_dim();
        let f = algebra.field();
        Self::from_parts(algebra.clone(), alpha, vec![f.zero(); n], vec![f.zero(); n])
    }

    /// The ground field with identity twist.
    pub fn ground_field(algebra: &HomLeibnizAlgebra) -> Self {
        Self::trivial(algebra, LinearMap::identity(algebra.field(), 1)).unwrap()
    }

    /// `L` over itself with `ˣy = −[y, x]` and `yˣ = [y, x]`.
    pub fn adjoint(algebra: &HomLeibnizAlgebra) -> Self {
        let d = algebra.dim();
        let mut left = Vec::with_capacity(d * d * d);
        for x in 0..d {
            for y in 0..d {
                left.extend(algebra.bracket_basis(y, x).iter().map(|c| -c));
            }
        }
        let mut right = Vec::with_capacity(d * d * d);
        for y in 0..d {
            for x in 0..d {
                right.extend_from_slice(algebra.bracket_basis(y, x));
            }
        }
        Self::from_parts(algebra.clone(), algebra.alpha().clone(), left, right).unwrap()
    }

    pub fn algebra(&self) -> &HomLeibnizAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn left_tensor(&self) -> &[Scalar] {
        &self.left
    }

    pub fn right_tensor(&self) -> &[Scalar] {
        &self.right
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn left(&self, x: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        bilinear(self.field(), &self.left, self.dim, self.dim, x, m)
    }

    pub fn right(&self, m: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        bilinear(self.field(), &self.right, self.algebra.dim(), self.dim, m, x)
    }

    pub fn is_trivial(&self) -> bool {
        self.left.iter().chain(&self.right).all(Scalar::is_zero)
    }

    /// Checks the five co-representation identities on basis triples.
    pub fn validate(&self) -> ValidationReport {
        let l = &self.algebra;
        let (dl, dm) = (l.dim(), self.dim);
        let f = self.field();
        let mut report = ValidationReport::new("hom-co-representation");
        report.declare(&COREP_AXIOMS);
        let ax: Vec<Vec<Scalar>> = (0..dl).map(|i| l.alpha_basis(i)).collect();
        let el: Vec<Vec<Scalar>> = (0..dl).map(|i| l.basis_vector(i)).collect();
        let em: Vec<Vec<Scalar>> = (0..dm).map(|i| crate::linalg::unit_vec(f, dm, i)).collect();
        let mlabel = |i: usize| format!("m{}", i + 1);
        for x in 0..dl {
            for y in 0..dl {
                let xy = l.bracket_basis(x, y);
                for m in 0..dm {
                    let wit = || vec![l.labels()[x].clone(), l.labels()[y].clone(), mlabel(m)];
                    let am = self.alpha.column(m);
                    let lhs = self.left(xy, &am);
                    let rhs = sub_vec(
                        &self.left(&ax[x], &self.left(&el[y], &em[m])),
                        &self.left(&ax[y], &self.left(&el[x], &em[m])),
                    );
                    report.check(COREP_AXIOMS[0], wit, sub_vec(&lhs, &rhs));

                    let lhs = self.right(&am, xy);
                    let rhs = sub_vec(
                        &self.right(&self.left(&el[y], &em[m]), &ax[x]),
                        &self.left(&ax[y], &self.right(&em[m], &el[x])),
                    );
                    report.check(COREP_AXIOMS[1], wit, sub_vec(&lhs, &rhs));

                    let mx = self.right(&em[m], &el[x]);
                    let defect = crate::linalg::add_vec(&self.right(&mx, &ax[y]), &self.left(&ax[y], &mx));
                    report.check(COREP_AXIOMS[2], wit, defect);
                }
            }
        }
        for x in 0..dl {
            for m in 0..dm {
                let wit = || vec![l.labels()[x].clone(), mlabel(m)];
                let am = self.alpha.column(m);
                let lhs = self.alpha.apply(&self.left(&el[x], &em[m]));
                report.check(COREP_AXIOMS[3], wit, sub_vec(&lhs, &self.left(&ax[x], &am)));
                let lhs = self.alpha.apply(&self.right(&em[m], &el[x]));
                report.check(COREP_AXIOMS[4], wit, sub_vec(&lhs, &self.right(&am, &ax[x])));
            }
        }
        report.set_flag("trivial", self.is_trivial());
        report
    }
}

/// `dim CL_n = dim M · (dim L)^n`.
pub fn chain_dim(c: &CoRepresentation, n: usize) -> usize {
    c.dim() * c.algebra().dim().pow(n as u32)
}

/// Adds `coeff · (v₀ ⊗ v₁ ⊗ … )` into `out`, where `out` is mixed-radix row-major.
fn add_tensor(out: &mut [Scalar], coeff: &Scalar, factors: &[&[Scalar]]) {
    fn rec(out: &mut [Scalar], coeff: &Scalar, factors: &[&[Scalar]], offset: usize) {
        let Some((first, rest)) = factors.split_first() else {
            out[offset].add_mul(coeff, &coeff.field().one());
            return;
        };
        let stride: usize = rest.iter().map(|f| f.len()).product();
        for (i, s) in first.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            rec(out, &(coeff * s), rest, offset + i * stride);
        }
    }
    rec(out, coeff, factors, 0);
}

/// Column of `d_n` at the basis element `(m, x₁, …, x_n)`.
fn boundary_column(c: &CoRepresentation, n: usize, idx: usize, alpha_l: &[Vec<Scalar>], alpha_m: &[Vec<Scalar>]) -> Vec<Scalar> {
    let l = c.algebra();
    let f = c.field();
    let (dl, dm) = (l.dim(), c.dim());
    let mut xs = vec![0usize; n];
    let mut rem = idx;
    for k in (0..n).rev() {
        xs[k] = rem % dl;
        rem /= dl;
    }
    let m = rem;
    let em = crate::linalg::unit_vec(f, dm, m);
    let ex: Vec<Vec<Scalar>> = xs.iter().map(|&x| l.basis_vector(x)).collect();
    let mut out = vec![f.zero(); chain_dim(c, n - 1)];
    let one = f.one();
    let neg = -&one;

    // m^{x₁} ⊗ α(x₂) ⊗ … ⊗ α(x_n)
    let head = c.right(&em, &ex[0]);
    let mut factors: Vec<&[Scalar]> = vec![&head];
    factors.extend(xs[1..].iter().map(|&x| alpha_l[x].as_slice()));
    add_tensor(&mut out, &one, &factors);

    // Σ_{i≥2} (−1)^i ^{x_i}m ⊗ α(x₁) ⊗ … (omit i) … ⊗ α(x_n)
    for i in 1..n {
        let head = c.left(&ex[i], &em);
        let mut factors: Vec<&[Scalar]> = vec![&head];
        factors.extend(xs.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| alpha_l[x].as_slice()));
        // One-based index i + 1.
        let sign = if (i + 1) % 2 == 0 { &one } else { &neg };
        add_tensor(&mut out, sign, &factors);
    }

    // Σ_{i<j} (−1)^{j+1} α(m) ⊗ α(x₁) … [x_i, x_j] … (omit j) … α(x_n)
    for i in 0..n {
        for j in i + 1..n {
            let br = l.bracket_basis(xs[i], xs[j]);
            let mut factors: Vec<&[Scalar]> = vec![alpha_m[m].as_slice()];
            for (k, &x) in xs.iter().enumerate() {
                if k == j {
                    continue;
                }
                factors.push(if k == i { br } else { alpha_l[x].as_slice() });
            }
            // One-based j + 1, so the sign is (−1)^{j+2}.
            let sign = if (j + 2) % 2 == 0 { &one } else { &neg };
            add_tensor(&mut out, sign, &factors);
        }
    }
    out
}

/// The matrix of `d_n : CL_n → CL_{n−1}`, assembled column-parallel.
pub fn boundary_matrix(c: &CoRepresentation, n: usize) -> LinearMap {
    assert!(n >= 1, "boundary maps start in degree 1");
    let l = c.algebra();
    let alpha_l: Vec<Vec<Scalar>> = (0..l.dim()).map(|i| l.alpha_basis(i)).collect();
    let alpha_m: Vec<Vec<Scalar>> = (0..c.dim()).map(|i| c.alpha().column(i)).collect();
    let cols: Vec<Vec<Scalar>> =
        (0..chain_dim(c, n)).into_par_iter().map(|idx| boundary_column(c, n, idx, &alpha_l, &alpha_m)).collect();
    LinearMap::from_columns(c.field(), chain_dim(c, n - 1), &cols).unwrap()
}

/// `d_1, …, d_{top}` of the complex.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub dims: Vec<usize>,
    /// `boundaries[k]` is `d_{k+1}`.
    pub boundaries: Vec<LinearMap>,
}

impl ChainComplex {
    pub fn new(c: &CoRepresentation, top: usize) -> Self {
        let dims = (0..=top).map(|n| chain_dim(c, n)).collect();
        let boundaries = (1..=top).map(|n| boundary_matrix(c, n)).collect();
        ChainComplex { dims, boundaries }
    }

    /// `d_n`, for `1 ≤ n ≤ top`.
    pub fn d(&self, n: usize) -> &LinearMap {
        &self.boundaries[n - 1]
    }

    pub fn top(&self) -> usize {
        self.boundaries.len()
    }

    /// Degrees `n` with `d_{n−1} ∘ d_n ≠ 0`.
    pub fn square_defects(&self) -> Vec<usize> {
        (2..=self.top()).filter(|&n| !self.d(n - 1).compose(self.d(n)).is_zero()).collect()
    }

    pub fn is_complex(&self) -> bool {
        self.square_defects().is_empty()
    }

    /// `Ker d_n / Im d_{n+1}`; requires `n + 1 ≤ top`.
    pub fn homology(&self, n: usize) -> Homology {
        let field = self.d(n + 1).field();
        let cycles = if n == 0 { Subspace::full(field, self.dims[0]) } else { self.d(n).kernel() };
        let boundaries = self.d(n + 1).image();
        let mut builder = SpanBuilder::new(field, self.dims[n]);
        for b in boundaries.basis() {
            builder.insert(b);
        }
        let mut representatives = Vec::new();
        for z in cycles.basis() {
            if builder.insert(z.clone()) {
                representatives.push(z);
            }
        }
        Homology { degree: n, dim: representatives.len(), representatives }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Homology {
    pub degree: usize,
    pub dim: usize,
    /// Cycles whose classes form a basis.
    pub representatives: Vec<Vec<Scalar>>,
}

/// `HL_n^α(L, M)` with representatives.
pub fn homology(c: &CoRepresentation, n: usize) -> Homology {
    ChainComplex::new(c, n + 1).homology(n)
}

/// `HL_n^α(L, M)` for `n = 0..=max_n`, sharing one complex.
pub fn homology_range(c: &CoRepresentation, max_n: usize) -> (ChainComplex, Vec<Homology>) {
    let cx = ChainComplex::new(c, max_n + 1);
    let hs = (0..=max_n).map(|n| cx.homology(n)).collect();
    (cx, hs)
}

/// `dim HL_n^α(L)` with trivial coefficients in the ground field.
pub fn trivial_homology_dim(l: &HomLeibnizAlgebra, n: usize) -> usize {
    homology(&CoRepresentation::ground_field(l), n).dim
}

/// `dim M / M^L` where `M^L` is spanned by all `mˣ`.
pub fn hl0_closed_form(c: &CoRepresentation) -> usize {
    let f = c.field();
    let l = c.algebra();
    let vectors = (0..c.dim()).flat_map(|m| (0..l.dim()).map(move |x| (m, x))).map(|(m, x)| {
        c.right(&crate::linalg::unit_vec(f, c.dim(), m), &l.basis_vector(x))
    });
    c.dim() - Subspace::span(f, c.dim(), vectors).unwrap().dim()
}

/// For trivial coefficients: `dim (M ⊗ L) / (α_M(M) ⊗ [L, L])`.
pub fn hl1_trivial_closed_form(c: &CoRepresentation) -> Option<usize> {
    if !c.is_trivial() {
        return None;
    }
    let l = c.algebra();
    Some(c.dim() * l.dim() - c.alpha().rank() * l.derived_subspace().dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn co_representation_validation() {
        let f = FieldSpec::Rationals;
        let e1 = catalog::e1(f);
        let alpha = LinearMap::from_columns(f, 2, &[vec![f.from_i64(3), f.one()], vec![f.zero(), f.from_i64(-2)]]).unwrap();
        assert!(CoRepresentation::trivial(&e1, alpha).unwrap().validate().is_valid());
        let adj = CoRepresentation::adjoint(&e1);
        let r = adj.validate();
        assert!(r.is_valid(), "{}", r.summary());

        // Dropping the sign of the left operation keeps every identity: each
        // term pairs a bracket value with the central e1.
        let left: Vec<Scalar> = adj.left_tensor().iter().map(|c| -c).collect();
        let flipped = CoRepresentation::from_parts(e1.clone(), e1.alpha().clone(), left, adj.right_tensor().to_vec()).unwrap();
        assert!(flipped.validate().is_valid());

        // A new entry ^{e2}e1 = e1 breaks c) at (e2, e2).
        let mut left = adj.left_tensor().to_vec();
        left[2 * 2] = f.one();
        let bad = CoRepresentation::from_parts(e1.clone(), e1.alpha().clone(), left, adj.right_tensor().to_vec()).unwrap();
        let r = bad.validate();
        assert!(!r.holds(COREP_AXIOMS[2]));
        let w = &r.violations.iter().find(|v| v.axiom == COREP_AXIOMS[2]).unwrap().witness;
        assert_eq!(&w[..2], &["e2".to_string(), "e2".to_string()]);
    }

    #[test]
    fn d1_is_the_right_action() {
        let e1 = catalog::e1(FieldSpec::Rationals);
        let c = CoRepresentation::adjoint(&e1);
        let d1 = boundary_matrix(&c, 1);
        for m in 0..2 {
            for x in 0..2 {
                assert_eq!(d1.column(m * 2 + x), c.right(&e1.basis_vector(m), &e1.basis_vector(x)));
            }
        }
    }

    #[test]
    fn trivial_coefficients_only_bracket_family() {
        let e1 = catalog::e1(FieldSpec::Rationals);
        let c = CoRepresentation::ground_field(&e1);
        assert!(boundary_matrix(&c, 1).is_zero());
        let d2 = boundary_matrix(&c, 2);
        // d2(1 ⊗ e2 ⊗ e2) = −[e2, e2] = −e1; everything else vanishes.
        let f = FieldSpec::Rationals;
        assert_eq!(d2.column(3), vec![f.from_i64(-1), f.zero()]);
        for k in 0..3 {
            assert!(d2.column(k).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn e1_trivial_homology() {
        let e1 = catalog::e1(FieldSpec::Rationals);
        let c = CoRepresentation::ground_field(&e1);
        let (cx, hs) = homology_range(&c, 2);
        assert!(cx.is_complex());
        assert_eq!(hs[0].dim, 1);
        assert_eq!(hs[1].dim, 1);
    }

    #[test]
    fn sl2_low_degrees_vanish() {
        let sl2 = catalog::sl2(FieldSpec::Rationals);
        let c = CoRepresentation::ground_field(&sl2);
        let (cx, hs) = homology_range(&c, 3);
        assert!(cx.is_complex());
        assert_eq!(hs[1].dim, 0);
        assert_eq!(hs[2].dim, 0);
    }
}
