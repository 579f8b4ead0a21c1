//! Hom-Leibniz algebras given by structure constants and a twist map.
//!
//! An algebra is a triple `(L, [-,-], α)` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`
//! and `α` linear. Validity means the Hom-Leibniz identity
//! `[α(x), [y, z]] = [[x, y], α(z)] - [[x, z], α(y)]` together with
//! multiplicativity `α[x, y] = [α(x), α(y)]`. Both are multilinear, so they are
//! checked on basis triples and pairs.

use std::collections::VecDeque;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{axpy, sub_vec, unit_vec, zero_vec, LinearMap, QuotientSpace, SpanBuilder, Subspace};
use crate::report::ValidationReport;

pub const HOM_LEIBNIZ_IDENTITY: &str = "hom-leibniz identity";
pub const MULTIPLICATIVITY: &str = "multiplicativity";

#[derive(Debug)]
pub struct HomLeibnizAlgebra {
    field: FieldSpec,
    dim: usize,
    labels: Vec<String>,
    /// `structure[(i * dim + j) * dim + k] = c[i][j][k]`.
    structure: Vec<Scalar>,
    alpha: LinearMap,
    derived: OnceLock<Subspace>,
    center: OnceLock<Subspace>,
}

impl Clone for HomLeibnizAlgebra {
    fn clone(&self) -> Self {
        HomLeibnizAlgebra {
            field: self.field,
            dim: self.dim,
            labels: self.labels.clone(),
            structure: self.structure.clone(),
            alpha: self.alpha.clone(),
            derived: self.derived.clone(),
            center: self.center.clone(),
        }
    }
}

impl PartialEq for HomLeibnizAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.labels == other.labels
            && self.structure == other.structure
            && self.alpha == other.alpha
    }
}

impl Eq for HomLeibnizAlgebra {}

/// Boolean invariants decided by exact rank computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub perfect: bool,
    pub alpha_perfect: bool,
    pub alpha_surjective: bool,
    pub abelian: bool,
}

pub(crate) fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Renders a coordinate vector as a linear combination of labels.
pub fn format_vector(labels: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(x, _)| !x.is_zero())
        .map(|(x, l)| if x.is_one() { l.clone() } else { format!("({x})*{l}") })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

impl HomLeibnizAlgebra {
    /// Raw constructor: checks shapes and fields but not the axioms.
    pub fn from_parts(field: FieldSpec, labels: Vec<String>, structure: Vec<Scalar>, alpha: LinearMap) -> Result<Self> {
        let dim = labels.len();
        if structure.len() != dim * dim * dim {
            return Err(Error::Structure(format!(
                "structure tensor has {} entries, expected {}",
                structure.len(),
                dim * dim * dim
            )));
        }
        if alpha.domain_dim() != dim || alpha.codomain_dim() != dim {
            return Err(Error::Structure(format!(
                "twist is {}x{}, expected {dim}x{dim}",
                alpha.codomain_dim(),
                alpha.domain_dim()
            )));
        }
        if let Some(x) = structure.iter().find(|x| x.field() != field) {
            return Err(Error::LinAlg(crate::linalg::LinAlgError::FieldMismatch { expected: field, found: x.field() }));
        }
        alpha.matrix().check_field()?;
        if alpha.field() != field {
            return Err(Error::LinAlg(crate::linalg::LinAlgError::FieldMismatch {
                expected: field,
                found: alpha.field(),
            }));
        }
        let mut seen = std::collections::BTreeSet::new();
        if let Some(l) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::Structure(format!("duplicate basis label {l:?}")));
        }
        Ok(HomLeibnizAlgebra {
            field,
            dim,
            labels,
            structure,
            alpha,
            derived: OnceLock::new(),
            center: OnceLock::new(),
        })
    }

    /// Builds the structure tensor from a function giving `[e_i, e_j]`.
    pub fn from_bracket_fn(
        field: FieldSpec,
        labels: Vec<String>,
        alpha: LinearMap,
        bracket: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut structure = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = bracket(i, j);
                if v.len() != dim {
                    return Err(Error::Structure(format!("bracket value has length {}, expected {dim}", v.len())));
                }
                structure.extend(v);
            }
        }
        Self::from_parts(field, labels, structure, alpha)
    }

    /// The abelian algebra on `dim` generators with the given twist.
    pub fn abelian(field: FieldSpec, labels: Vec<String>, alpha: LinearMap) -> Result<Self> {
        let dim = labels.len();
        Self::from_parts(field, labels, vec![field.zero(); dim * dim * dim], alpha)
    }

    /// Validates and returns `self`, or an error naming the first violation.
    pub fn checked(self) -> Result<Self> {
        let report = self.validate();
        if report.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidAlgebra(report.summary()))
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn structure(&self) -> &[Scalar] {
        &self.structure
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        zero_vec(self.field, self.dim)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vec(self.field, self.dim, i)
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.structure[start..start + self.dim]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                axpy(&mut out, &ab, self.bracket_basis(i, j));
            }
        }
        out
    }

    pub fn apply_alpha(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.alpha.apply(v)
    }

    pub fn alpha_basis(&self, i: usize) -> Vec<Scalar> {
        self.alpha.column(i)
    }

    pub fn format(&self, v: &[Scalar]) -> String {
        format_vector(&self.labels, v)
    }

    fn label_list(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.labels[i].clone()).collect()
    }

    /// Checks the Hom-Leibniz identity on all basis triples and
    /// multiplicativity on all basis pairs; flags skew-symmetry (Hom-Lie).
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut report = ValidationReport::new("hom-leibniz algebra");
        report.declare(&[HOM_LEIBNIZ_IDENTITY, MULTIPLICATIVITY]);
        let alphas: Vec<Vec<Scalar>> = (0..n).map(|i| self.alpha_basis(i)).collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.bracket(&alphas[i], self.bracket_basis(j, k));
                    let r1 = self.bracket(self.bracket_basis(i, j), &alphas[k]);
                    let r2 = self.bracket(self.bracket_basis(i, k), &alphas[j]);
                    let defect: Vec<Scalar> =
                        lhs.iter().zip(r1.iter().zip(&r2)).map(|(l, (a, b))| &(l - a) + b).collect();
                    report.check(HOM_LEIBNIZ_IDENTITY, || self.label_list(&[i, j, k]), defect);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.apply_alpha(self.bracket_basis(i, j));
                let rhs = self.bracket(&alphas[i], &alphas[j]);
                report.check(MULTIPLICATIVITY, || self.label_list(&[i, j]), sub_vec(&lhs, &rhs));
            }
        }
        report.set_flag("hom_lie", self.is_hom_lie());
        report
    }

    /// Skew-symmetry: `c[i][i] = 0` and `c[i][j] = -c[j][i]`.
    pub fn is_hom_lie(&self) -> bool {
        (0..self.dim).all(|i| {
            self.bracket_basis(i, i).iter().all(Scalar::is_zero)
                && (i + 1..self.dim).all(|j| {
                    self.bracket_basis(i, j).iter().zip(self.bracket_basis(j, i)).all(|(a, b)| (a + b).is_zero())
                })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().all(Scalar::is_zero)
    }

    /// `[L, L]`.
    pub fn derived_subspace(&self) -> &Subspace {
        self.derived.get_or_init(|| {
            let n = self.dim;
            let vectors = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| self.bracket_basis(i, j).to_vec());
            Subspace::span(self.field, n, vectors).unwrap()
        })
    }

    /// `Z(L)`: solutions of `[x, e_j] = 0 = [e_j, x]` for all `j`.
    pub fn center(&self) -> &Subspace {
        self.center.get_or_init(|| {
            let n = self.dim;
            // Column i of the stacked system is the list of coefficients of
            // [e_i, e_j] and [e_j, e_i] over all j.
            let cols: Vec<Vec<Scalar>> = (0..n)
                .map(|i| {
                    let mut c = Vec::with_capacity(2 * n * n);
                    for j in 0..n {
                        c.extend_from_slice(self.bracket_basis(i, j));
                        c.extend_from_slice(self.bracket_basis(j, i));
                    }
                    c
                })
                .collect();
            LinearMap::from_columns(self.field, 2 * n * n, &cols).unwrap().kernel()
        })
    }

    /// `α(L)` as a subspace.
    pub fn alpha_image(&self) -> Subspace {
        self.alpha.image()
    }

    /// `[α(L), α(L)]`.
    pub fn alpha_derived_subspace(&self) -> Subspace {
        let img = self.alpha_image().basis();
        let vectors: Vec<Vec<Scalar>> = img.iter().flat_map(|a| img.iter().map(move |b| (a, b))).map(|(a, b)| self.bracket(a, b)).collect();
        Subspace::span(self.field, self.dim, vectors).unwrap()
    }

    pub fn predicates(&self) -> Predicates {
        Predicates {
            perfect: self.derived_subspace().is_full(),
            alpha_perfect: self.alpha_derived_subspace().is_full(),
            alpha_surjective: self.alpha.is_surjective(),
            abelian: self.is_abelian(),
        }
    }

    /// Span of `[x, y]` and `[y, x]` for `x` in `a`, `y` in `b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut builder = SpanBuilder::new(self.field, self.dim);
        for x in a.basis() {
            for y in b.basis() {
                builder.insert(self.bracket(&x, &y));
                builder.insert(self.bracket(&y, &x));
            }
        }
        builder.finish()
    }

    /// Checks that `space` is closed under the bracket.
    pub fn is_subalgebra(&self, space: &Subspace) -> bool {
        let b = space.basis();
        b.iter().all(|x| b.iter().all(|y| space.contains(&self.bracket(x, y))))
    }

    /// Checks the two-sided Hom-ideal conditions, reporting a witness on failure.
    pub fn check_ideal(&self, space: &Subspace) -> Result<()> {
        if space.ambient_dim() != self.dim {
            return Err(Error::Structure(format!(
                "subspace lives in dimension {}, algebra has dimension {}",
                space.ambient_dim(),
                self.dim
            )));
        }
        for (a, h) in space.basis().iter().enumerate() {
            for y in 0..self.dim {
                let e = self.basis_vector(y);
                let left = self.bracket(h, &e);
                if !space.contains(&left) {
                    return Err(Error::NotAnIdeal(format!(
                        "[{}, {}] = {} escapes the subspace (basis vector #{a})",
                        self.format(h),
                        self.labels[y],
                        self.format(&left)
                    )));
                }
                let right = self.bracket(&e, h);
                if !space.contains(&right) {
                    return Err(Error::NotAnIdeal(format!(
                        "[{}, {}] = {} escapes the subspace",
                        self.labels[y],
                        self.format(h),
                        self.format(&right)
                    )));
                }
            }
            let ah = self.apply_alpha(h);
            if !space.contains(&ah) {
                return Err(Error::NotAlphaStable(format!("alpha({}) = {}", self.format(h), self.format(&ah))));
            }
        }
        Ok(())
    }

    /// A verified two-sided Hom-ideal.
    pub fn ideal(&self, space: Subspace) -> Result<IdealHandle<'_>> {
        self.check_ideal(&space)?;
        Ok(IdealHandle { parent: self, space })
    }

    /// The whole algebra as an ideal of itself.
    pub fn whole(&self) -> IdealHandle<'_> {
        IdealHandle { parent: self, space: Subspace::full(self.field, self.dim) }
    }

    /// The zero ideal.
    pub fn zero_ideal(&self) -> IdealHandle<'_> {
        IdealHandle { parent: self, space: Subspace::zero(self.field, self.dim) }
    }

    /// Commutator `[H, K]` of two ideals of this algebra.
    pub fn commutator(&self, h: &IdealHandle<'_>, k: &IdealHandle<'_>) -> Result<Subspace> {
        if !h.same_parent(self) || !k.same_parent(self) {
            return Err(Error::ParentMismatch);
        }
        Ok(self.bracket_span(&h.space, &k.space))
    }

    /// Smallest α-stable two-sided ideal containing `generators`.
    pub fn generated_ideal<I>(&self, generators: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut builder = SpanBuilder::new(self.field, self.dim);
        let mut queue: VecDeque<Vec<Scalar>> = VecDeque::new();
        for g in generators {
            if builder.insert(g.clone()) {
                queue.push_back(g);
            }
        }
        while let Some(v) = queue.pop_front() {
            if builder.is_full() {
                break;
            }
            let mut next = vec![self.apply_alpha(&v)];
            for y in 0..self.dim {
                let e = self.basis_vector(y);
                next.push(self.bracket(&v, &e));
                next.push(self.bracket(&e, &v));
            }
            for w in next {
                if builder.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        builder.finish()
    }

    /// The quotient algebra `L / I` and the canonical projection.
    pub fn quotient(&self, ideal: &IdealHandle<'_>) -> Result<(HomLeibnizAlgebra, AlgebraHom)> {
        if !ideal.same_parent(self) {
            return Err(Error::ParentMismatch);
        }
        let q = QuotientSpace::from_subspace(ideal.space.clone());
        let labels: Vec<String> = q.coset_basis().iter().map(|&c| self.labels[c].clone()).collect();
        let alpha = self.alpha.induced(&q, &q)?;
        let reps: Vec<Vec<Scalar>> = (0..q.dim()).map(|a| q.lift_basis(a)).collect();
        let quotient = HomLeibnizAlgebra::from_bracket_fn(self.field, labels, alpha, |a, b| {
            q.project(&self.bracket(&reps[a], &reps[b]))
        })?;
        let proj = LinearMap::from_fn(self.field, self.dim, q.dim(), |i| q.project(&self.basis_vector(i)));
        let hom = AlgebraHom::new(self.clone(), quotient.clone(), proj)?;
        Ok((quotient, hom))
    }

    /// Quotient by a subspace that is first verified to be a two-sided Hom-ideal.
    pub fn quotient_by(&self, space: &Subspace) -> Result<(HomLeibnizAlgebra, AlgebraHom)> {
        let ideal = self.ideal(space.clone())?;
        self.quotient(&ideal)
    }

    /// The subalgebra on `space` (basis = canonical RREF basis) and its inclusion.
    pub fn subalgebra(&self, space: &Subspace) -> Result<(HomLeibnizAlgebra, LinearMap)> {
        let basis = space.basis();
        for x in &basis {
            let ax = self.apply_alpha(x);
            if !space.contains(&ax) {
                return Err(Error::NotAlphaStable(format!("alpha({}) = {}", self.format(x), self.format(&ax))));
            }
            for y in &basis {
                let b = self.bracket(x, y);
                if !space.contains(&b) {
                    return Err(Error::Structure(format!(
                        "[{}, {}] = {} leaves the subspace",
                        self.format(x),
                        self.format(y),
                        self.format(&b)
                    )));
                }
            }
        }
        let labels: Vec<String> = basis
            .iter()
            .zip(space.pivots())
            .map(|(v, &p)| {
                if v.iter().filter(|x| !x.is_zero()).count() == 1 {
                    self.labels[p].clone()
                } else {
                    format!("{}'", self.labels[p])
                }
            })
            .collect();
        let m = space.dim();
        let alpha = LinearMap::from_fn(self.field, m, m, |a| space.coordinates(&self.apply_alpha(&basis[a])).unwrap());
        let sub = HomLeibnizAlgebra::from_bracket_fn(self.field, labels, alpha, |a, b| {
            space.coordinates(&self.bracket(&basis[a], &basis[b])).unwrap()
        })?;
        let incl = LinearMap::from_columns(self.field, self.dim, &basis)?;
        Ok((sub, incl))
    }

    /// `L_Lie`: the quotient by the ideal generated by all squares `[x, x]`.
    pub fn lieization(&self) -> Result<(HomLeibnizAlgebra, AlgebraHom)> {
        let n = self.dim;
        let mut gens = Vec::new();
        for i in 0..n {
            gens.push(self.bracket_basis(i, i).to_vec());
            for j in i + 1..n {
                gens.push(crate::linalg::add_vec(self.bracket_basis(i, j), self.bracket_basis(j, i)));
            }
        }
        let kernel = self.generated_ideal(gens);
        let ideal = IdealHandle { parent: self, space: kernel };
        self.quotient(&ideal)
    }

    /// Yau twist of a Leibniz algebra (twist = identity) along a bracket-preserving
    /// endomorphism: `[x, y]' = [f(x), f(y)]`, twist `f`.
    pub fn yau_twist(&self, endo: &LinearMap) -> Result<HomLeibnizAlgebra> {
        if self.alpha != LinearMap::identity(self.field, self.dim) {
            return Err(Error::NotLeibniz);
        }
        if endo.domain_dim() != self.dim || endo.codomain_dim() != self.dim {
            return Err(Error::Structure("endomorphism has the wrong shape".into()));
        }
        let images: Vec<Vec<Scalar>> = (0..self.dim).map(|i| endo.column(i)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = endo.apply(self.bracket_basis(i, j));
                let rhs = self.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotEndomorphism(format!(
                        "f[{}, {}] = {} but [f({}), f({})] = {}",
                        self.labels[i],
                        self.labels[j],
                        self.format(&lhs),
                        self.labels[i],
                        self.labels[j],
                        self.format(&rhs)
                    )));
                }
            }
        }
        HomLeibnizAlgebra::from_bracket_fn(self.field, self.labels.clone(), endo.clone(), |i, j| {
            self.bracket(&images[i], &images[j])
        })
    }

    /// `L ⊕ L'` with componentwise bracket and twist; labels of the second
    /// summand get a `'` suffix when they clash.
    pub fn direct_sum(&self, other: &HomLeibnizAlgebra) -> Result<HomLeibnizAlgebra> {
        if self.field != other.field {
            return Err(Error::Structure("summands over different fields".into()));
        }
        let (n, m) = (self.dim, other.dim);
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let alpha = LinearMap::from_fn(self.field, n + m, n + m, |i| {
            let mut v = zero_vec(self.field, n + m);
            if i < n {
                v[..n].clone_from_slice(&self.alpha_basis(i));
            } else {
                v[n..].clone_from_slice(&other.alpha_basis(i - n));
            }
            v
        });
        HomLeibnizAlgebra::from_bracket_fn(self.field, labels, alpha, |i, j| {
            let mut v = zero_vec(self.field, n + m);
            if i < n && j < n {
                v[..n].clone_from_slice(self.bracket_basis(i, j));
            } else if i >= n && j >= n {
                v[n..].clone_from_slice(other.bracket_basis(i - n, j - n));
            }
            v
        })
    }

    /// The same algebra with basis reordered: new basis vector `a` is old `perm[a]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<HomLeibnizAlgebra> {
        let n = self.dim;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Structure(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        let reorder = |v: &[Scalar]| -> Vec<Scalar> { (0..n).map(|a| v[perm[a]].clone()).collect() };
        let labels = perm.iter().map(|&p| self.labels[p].clone()).collect();
        let alpha = LinearMap::from_fn(self.field, n, n, |a| reorder(&self.alpha_basis(perm[a])));
        HomLeibnizAlgebra::from_bracket_fn(self.field, labels, alpha, |a, b| reorder(self.bracket_basis(perm[a], perm[b])))
    }
}

/// A subspace verified to be a two-sided Hom-ideal of `parent`.
#[derive(Debug, Clone)]
pub struct IdealHandle<'a> {
    parent: &'a HomLeibnizAlgebra,
    space: Subspace,
}

impl<'a> IdealHandle<'a> {
    pub fn parent(&self) -> &'a HomLeibnizAlgebra {
        self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn same_parent(&self, other: &HomLeibnizAlgebra) -> bool {
        std::ptr::eq(self.parent, other) || self.parent == other
    }
}

/// A homomorphism `f` with `f[x, y] = [f x, f y]` and `f ∘ α = α' ∘ f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraHom {
    source: HomLeibnizAlgebra,
    target: HomLeibnizAlgebra,
    map: LinearMap,
}

impl AlgebraHom {
    pub fn new(source: HomLeibnizAlgebra, target: HomLeibnizAlgebra, map: LinearMap) -> Result<Self> {
        Self::check(&source, &target, &map)?;
        Ok(AlgebraHom { source, target, map })
    }

    /// Verifies the homomorphism conditions on basis pairs.
    pub fn check(source: &HomLeibnizAlgebra, target: &HomLeibnizAlgebra, map: &LinearMap) -> Result<()> {
        if map.domain_dim() != source.dim() || map.codomain_dim() != target.dim() {
            return Err(Error::Structure(format!(
                "map is {}x{}, expected {}x{}",
                map.codomain_dim(),
                map.domain_dim(),
                target.dim(),
                source.dim()
            )));
        }
        let images: Vec<Vec<Scalar>> = (0..source.dim()).map(|i| map.column(i)).collect();
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let lhs = map.apply(source.bracket_basis(i, j));
                let rhs = target.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotHomomorphism(format!(
                        "f[{}, {}] = {} but [f {}, f {}] = {}",
                        source.labels[i],
                        source.labels[j],
                        target.format(&lhs),
                        source.labels[i],
                        source.labels[j],
                        target.format(&rhs)
                    )));
                }
            }
            let lhs = map.apply(&source.alpha_basis(i));
            let rhs = target.apply_alpha(&images[i]);
            if lhs != rhs {
                return Err(Error::NotHomomorphism(format!(
                    "f(alpha({})) = {} but alpha(f({})) = {}",
                    source.labels[i],
                    target.format(&lhs),
                    source.labels[i],
                    target.format(&rhs)
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &HomLeibnizAlgebra {
        &self.source
    }

    pub fn target(&self) -> &HomLeibnizAlgebra {
        &self.target
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn kernel(&self) -> Subspace {
        self.map.kernel()
    }

    pub fn image(&self) -> Subspace {
        self.map.image()
    }

    pub fn compose(&self, inner: &AlgebraHom) -> Result<AlgebraHom> {
        if inner.target != self.source {
            return Err(Error::Structure("composition of mismatched homomorphisms".into()));
        }
        Ok(AlgebraHom { source: inner.source.clone(), target: self.target.clone(), map: self.map.compose(&inner.map) })
    }

    pub fn identity(algebra: &HomLeibnizAlgebra) -> AlgebraHom {
        AlgebraHom {
            source: algebra.clone(),
            target: algebra.clone(),
            map: LinearMap::identity(algebra.field(), algebra.dim()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q(n: i64) -> Scalar {
        FieldSpec::Rationals.from_i64(n)
    }

    fn span(alg: &HomLeibnizAlgebra, idx: &[usize]) -> Subspace {
        Subspace::span(alg.field(), alg.dim(), idx.iter().map(|&i| alg.basis_vector(i))).unwrap()
    }

    #[test]
    fn e1_is_valid_and_not_hom_lie() {
        let e1 = catalog::e1(FieldSpec::Rationals);
        let r = e1.validate();
        assert!(r.is_valid(), "{}", r.summary());
        assert_eq!(r.flag("hom_lie"), Some(false));
    }

    #[test]
    fn abelian_with_any_twist_is_valid() {
        let f = FieldSpec::Rationals;
        let alpha = LinearMap::from_columns(f, 3, &[vec![q(1), q(2), q(3)], vec![q(0), q(-1), q(5)], vec![q(7), q(0), q(0)]])
            .unwrap();
        let a = HomLeibnizAlgebra::abelian(f, default_labels("e", 3), alpha).unwrap();
        let r = a.validate();
        assert!(r.is_valid());
        assert_eq!(r.flag("hom_lie"), Some(true));
    }

    #[test]
    fn perturbed_e1_is_rejected_with_witness() {
        let e1 = catalog::e1(FieldSpec::Rationals);
        let mut s = e1.structure().to_vec();
        // c[1][2][1] in one-based indexing: [e1, e2] gains an e1 component.
        s[2] = q(1);
        let bad = HomLeibnizAlgebra::from_parts(e1.field(), e1.labels().to_vec(), s, e1.alpha().clone()).unwrap();
        let r = bad.validate();
        assert!(!r.is_valid());
        let v = r.first_violation().unwrap();
        assert!(v.axiom == HOM_LEIBNIZ_IDENTITY || v.axiom == MULTIPLICATIVITY);
        assert!(!v.witness.is_empty());
    }

    #[test]
    fn structure_shape_is_checked() {
        let f = FieldSpec::Rationals;
        let err = HomLeibnizAlgebra::from_parts(f, default_labels("e", 2), vec![f.zero(); 7], LinearMap::identity(f, 2));
        assert!(matches!(err, Err(Error::Structure(_))));
    }

    #[test]
    fn commutators() {
        let f = FieldSpec::Rationals;
        let e1 = catalog::e1(f);
        let w = e1.whole();
        assert_eq!(e1.commutator(&w, &w).unwrap(), span(&e1, &[0]));
        let ab = catalog::abelian(f, 3);
        let wa = ab.whole();
        assert!(ab.commutator(&wa, &wa).unwrap().is_zero());
        let sl2 = catalog::sl2(f);
        let ws = sl2.whole();
        assert!(sl2.commutator(&ws, &ws).unwrap().is_full());
        assert_eq!(e1.commutator(&w, &ws), Err(Error::ParentMismatch));
    }

    #[test]
    fn centers() {
        let f = FieldSpec::Rationals;
        let e1 = catalog::e1(f);
        assert_eq!(e1.center(), &span(&e1, &[0]));
        assert!(catalog::abelian(f, 3).center().is_full());
        assert!(catalog::sl2(f).center().is_zero());
    }

    #[test]
    fn quotients() {
        let f = FieldSpec::Rationals;
        let e1 = catalog::e1(f);
        let (quo, proj) = e1.quotient_by(&span(&e1, &[0])).unwrap();
        assert_eq!(quo.dim(), 1);
        assert!(quo.is_abelian());
        assert_eq!(quo.alpha(), &LinearMap::identity(f, 1));
        assert!(quo.validate().is_valid());
        assert_eq!(proj.map().rank(), 1);

        let (same, _) = e1.quotient_by(&Subspace::zero(f, 2)).unwrap();
        assert_eq!(same, e1);

        assert!(matches!(e1.quotient_by(&span(&e1, &[1])), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn not_alpha_stable() {
        // Abelian algebra: every subspace absorbs brackets, but the twist may move it.
        let f = FieldSpec::Rationals;
        let alpha = LinearMap::from_columns(f, 2, &[vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        let a = HomLeibnizAlgebra::abelian(f, default_labels("e", 2), alpha).unwrap();
        assert!(matches!(a.quotient_by(&span(&a, &[0])), Err(Error::NotAlphaStable(_))));
    }

    #[test]
    fn predicates() {
        let f = FieldSpec::Rationals;
        let p = catalog::e1(f).predicates();
        assert!(!p.perfect && !p.alpha_perfect && p.alpha_surjective && !p.abelian);
        let p = catalog::sl2(f).predicates();
        assert!(p.perfect && p.alpha_perfect && p.alpha_surjective);
        let p = catalog::abelian(f, 2).predicates();
        assert!(!p.perfect && !p.alpha_perfect && p.alpha_surjective && p.abelian);
    }

    #[test]
    fn lieization() {
        let f = FieldSpec::Rationals;
        let e1 = catalog::e1(f);
        let (lie, proj) = e1.lieization().unwrap();
        assert_eq!(lie.dim(), 1);
        assert!(lie.is_abelian() && lie.is_hom_lie());
        assert_eq!(proj.kernel(), span(&e1, &[0]));

        let sl2 = catalog::sl2(f);
        let (same, p) = sl2.lieization().unwrap();
        assert_eq!(same, sl2);
        assert_eq!(p.map(), &LinearMap::identity(f, 3));

        let ab = catalog::abelian(f, 2);
        assert_eq!(ab.lieization().unwrap().0, ab);
    }

    #[test]
    fn yau_twists() {
        let f = FieldSpec::Rationals;
        let sl2 = catalog::sl2(f);
        let tw = sl2.yau_twist(&catalog::sl2_diagonal_automorphism(f)).unwrap();
        assert!(tw.validate().is_valid());
        assert!(tw.is_hom_lie());
        let p = tw.predicates();
        assert!(p.perfect && p.alpha_perfect);

        assert_eq!(sl2.yau_twist(&LinearMap::identity(f, 3)).unwrap(), sl2);

        let ab = catalog::abelian(f, 2);
        let endo = LinearMap::from_columns(f, 2, &[vec![q(2), q(1)], vec![q(0), q(3)]]).unwrap();
        let t = ab.yau_twist(&endo).unwrap();
        assert!(t.is_abelian());
        assert_eq!(t.alpha(), &endo);

        // Doubling e breaks [e, f] = h.
        let bad = LinearMap::from_columns(f, 3, &[vec![q(2), q(0), q(0)], vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]])
            .unwrap();
        assert!(matches!(sl2.yau_twist(&bad), Err(Error::NotEndomorphism(_))));
    }

    #[test]
    fn permuting_preserves_validity() {
        let e1 = catalog::e1(FieldSpec::Rationals);
        let p = e1.permuted(&[1, 0]).unwrap();
        assert!(p.validate().is_valid());
        assert_eq!(p.labels(), &["e2".to_string(), "e1".to_string()]);
    }
}
