//! Hom-associative algebras and their degree-one Hochschild-type invariants.
//!
//! `𝕃^α(A) = (A ⊗ A) / Im(b₃)` is built on the ambient basis `e_a ⊗ e_b ↦ a * d + b`.
//! `HH₁^α(A)` is taken to be the kernel of `φ(a ⊠ b) = ab − ba` on `𝕃^α(A)`,
//! which the short exact sequence `0 → HH₁^α → 𝕃^α → [A, A] → 0` makes
//! equivalent to the Hochschild definition.

use serde::Serialize;

use crate::actions::{HomAction, MutualActions};
use crate::algebra::{AlgebraHom, HomLeibnizAlgebra};
use crate::error::{Error, Result};
use crate::exactness::{snake, SnakeInput};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{add_vec, axpy, bilinear, is_zero_vec, kron, sub_vec, zero_vec, LinearMap, QuotientSpace, Subspace};
use crate::report::{ExactnessReport, ValidationReport};
use crate::tensor::{build_tensor, induced_tensor_map, TensorProduct};

pub const HOMASSOC_AXIOMS: [&str; 2] =
    ["hom-associativity: alpha(a)(bc) = (ab)alpha(c)", "multiplicativity: alpha(ab) = alpha(a)alpha(b)"];

/// `(A, ·, α)` given by structure constants `product[(i * d + j) * d + k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAssociativeAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    product: Vec<Scalar>,
    alpha: LinearMap,
}

impl HomAssociativeAlgebra {
    /// Raw constructor: checks shapes, fields and labels but not the axioms.
    pub fn from_parts(field: FieldSpec, labels: Vec<String>, product: Vec<Scalar>, alpha: LinearMap) -> Result<Self> {
        let d = labels.len();
        if product.len() != d * d * d {
            return Err(Error::Structure(format!("product tensor has {} entries, expected {}", product.len(), d * d * d)));
        }
        if alpha.domain_dim() != d || alpha.codomain_dim() != d {
            return Err(Error::Structure(format!("twist is {}x{}, expected {d}x{d}", alpha.codomain_dim(), alpha.domain_dim())));
        }
        if alpha.field() != field || product.iter().any(|x| x.field() != field) {
            return Err(Error::Structure("entries over a different field".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        if let Some(l) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::Structure(format!("duplicate basis label {l:?}")));
        }
        Ok(HomAssociativeAlgebra { field, labels, product, alpha })
    }

    /// Builds the product tensor from `e_i · e_j`.
    pub fn from_product_fn(
        field: FieldSpec,
        labels: Vec<String>,
        alpha: LinearMap,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let d = labels.len();
        let mut data = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                let v = product(i, j);
                if v.len() != d {
                    return Err(Error::Structure(format!("product value has length {}, expected {d}", v.len())));
                }
                data.extend(v);
            }
        }
        Self::from_parts(field, labels, data, alpha)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn product_tensor(&self) -> &[Scalar] {
        &self.product
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let d = self.dim();
        &self.product[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        crate::linalg::unit_vec(self.field, self.dim(), i)
    }

    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        bilinear(self.field, &self.product, d, d, a, b)
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        sub_vec(&self.multiply(a, b), &self.multiply(b, a))
    }

    /// Checks both identities on basis triples and pairs; flags commutativity.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut report = ValidationReport::new("hom-associative algebra");
        report.declare(&HOMASSOC_AXIOMS);
        let alphas: Vec<Vec<Scalar>> = (0..d).map(|i| self.alpha.column(i)).collect();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let lhs = self.multiply(&alphas[a], self.product_basis(b, c));
                    let rhs = self.multiply(self.product_basis(a, b), &alphas[c]);
                    let wit = || vec![self.labels[a].clone(), self.labels[b].clone(), self.labels[c].clone()];
                    report.check(HOMASSOC_AXIOMS[0], wit, sub_vec(&lhs, &rhs));
                }
                let lhs = self.alpha.apply(self.product_basis(a, b));
                let rhs = self.multiply(&alphas[a], &alphas[b]);
                report.check(HOMASSOC_AXIOMS[1], || vec![self.labels[a].clone(), self.labels[b].clone()], sub_vec(&lhs, &rhs));
            }
        }
        report.set_flag("commutative", self.is_commutative());
        report
    }

    pub fn checked(self) -> Result<Self> {
        let r = self.validate();
        if r.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidAlgebra(r.summary()))
        }
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.product_basis(i, j) == self.product_basis(j, i)))
    }

    /// Yau twist of an associative algebra (identity twist) by an algebra endomorphism.
    pub fn yau_twist(&self, endo: &LinearMap) -> Result<Self> {
        let d = self.dim();
        if self.alpha != LinearMap::identity(self.field, d) {
            return Err(Error::NotLeibniz);
        }
        let images: Vec<Vec<Scalar>> = (0..d).map(|i| endo.column(i)).collect();
        for i in 0..d {
            for j in 0..d {
                if endo.apply(self.product_basis(i, j)) != self.multiply(&images[i], &images[j]) {
                    return Err(Error::NotEndomorphism(format!("f({} {}) differs from f({}) f({})", self.labels[i], self.labels[j], self.labels[i], self.labels[j])));
                }
            }
        }
        Self::from_product_fn(self.field, self.labels.clone(), endo.clone(), |i, j| self.multiply(&images[i], &images[j]))
    }

    /// The commutator Hom-Leibniz (in fact Hom-Lie) algebra `[a, b] = ab − ba`.
    pub fn to_leibniz(&self) -> HomLeibnizAlgebra {
        HomLeibnizAlgebra::from_bracket_fn(self.field, self.labels.clone(), self.alpha.clone(), |i, j| {
            sub_vec(self.product_basis(i, j), self.product_basis(j, i))
        })
        .expect("shapes were checked on construction")
    }

    /// `[A, A]` as a subspace of `A`.
    pub fn commutator_subspace(&self) -> Subspace {
        let d = self.dim();
        let vs = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| sub_vec(self.product_basis(i, j), self.product_basis(j, i)));
        Subspace::span(self.field, d, vs).unwrap()
    }

    /// A basis pair `(a, b)` with `[a, (α − id)(b)] ≠ 0`, if any.
    pub fn alpha_identity_witness(&self) -> Option<(String, String)> {
        let d = self.dim();
        for b in 0..d {
            let mut shift = self.alpha.column(b);
            shift[b] -= &self.field.one();
            if is_zero_vec(&shift) {
                continue;
            }
            for a in 0..d {
                if !is_zero_vec(&self.commutator(&self.basis_vector(a), &shift)) {
                    return Some((self.labels[a].clone(), format!("alpha({0}) - {0}", self.labels[b])));
                }
            }
        }
        None
    }

    pub fn alpha_identity_holds(&self) -> bool {
        self.alpha_identity_witness().is_none()
    }

    /// Ambient map `a ⊗ b ↦ ab − ba` on `A ⊗ A`.
    fn phi_ambient(&self) -> LinearMap {
        let d = self.dim();
        LinearMap::from_fn(self.field, d * d, d, |g| sub_vec(self.product_basis(g / d, g % d), self.product_basis(g % d, g / d)))
    }

    /// `b₃(a ⊗ b ⊗ c) = ab ⊗ α(c) − α(a) ⊗ bc + ca ⊗ α(b)`.
    pub fn b3(&self) -> LinearMap {
        let d = self.dim();
        LinearMap::from_fn(self.field, d * d * d, d * d, |g| {
            let (a, b, c) = (g / (d * d), (g / d) % d, g % d);
            let (aa, ab, ac) = (self.alpha.column(a), self.alpha.column(b), self.alpha.column(c));
            let mut v = kron(self.product_basis(a, b), &ac);
            v = sub_vec(&v, &kron(&aa, self.product_basis(b, c)));
            add_vec(&v, &kron(self.product_basis(c, a), &ab))
        })
    }

    /// Coordinates on `A ⊗ A` of the relations defining `HH₁^M(A, α)`.
    fn milnor_relations(&self) -> Vec<Vec<Scalar>> {
        let d = self.dim();
        let mut out: Vec<Vec<Scalar>> = self.b3().image().basis();
        for a in 0..d {
            let aa = self.alpha.column(a);
            for b in 0..d {
                for c in 0..d {
                    let bc = self.commutator(&self.basis_vector(b), &self.basis_vector(c));
                    out.push(kron(&aa, &bc));
                    let ab = self.commutator(&self.basis_vector(a), &self.basis_vector(b));
                    out.push(kron(&ab, &self.alpha.column(c)));
                }
            }
        }
        out.retain(|v| !is_zero_vec(v));
        out
    }

    /// `HH₁^M(A, α)` as a quotient of `A ⊗ A`.
    pub fn milnor_space(&self) -> QuotientSpace {
        let d = self.dim();
        QuotientSpace::new(self.field, d * d, &self.milnor_relations()).unwrap()
    }
}

/// `𝕃^α(A)` with its bracket, twist and `φ`.
#[derive(Debug, Clone)]
pub struct HochschildModule {
    parent: HomAssociativeAlgebra,
    b3: LinearMap,
    presentation: QuotientSpace,
    algebra: HomLeibnizAlgebra,
    /// `φ : 𝕃^α(A) → A`, with image `[A, A]`.
    phi: LinearMap,
    commutators: Subspace,
}

/// Builds `𝕃^α(A)`, verifying that `b₃` is killed by `a ⊗ b ↦ ab − ba` and
/// that the bracket and twist descend.
pub fn hochschild_module(a: &HomAssociativeAlgebra) -> Result<HochschildModule> {
    let report = a.validate();
    if !report.is_valid() {
        return Err(Error::InvalidAlgebra(report.summary()));
    }
    let d = a.dim();
    let field = a.field;
    let b3 = a.b3();
    let phi_amb = a.phi_ambient();
    if !phi_amb.compose(&b3).is_zero() {
        return Err(Error::BracketNotWellDefined("ab - ba does not vanish on Im(b3)".into()));
    }
    let presentation = QuotientSpace::from_subspace(b3.image());
    fn wrap(what: &'static str) -> impl Fn(crate::linalg::LinAlgError) -> Error {
        move |e| Error::BracketNotWellDefined(format!("{what} does not descend: {e}"))
    }
    let alpha_amb = LinearMap::from_fn(field, d * d, d * d, |g| kron(&a.alpha.column(g / d), &a.alpha.column(g % d)));
    let alpha = alpha_amb.induced(&presentation, &presentation).map_err(wrap("the twist"))?;
    let target = QuotientSpace::new(field, d, &[])?;
    let phi = phi_amb.induced(&presentation, &target).map_err(wrap("phi"))?;
    let labels: Vec<String> =
        presentation.coset_basis().iter().map(|&g| format!("{}#{}", a.labels[g / d], a.labels[g % d])).collect();
    let phis: Vec<Vec<Scalar>> = (0..presentation.dim()).map(|i| phi.column(i)).collect();
    // [a ⊠ b, a' ⊠ b'] = [a, b] ⊠ [a', b'] only depends on φ of each argument.
    let algebra = HomLeibnizAlgebra::from_bracket_fn(field, labels, alpha, |i, j| presentation.project(&kron(&phis[i], &phis[j])))?;
    let r = algebra.validate();
    if !r.is_valid() {
        return Err(Error::BracketNotWellDefined(format!("L(A) is not a Hom-Leibniz algebra: {}", r.summary())));
    }
    Ok(HochschildModule { parent: a.clone(), b3, presentation, algebra, phi, commutators: a.commutator_subspace() })
}

impl HochschildModule {
    pub fn parent(&self) -> &HomAssociativeAlgebra {
        &self.parent
    }

    pub fn b3(&self) -> &LinearMap {
        &self.b3
    }

    pub fn presentation(&self) -> &QuotientSpace {
        &self.presentation
    }

    /// `(𝕃^α(A), ᾱ_A)` on quotient coordinates.
    pub fn algebra(&self) -> &HomLeibnizAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.presentation.dim()
    }

    /// `φ` with values in `A`.
    pub fn phi(&self) -> &LinearMap {
        &self.phi
    }

    /// `φ` onto `[A, A]`, in its RREF basis.
    pub fn phi_onto_commutators(&self) -> LinearMap {
        LinearMap::from_fn(self.parent.field, self.dim(), self.commutators.dim(), |i| {
            self.commutators.coordinates(&self.phi.column(i)).expect("phi lands in [A, A]")
        })
    }

    pub fn commutators(&self) -> &Subspace {
        &self.commutators
    }

    /// `HH₁^α(A) = Ker φ` inside `𝕃^α(A)`.
    pub fn hh1(&self) -> Subspace {
        self.phi.kernel()
    }

    /// Class of `a ⊠ b` for vectors `a`, `b` of `A`.
    pub fn class(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.presentation.project(&kron(a, b))
    }

    /// `[a, b] ⊠ α(c) − α(a) ⊠ [b, c] + [c, a] ⊠ α(b) = 0` for every basis triple.
    pub fn cyclic_identity_holds(&self) -> bool {
        let a = &self.parent;
        let d = a.dim();
        let e: Vec<Vec<Scalar>> = (0..d).map(|i| a.basis_vector(i)).collect();
        let al: Vec<Vec<Scalar>> = (0..d).map(|i| a.alpha.column(i)).collect();
        (0..d * d * d).all(|g| {
            let (x, y, z) = (g / (d * d), (g / d) % d, g % d);
            let mut v = kron(&a.commutator(&e[x], &e[y]), &al[z]);
            v = sub_vec(&v, &kron(&al[x], &a.commutator(&e[y], &e[z])));
            v = add_vec(&v, &kron(&a.commutator(&e[z], &e[x]), &al[y]));
            self.presentation.is_zero_class(&v)
        })
    }

    /// The actions of `A` (through its commutator algebra) on `𝕃^α(A)` and of
    /// `𝕃^α(A)` on `A`:
    /// `ᵃ'(a ⊠ b) = [a', a] ⊠ α(b) − [a', b] ⊠ α(a)`,
    /// `(a ⊠ b)ᵃ' = [a, a'] ⊠ α(b) + α(a) ⊠ [b, a']`,
    /// `^(a ⊠ b)a' = [[a, b], a']`, `a'^(a ⊠ b) = [a', [a, b]]`.
    pub fn actions(&self) -> Result<MutualActions> {
        let a = &self.parent;
        let d = a.dim();
        let field = a.field;
        let lie = a.to_leibniz();
        let e: Vec<Vec<Scalar>> = (0..d).map(|i| a.basis_vector(i)).collect();
        let al: Vec<Vec<Scalar>> = (0..d).map(|i| a.alpha.column(i)).collect();
        let mut lefts = Vec::with_capacity(d);
        let mut rights = Vec::with_capacity(d);
        for x in 0..d {
            let left = LinearMap::from_fn(field, d * d, d * d, |g| {
                let (p, q) = (g / d, g % d);
                sub_vec(&kron(&a.commutator(&e[x], &e[p]), &al[q]), &kron(&a.commutator(&e[x], &e[q]), &al[p]))
            });
            let right = LinearMap::from_fn(field, d * d, d * d, |g| {
                let (p, q) = (g / d, g % d);
                add_vec(&kron(&a.commutator(&e[p], &e[x]), &al[q]), &kron(&al[p], &a.commutator(&e[q], &e[x])))
            });
            let wrap = |e| Error::BracketNotWellDefined(format!("action on L(A) does not descend: {e}"));
            lefts.push(left.induced(&self.presentation, &self.presentation).map_err(wrap)?);
            rights.push(right.induced(&self.presentation, &self.presentation).map_err(wrap)?);
        }
        let on_l = HomAction::from_fns(lie.clone(), self.algebra.clone(), |x, q| lefts[x].column(q), |q, x| rights[x].column(q))?;
        let phis: Vec<Vec<Scalar>> = (0..self.dim()).map(|i| self.phi.column(i)).collect();
        let on_a = HomAction::from_fns(
            self.algebra.clone(),
            lie.clone(),
            |q, x| lie.bracket(&phis[q], &e[x]),
            |x, q| lie.bracket(&e[x], &phis[q]),
        )?;
        MutualActions::new(on_l, on_a)
    }

    /// Compares `𝕃^α(A)` with `A ∗ A` (adjoint actions of the commutator
    /// algebra): the generator map `x ∗ y ↦ x ⊠ y` on both blocks should descend
    /// and be onto, and its kernel should contain the ideal generated by the
    /// `b₃`-shaped elements placed in either block.
    pub fn tensor_square_check(&self) -> Result<TensorSquareCheck> {
        let a = &self.parent;
        let d = a.dim();
        let field = a.field;
        let t = build_tensor(&MutualActions::adjoint(&a.to_leibniz()))?;
        let block = |g: usize| if g < d * d { (g / d, g % d) } else { ((g - d * d) / d, (g - d * d) % d) };
        let ambient = LinearMap::from_fn(field, t.ambient_dim(), d * d, |g| {
            let (x, y) = block(g);
            kron(&a.basis_vector(x), &a.basis_vector(y))
        });
        let map = ambient.induced(t.presentation(), &self.presentation).ok();
        let mut gens = Vec::new();
        for g in 0..d * d * d {
            let column = self.b3.column(g);
            let mut mn = zero_vec(field, t.ambient_dim());
            let mut nm = zero_vec(field, t.ambient_dim());
            for (idx, c) in column.iter().enumerate() {
                if !c.is_zero() {
                    let (x, y) = (a.basis_vector(idx / d), a.basis_vector(idx % d));
                    axpy(&mut mn, c, &t.ambient_mn(&x, &y));
                    axpy(&mut nm, c, &t.ambient_nm(&x, &y));
                }
            }
            gens.push(t.class(&mn));
            gens.push(t.class(&nm));
        }
        let ideal = t.algebra().generated_ideal(gens);
        Ok(match map {
            Some(map) => {
                let kernel = map.kernel();
                TensorSquareCheck {
                    tensor_dim: t.dim(),
                    descends: true,
                    surjective: map.is_surjective(),
                    kernel_dim: kernel.dim(),
                    ideal_dim: ideal.dim(),
                    ideal_in_kernel: ideal.is_subspace_of(&kernel),
                }
            }
            None => TensorSquareCheck {
                tensor_dim: t.dim(),
                descends: false,
                surjective: false,
                kernel_dim: 0,
                ideal_dim: ideal.dim(),
                ideal_in_kernel: false,
            },
        })
    }
}

/// Outcome of [`HochschildModule::tensor_square_check`]. The kernel can exceed
/// the ideal: the two generator blocks of `A ∗ A` are only identified modulo
/// brackets, so for non-perfect `A` the blocks stay apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorSquareCheck {
    pub tensor_dim: usize,
    pub descends: bool,
    pub surjective: bool,
    pub kernel_dim: usize,
    pub ideal_dim: usize,
    pub ideal_in_kernel: bool,
}

impl TensorSquareCheck {
    pub fn holds(&self) -> bool {
        self.descends && self.surjective && self.ideal_in_kernel
    }
}

/// The degree-one invariants of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FirstHomologies {
    pub l_alpha_dim: usize,
    pub commutator_dim: usize,
    pub hh1_alpha_dim: usize,
    pub hh1_milnor_dim: usize,
    pub alpha_identity_holds: bool,
}

pub fn first_homologies(a: &HomAssociativeAlgebra) -> Result<FirstHomologies> {
    let h = hochschild_module(a)?;
    Ok(FirstHomologies {
        l_alpha_dim: h.dim(),
        commutator_dim: h.commutators.dim(),
        hh1_alpha_dim: h.hh1().dim(),
        hh1_milnor_dim: a.milnor_space().dim(),
        alpha_identity_holds: a.alpha_identity_holds(),
    })
}

/// Term names of the six-term Hochschild sequence.
pub const SEQUENCE_TERMS: [&str; 6] =
    ["A*HH1", "Ker(A*L(A) -> L(A))", "Ker(A*[A,A] -> [A,A])", "HH1", "HH1^M", "[A,A]/[A,[A,A]]"];

/// The three tensor products of the six-term Hochschild sequence.
#[derive(Debug, Clone)]
pub struct SequenceData {
    pub module: HochschildModule,
    pub with_hh1: TensorProduct,
    pub with_l: TensorProduct,
    pub with_commutators: TensorProduct,
}

/// Certifies
/// `A∗HH₁ → Ker(A∗𝕃 → 𝕃) → Ker(A∗[A,A] → [A,A]) → HH₁ → HH₁^M → [A,A]/[A,[A,A]] → 0`
/// by the snake lemma on
///
/// ```text
///   A∗HH₁ --> A∗𝕃 --> A∗[A,A] --> 0
///     |ψ₂      |ψ₂      |ψ₂
///   0 --> HH₁ --> 𝕃 --φ--> [A,A] --> 0
/// ```
///
/// together with the identifications of the three cokernels.
pub fn sequence_check(a: &HomAssociativeAlgebra) -> Result<(ExactnessReport, SequenceData)> {
    let h = hochschild_module(a)?;
    if let Some((x, y)) = a.alpha_identity_witness() {
        return Err(Error::AlphaIdentityFails(format!("[{x}, {y}] is nonzero")));
    }
    let field = a.field;
    let d = a.dim();
    let lie = a.to_leibniz();
    let l = h.algebra.clone();
    let on_l = h.actions()?;

    // HH₁ as an abelian subalgebra of 𝕃, with the restricted actions.
    let hh_space = h.hh1();
    let (hh, hh_incl) = l.subalgebra(&hh_space)?;
    let hh_basis = hh_space.basis();
    let restrict = |v: Vec<Scalar>| hh_space.coordinates(&v).ok_or_else(|| Error::HypothesisNotMet("HH1 is not A-stable".into()));
    let mut left = Vec::new();
    let mut right = Vec::new();
    for x in 0..d {
        let ex = lie.basis_vector(x);
        for v in &hh_basis {
            left.push(restrict(on_l.m_left_n(&ex, v))?);
        }
    }
    for v in &hh_basis {
        for x in 0..d {
            right.push(restrict(on_l.n_right_m(v, &lie.basis_vector(x)))?);
        }
    }
    let on_hh = HomAction::from_fns(lie.clone(), hh.clone(), |x, q| left[x * hh_basis.len() + q].clone(), |q, x| right[q * d + x].clone())?;
    let hh_on_a = HomAction::from_fns(
        hh.clone(),
        lie.clone(),
        |q, x| on_l.n_left_m(&hh_basis[q], &lie.basis_vector(x)),
        |x, q| on_l.m_right_n(&lie.basis_vector(x), &hh_basis[q]),
    )?;
    let with_hh1 = build_tensor(&MutualActions::new(on_hh, hh_on_a)?)?;
    let with_l = build_tensor(&on_l)?;

    // [A, A] as a subalgebra of the commutator algebra, acted on by brackets.
    let c_space = h.commutators.clone();
    let (c, _) = lie.subalgebra(&c_space)?;
    let cb = c_space.basis();
    let coords = |v: Vec<Scalar>| c_space.coordinates(&v).expect("[A, A] is an ideal");
    let on_c = HomAction::from_fns(
        lie.clone(),
        c.clone(),
        |x, q| coords(lie.bracket(&lie.basis_vector(x), &cb[q])),
        |q, x| coords(lie.bracket(&cb[q], &lie.basis_vector(x))),
    )?;
    let c_on_a = HomAction::from_fns(
        c.clone(),
        lie.clone(),
        |q, x| lie.bracket(&cb[q], &lie.basis_vector(x)),
        |x, q| lie.bracket(&lie.basis_vector(x), &cb[q]),
    )?;
    let with_commutators = build_tensor(&MutualActions::new(on_c, c_on_a)?)?;

    let id = AlgebraHom::identity(&lie);
    let incl = AlgebraHom::new(hh.clone(), l.clone(), hh_incl)?;
    let phi = AlgebraHom::new(l.clone(), c.clone(), h.phi_onto_commutators())?;
    let f1 = induced_tensor_map(&id, &incl, &with_hh1, &with_l)?;
    let f2 = induced_tensor_map(&id, &phi, &with_l, &with_commutators)?;
    let (_, v1) = with_hh1.psi_linear()?;
    let (_, v2) = with_l.psi_linear()?;
    let (_, v3) = with_commutators.psi_linear()?;

    let mut report = ExactnessReport::new("A*HH1 -> Ker(A*L(A) -> L(A)) -> Ker(A*[A,A] -> [A,A]) -> HH1 -> HH1^M -> [A,A]/[A,[A,A]] -> 0");
    report.check("A acts trivially on HH1", v1.is_zero());
    let input = SnakeInput { f1: f1.map(), f2: f2.map(), g1: incl.map(), g2: phi.map(), v1: &v1, v2: &v2, v3: &v3 };
    let s = snake(&input, SEQUENCE_TERMS, &mut report);
    if let Some(s) = &s {
        report.check("Coker(psi2 on A*L(A)) has the dimension of HH1^M", s.cokernels[1].dim() == a.milnor_space().dim());
        let inner = lie.bracket_span(&Subspace::full(field, d), &c_space);
        report.check("Coker(psi2 on A*[A,A]) has the dimension of [A,A]/[A,[A,A]]", s.cokernels[2].dim() == c_space.dim() - inner.dim());
    }
    Ok((report, SequenceData { module: h, with_hh1, with_l, with_commutators }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn validation_and_witness() {
        let f = q();
        let dual = catalog::dual_numbers(f);
        let r = dual.validate();
        assert!(r.is_valid());
        assert_eq!(r.flag("commutative"), Some(true));
        assert_eq!(catalog::upper_triangular(f).validate().flag("commutative"), Some(false));
        // α(1) = 1, α(x) = 1: α(x·x) = 0 but α(x)α(x) = 1.
        let alpha = LinearMap::from_columns(f, 2, &[vec![f.one(), f.zero()], vec![f.one(), f.zero()]]).unwrap();
        let bad = HomAssociativeAlgebra::from_parts(f, dual.labels().to_vec(), dual.product_tensor().to_vec(), alpha).unwrap();
        let r = bad.validate();
        assert!(!r.holds(HOMASSOC_AXIOMS[1]));
        let v = r.violations.iter().find(|v| v.axiom == HOMASSOC_AXIOMS[1]).unwrap();
        assert_eq!(v.witness, vec!["x", "x"]);
    }

    #[test]
    fn commutator_algebras() {
        let f = q();
        assert!(catalog::dual_numbers(f).to_leibniz().is_abelian());
        let ut = catalog::upper_triangular(f).to_leibniz();
        assert!(ut.validate().is_valid());
        assert!(ut.is_hom_lie());
        assert_eq!(ut.derived_subspace().dim(), 1);
        let gl2 = catalog::matrices_2x2(f).to_leibniz();
        assert!(gl2.is_hom_lie());
        assert_eq!(gl2.derived_subspace().dim(), 3);
        assert_eq!(gl2.center().dim(), 1);
    }

    #[test]
    fn zero_product_line() {
        let h = hochschild_module(&catalog::zero_product_line(q())).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.phi().is_zero());
        assert!(h.algebra().is_abelian());
    }

    #[test]
    fn hochschild_module_invariants() {
        let f = q();
        for a in [catalog::dual_numbers(f), catalog::upper_triangular(f), catalog::matrices_2x2(f)] {
            let h = hochschild_module(&a).unwrap();
            assert!(h.cyclic_identity_holds());
            assert!(h.phi().image().is_subspace_of(h.commutators()));
            assert_eq!(h.phi().rank(), h.commutators().dim());
            let c = h.tensor_square_check().unwrap();
            assert!(c.holds(), "{c:?}");
            let fh = first_homologies(&a).unwrap();
            assert_eq!(fh.hh1_alpha_dim, fh.l_alpha_dim - fh.commutator_dim);
        }
        let ut = hochschild_module(&catalog::upper_triangular(f)).unwrap();
        assert_eq!(ut.phi().rank(), 1);
    }

    #[test]
    fn commutative_instances_agree() {
        let fh = first_homologies(&catalog::dual_numbers(q())).unwrap();
        assert_eq!(fh.hh1_alpha_dim, fh.l_alpha_dim);
        assert_eq!(fh.hh1_alpha_dim, fh.hh1_milnor_dim);
        assert!(fh.alpha_identity_holds);
    }

    #[test]
    fn upper_triangular_sequence() {
        let (r, _) = sequence_check(&catalog::upper_triangular(q())).unwrap();
        assert!(r.holds(), "{:?}", r.failures());
        assert_eq!(r.term_dim("[A,A]/[A,[A,A]]"), Some(0));
    }

    #[test]
    fn dual_numbers_sequence() {
        let (r, _) = sequence_check(&catalog::dual_numbers(q())).unwrap();
        assert!(r.holds(), "{:?}", r.failures());
        assert_eq!(r.term_dim("HH1"), r.term_dim("HH1^M"));
    }

    #[test]
    fn alpha_identity_failure() {
        let f = q();
        let ut = catalog::upper_triangular(f);
        // Conjugation by diag(1, 2): E12 ↦ 2 E12.
        let endo = LinearMap::from_columns(
            f,
            3,
            &[vec![f.one(), f.zero(), f.zero()], vec![f.zero(), f.from_i64(2), f.zero()], vec![f.zero(), f.zero(), f.one()]],
        )
        .unwrap();
        let twisted = ut.yau_twist(&endo).unwrap();
        assert!(twisted.validate().is_valid());
        assert!(!twisted.alpha_identity_holds());
        assert!(matches!(sequence_check(&twisted), Err(Error::AlphaIdentityFails(_))));
    }
}
