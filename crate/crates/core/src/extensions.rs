//! Central and α-central extensions, the universal ones built from tensor
//! squares, and the six-term sequence attached to an ideal of a perfect algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::actions::MutualActions;
use crate::algebra::{AlgebraHom, HomLeibnizAlgebra};
use crate::error::{Error, Result};
use crate::exactness::{record_joint, restrict_between, snake, SnakeInput};
use crate::field::Scalar;
use crate::linalg::{axpy, kron, sub_vec, zero_vec, LinearMap, QuotientSpace, SpanBuilder, Subspace};
use crate::report::ExactnessReport;
use crate::tensor::{build_tensor, ideal_sequence, psi_maps, TensorProduct};

/// Where the kernel of an extension sits relative to the center of the total algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtensionKind {
    Central,
    AlphaCentralOnly,
    Neither,
}

/// A surjective homomorphism `π : K ↠ L` with kernel `M`.
#[derive(Debug, Clone)]
pub struct Extension {
    proj: AlgebraHom,
    kernel: Subspace,
}

impl Extension {
    pub fn new(proj: AlgebraHom) -> Result<Self> {
        if !proj.map().is_surjective() {
            return Err(Error::NotSurjective);
        }
        let kernel = proj.kernel();
        Ok(Extension { proj, kernel })
    }

    /// As [`Extension::new`], additionally checking a claimed kernel.
    pub fn with_kernel(proj: AlgebraHom, kernel: Subspace) -> Result<Self> {
        let e = Self::new(proj)?;
        if e.kernel != kernel {
            return Err(Error::KernelMismatch(format!("claimed dimension {}, actual {}", kernel.dim(), e.kernel.dim())));
        }
        Ok(e)
    }

    pub fn total(&self) -> &HomLeibnizAlgebra {
        self.proj.source()
    }

    pub fn base(&self) -> &HomLeibnizAlgebra {
        self.proj.target()
    }

    pub fn proj(&self) -> &AlgebraHom {
        &self.proj
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    /// Central iff `M ⊆ Z(K)`; α-central only iff not central but `α(M) ⊆ Z(K)`.
    pub fn classify(&self) -> ExtensionKind {
        let center = self.total().center();
        if self.kernel.is_subspace_of(center) {
            ExtensionKind::Central
        } else if self.kernel.map(self.total().alpha()).is_subspace_of(center) {
            ExtensionKind::AlphaCentralOnly
        } else {
            ExtensionKind::Neither
        }
    }
}

/// `ψ_L : L ∗ L ↠ L` for a perfect `L`.
#[derive(Debug, Clone)]
pub struct UniversalCentral {
    pub extension: Extension,
    pub tensor: TensorProduct,
}

impl UniversalCentral {
    /// `dim Ker ψ_L`, which is `dim HL₂^α(L)`.
    pub fn kernel_dim(&self) -> usize {
        self.extension.kernel.dim()
    }
}

pub fn universal_central_extension(l: &HomLeibnizAlgebra) -> Result<UniversalCentral> {
    if !l.predicates().perfect {
        return Err(Error::NotPerfect);
    }
    let tensor = build_tensor(&MutualActions::adjoint(l))?;
    let (psi, _) = psi_maps(&tensor)?;
    Ok(UniversalCentral { extension: Extension::new(psi)?, tensor })
}

/// The homomorphism `f : L ∗ L → C` over a central extension `φ : C ↠ L`,
/// `f(l ∗ l') = [c_l, c_l']` for preimages `c_l` chosen from `seed`.
pub fn lift_against(u: &UniversalCentral, other: &Extension, seed: u64) -> Result<AlgebraHom> {
    if other.base() != u.extension.base() {
        return Err(Error::BaseMismatch);
    }
    if other.classify() != ExtensionKind::Central {
        return Err(Error::NotCentral);
    }
    let c = other.total();
    let l = other.base();
    let phi = other.proj().map();
    let field = l.field();
    let kernel = other.kernel().basis();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let preimages: Vec<Vec<Scalar>> = (0..l.dim())
        .map(|i| {
            let mut p = phi.solve(&l.basis_vector(i)).expect("projection is surjective");
            for k in &kernel {
                axpy(&mut p, &field.from_i64(rng.gen_range(-3..=3)), k);
            }
            p
        })
        .collect();
    let t = &u.tensor;
    let d = l.dim();
    let ambient = LinearMap::from_fn(field, t.ambient_dim(), c.dim(), |g| {
        // Both blocks list (first factor, second factor) in row-major order.
        let g = g % (d * d);
        c.bracket(&preimages[g / d], &preimages[g % d])
    });
    let target = QuotientSpace::new(field, c.dim(), &[])?;
    let f = ambient
        .induced(t.presentation(), &target)
        .map_err(|e| Error::BracketNotWellDefined(format!("lift does not descend: {e}")))?;
    let f = AlgebraHom::new(t.algebra().clone(), c.clone(), f)?;
    if phi.compose(f.map()) != *u.extension.proj().map() {
        return Err(Error::HypothesisNotMet("the lift does not cover psi_L".into()));
    }
    Ok(f)
}

/// `ψ : α(L) ∗ α(L) ↠ L` and the presentation `uce_α^Lb(L)`, with the
/// generator isomorphism between them.
#[derive(Debug, Clone)]
pub struct UniversalAlphaCentral {
    pub extension: Extension,
    pub tensor: TensorProduct,
    /// `α(L)` as a standalone algebra.
    pub image: HomLeibnizAlgebra,
    /// Quotient of `α(L) ⊗ α(L)` by the three-term relations.
    pub presentation: QuotientSpace,
    pub presented: HomLeibnizAlgebra,
    /// `a ∗ a' ↦ a ⊗ a'`.
    pub iso: AlgebraHom,
}

pub fn universal_alpha_central_extension(l: &HomLeibnizAlgebra) -> Result<UniversalAlphaCentral> {
    if !l.predicates().alpha_perfect {
        return Err(Error::NotAlphaPerfect);
    }
    let field = l.field();
    let img = l.alpha_image();
    let (image, incl) = l.subalgebra(&img)?;
    let tensor = build_tensor(&MutualActions::adjoint(&image))?;
    let (psi_a, _) = psi_maps(&tensor)?;
    let psi = AlgebraHom::new(tensor.algebra().clone(), l.clone(), incl.compose(psi_a.map()))?;
    let extension = Extension::new(psi)?;

    let a = image.dim();
    let coords = |v: &[Scalar]| img.coordinates(v).ok_or(Error::NotAlphaPerfect);
    let d = l.dim();
    let mut builder = SpanBuilder::new(field, a * a);
    for x1 in 0..d {
        for x2 in 0..d {
            for x3 in 0..d {
                let t1 = kron(&coords(l.bracket_basis(x1, x2))?, &coords(&l.alpha_basis(x3))?);
                let t2 = kron(&coords(l.bracket_basis(x1, x3))?, &coords(&l.alpha_basis(x2))?);
                let t3 = kron(&coords(&l.alpha_basis(x1))?, &coords(l.bracket_basis(x2, x3))?);
                let mut v = sub_vec(&t2, &t1);
                axpy(&mut v, &field.one(), &t3);
                builder.insert(v);
            }
        }
    }
    let presentation = QuotientSpace::from_subspace(builder.finish());
    // u ⊗ v ↦ [u, v] in α(L) coordinates.
    let bracket_amb = LinearMap::from_fn(field, a * a, a, |g| image.bracket_basis(g / a, g % a).to_vec());
    let reps: Vec<Vec<Scalar>> = (0..presentation.dim()).map(|i| bracket_amb.apply(&presentation.lift_basis(i))).collect();
    let alpha_amb = LinearMap::from_fn(field, a * a, a * a, |g| kron(&image.alpha_basis(g / a), &image.alpha_basis(g % a)));
    let alpha = alpha_amb
        .induced(&presentation, &presentation)
        .map_err(|e| Error::BracketNotWellDefined(format!("twist on the presentation: {e}")))?;
    let labels: Vec<String> = presentation
        .coset_basis()
        .iter()
        .map(|&g| format!("{}(x){}", image.labels()[g / a], image.labels()[g % a]))
        .collect();
    let presented =
        HomLeibnizAlgebra::from_bracket_fn(field, labels, alpha, |i, j| presentation.project(&kron(&reps[i], &reps[j])))?;
    let r = presented.validate();
    if !r.is_valid() {
        return Err(Error::BracketNotWellDefined(format!("presentation is not a Hom-Leibniz algebra: {}", r.summary())));
    }
    let gen_map = LinearMap::from_fn(field, tensor.ambient_dim(), a * a, |g| {
        let mut v = zero_vec(field, a * a);
        v[g % (a * a)] = field.one();
        v
    });
    let iso = gen_map
        .induced(tensor.presentation(), &presentation)
        .map_err(|e| Error::BracketNotWellDefined(format!("generator map does not descend: {e}")))?;
    let iso = AlgebraHom::new(tensor.algebra().clone(), presented.clone(), iso)?;
    Ok(UniversalAlphaCentral { extension, tensor, image, presentation, presented, iso })
}

impl UniversalAlphaCentral {
    pub fn is_isomorphism(&self) -> bool {
        let m = self.iso.map();
        m.domain_dim() == m.codomain_dim() && m.is_injective()
    }
}

/// Term names of the six-term sequence of an ideal.
pub const SIX_TERMS: [&str; 6] = ["Ker(psi)", "HL2(L)", "HL2(L/M)", "M/[L,M]", "L/[L,L]", "(L/M)/[L/M,L/M]"];

/// Certifies `Ker(L∗M → L) → HL₂^α(L) → HL₂^α(L/M) → M/[L,M] → 0` for an
/// ideal `M` of a perfect `L`, by the snake lemma on
///
/// ```text
///   (M∗L) ⊕ (L∗M) -σ-> L∗L -τ-> (L/M)∗(L/M) --> 0
///         |ψ            |ψ_L       |ψ_{L/M}
///   0 --> M ---------> L -------> L/M -------> 0
/// ```
///
/// with `ψ(x, y) = ψ₁(x) + α_M(ψ₂(y))`. The first map of the sequence is
/// `Ker(ψ₂ : L∗M → M) → Ker ψ_L` along `L∗M → L∗L`; its image is checked to
/// coincide with the image of `Ker ψ` supplied by the snake lemma.
pub fn six_term_check(l: &HomLeibnizAlgebra, m: &Subspace) -> Result<ExactnessReport> {
    if !l.predicates().perfect {
        return Err(Error::NotPerfect);
    }
    l.check_ideal(m)?;
    let field = l.field();
    let s = ideal_sequence(l, m)?;
    let (psi_ml, _) = s.ml.psi_linear()?;
    let (_, psi_lm) = s.lm.psi_linear()?;
    let alpha_m = s.ml.m().alpha();
    let alpha_psi = alpha_m.compose(&psi_lm);
    let mut cols: Vec<Vec<Scalar>> = (0..s.ml.dim()).map(|j| psi_ml.column(j)).collect();
    cols.extend((0..s.lm.dim()).map(|j| alpha_psi.column(j)));
    let v1 = LinearMap::from_columns(field, m.dim(), &cols)?;
    let (v2, _) = s.ll.psi_linear()?;
    let (v3, _) = s.qq.psi_linear()?;

    let mut report = ExactnessReport::new("Ker(L*M -> L) -> HL2(L) -> HL2(L/M) -> M/[L,M] -> 0");
    let input = SnakeInput { f1: &s.sigma, f2: &s.tau, g1: &s.inclusion, g2: &s.projection, v1: &v1, v2: &v2, v3: &v3 };
    let Some(sn) = snake(&input, SIX_TERMS, &mut report) else {
        return Ok(report);
    };

    let lm_kernel = psi_lm.kernel();
    report.term("Ker(L*M -> L)", lm_kernel.dim());
    let first = restrict_between(&s.sigma_l, &lm_kernel, &sn.kernels[1]);
    report.check("L*M -> L*L maps Ker(L*M -> L) into HL2(L)", first.is_some());
    if let Some(first) = first {
        report.check("Ker(L*M -> L) and Ker(psi) have the same image in HL2(L)", first.image() == sn.ker_f1.image());
        record_joint(&mut report, "HL2(L) via Ker(L*M -> L)", &first, &sn.ker_f2);
    }
    let commutator = l.bracket_span(&Subspace::full(field, l.dim()), m);
    report.check("Im(psi) = [L,M]", v1.image().map(&s.inclusion) == commutator);
    report.check("L is perfect", sn.cokernels[1].dim() == 0);
    Ok(report)
}
