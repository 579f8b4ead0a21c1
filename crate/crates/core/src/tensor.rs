//! The non-abelian Hom-Leibniz tensor product `M ∗ N`.
//!
//! `M ∗ N` is realized as a quotient of the ambient space
//! `(M ⊗ N) ⊕ (N ⊗ M)`: generator `m_i ∗ n_j` has ambient index `i * dn + j`,
//! generator `n_j ∗ m_i` has index `dm * dn + j * dm + i`. Bilinearity is built
//! into the ambient space; the remaining relation families are instantiated on
//! basis tuples (each is multilinear) and spanned.
//!
//! The bracket on generators only depends on `ψ₁` of the left argument and
//! `ψ₂` of the right one: `[g, g'] = ψ₁(g) ∗ ψ₂(g')` in the `M ∗ N` block.

use rayon::prelude::*;

use crate::actions::{HomAction, MutualActions};
use crate::algebra::{AlgebraHom, HomLeibnizAlgebra};
use crate::error::{Error, Result};
use crate::exactness::{record_joint, record_surjective};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{
    add_vec, is_zero_vec, kron, sub_vec, unit_vec, zero_vec, LinAlgError, LinearMap, QuotientSpace, SpanBuilder, Subspace,
};
use crate::report::{ExactnessReport, ValidationReport};

/// Ambient coordinates for a pair of algebras with mutual actions.
#[derive(Clone, Copy)]
struct Ambient<'a> {
    ma: &'a MutualActions,
    field: FieldSpec,
    dm: usize,
    dn: usize,
}

impl<'a> Ambient<'a> {
    fn new(ma: &'a MutualActions) -> Self {
        Ambient { ma, field: ma.m().field(), dm: ma.m().dim(), dn: ma.n().dim() }
    }

    fn dim(&self) -> usize {
        2 * self.dm * self.dn
    }

    fn split(&self) -> usize {
        self.dm * self.dn
    }

    fn mn(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        let mut v = kron(m, n);
        v.extend(std::iter::repeat_n(self.field.zero(), self.split()));
        v
    }

    fn nm(&self, n: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let mut v = zero_vec(self.field, self.split());
        v.extend(kron(n, m));
        v
    }

    fn em(&self, i: usize) -> Vec<Scalar> {
        unit_vec(self.field, self.dm, i)
    }

    fn en(&self, j: usize) -> Vec<Scalar> {
        unit_vec(self.field, self.dn, j)
    }

    /// Calls `f(coefficient, m, n, is_mn)` for every nonzero generator coefficient.
    fn for_each_generator(&self, v: &[Scalar], mut f: impl FnMut(&Scalar, usize, usize, bool)) {
        let s = self.split();
        for (idx, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if idx < s {
                f(c, idx / self.dn, idx % self.dn, true);
            } else {
                let r = idx - s;
                f(c, r % self.dm, r / self.dm, false);
            }
        }
    }

    /// Extends a generator-level map linearly, accumulating into a vector of length `out_dim`.
    fn extend_linear(
        &self,
        v: &[Scalar],
        out_dim: usize,
        on_mn: impl Fn(usize, usize) -> Vec<Scalar>,
        on_nm: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Vec<Scalar> {
        let mut out = zero_vec(self.field, out_dim);
        self.for_each_generator(v, |c, i, j, is_mn| {
            let w = if is_mn { on_mn(i, j) } else { on_nm(j, i) };
            crate::linalg::axpy(&mut out, c, &w);
        });
        out
    }

    /// `ψ₁(m ∗ n) = mⁿ`, `ψ₁(n ∗ m) = ⁿm`.
    fn psi1(&self, v: &[Scalar]) -> Vec<Scalar> {
        let ma = self.ma;
        self.extend_linear(
            v,
            self.dm,
            |i, j| ma.on_m().right_basis(i, j).to_vec(),
            |j, i| ma.on_m().left_basis(j, i).to_vec(),
        )
    }

    /// `ψ₂(m ∗ n) = ᵐn`, `ψ₂(n ∗ m) = nᵐ`.
    fn psi2(&self, v: &[Scalar]) -> Vec<Scalar> {
        let ma = self.ma;
        self.extend_linear(
            v,
            self.dn,
            |i, j| ma.on_n().left_basis(i, j).to_vec(),
            |j, i| ma.on_n().right_basis(j, i).to_vec(),
        )
    }

    fn bracket(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.mn(&self.psi1(a), &self.psi2(b))
    }

    fn alpha(&self, v: &[Scalar]) -> Vec<Scalar> {
        let (m, n) = (self.ma.m(), self.ma.n());
        self.extend_linear(
            v,
            self.dim(),
            |i, j| self.mn(&m.alpha_basis(i), &n.alpha_basis(j)),
            |j, i| self.nm(&n.alpha_basis(j), &m.alpha_basis(i)),
        )
    }

    /// Outer action of `M` (`side_m`) or `N` on generators, left (`^x g`) or right (`g^x`).
    fn outer(&self, side_m: bool, left: bool, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let (ma, m, n) = (self.ma, self.ma.m(), self.ma.n());
        self.extend_linear(
            v,
            self.dim(),
            |i, j| {
                let (mi, nj) = (self.em(i), self.en(j));
                let (am, an) = (m.alpha_basis(i), n.alpha_basis(j));
                match (side_m, left) {
                    // ^{m'}(m∗n) = [m',m]∗α(n) − ^{m'}n∗α(m)
                    (true, true) => sub_vec(&self.mn(&m.bracket(x, &mi), &an), &self.nm(&ma.m_left_n(x, &nj), &am)),
                    // (m∗n)^{m'} = [m,m']∗α(n) + α(m)∗n^{m'}
                    (true, false) => add_vec(&self.mn(&m.bracket(&mi, x), &an), &self.mn(&am, &ma.n_right_m(&nj, x))),
                    // ^{n'}(m∗n) = ^{n'}m∗α(n) − [n',n]∗α(m)
                    (false, true) => sub_vec(&self.mn(&ma.n_left_m(x, &mi), &an), &self.nm(&n.bracket(x, &nj), &am)),
                    // (m∗n)^{n'} = m^{n'}∗α(n) + α(m)∗[n,n']
                    (false, false) => add_vec(&self.mn(&ma.m_right_n(&mi, x), &an), &self.mn(&am, &n.bracket(&nj, x))),
                }
            },
            |j, i| {
                let (mi, nj) = (self.em(i), self.en(j));
                let (am, an) = (m.alpha_basis(i), n.alpha_basis(j));
                match (side_m, left) {
                    // ^{m'}(n∗m) = ^{m'}n∗α(m) − [m',m]∗α(n)
                    (true, true) => sub_vec(&self.nm(&ma.m_left_n(x, &nj), &am), &self.mn(&m.bracket(x, &mi), &an)),
                    // (n∗m)^{m'} = n^{m'}∗α(m) + α(n)∗[m,m']
                    (true, false) => add_vec(&self.nm(&ma.n_right_m(&nj, x), &am), &self.nm(&an, &m.bracket(&mi, x))),
                    // ^{n'}(n∗m) = [n',n]∗α(m) − ^{n'}m∗α(n)
                    (false, true) => sub_vec(&self.nm(&n.bracket(x, &nj), &am), &self.mn(&ma.n_left_m(x, &mi), &an)),
                    // (n∗m)^{n'} = [n,n']∗α(m) + α(n)∗m^{n'}
                    (false, false) => add_vec(&self.nm(&n.bracket(&nj, x), &am), &self.nm(&an, &ma.m_right_n(&mi, x))),
                }
            },
        )
    }

    fn generator(&self, idx: usize) -> Vec<Scalar> {
        unit_vec(self.field, self.dim(), idx)
    }

    fn label(&self, idx: usize) -> String {
        let (m, n) = (self.ma.m(), self.ma.n());
        let s = self.split();
        if idx < s {
            format!("{}*{}", m.labels()[idx / self.dn], n.labels()[idx % self.dn])
        } else {
            let r = idx - s;
            format!("{}*{}", n.labels()[r / self.dm], m.labels()[r % self.dm])
        }
    }

    /// Every instance of the relation families on basis tuples, in a fixed order.
    fn relations(&self) -> Vec<Vec<Scalar>> {
        let (ma, m, n) = (self.ma, self.ma.m(), self.ma.n());
        let (dm, dn) = (self.dm, self.dn);
        let em: Vec<Vec<Scalar>> = (0..dm).map(|i| self.em(i)).collect();
        let en: Vec<Vec<Scalar>> = (0..dn).map(|j| self.en(j)).collect();
        let am: Vec<Vec<Scalar>> = (0..dm).map(|i| m.alpha_basis(i)).collect();
        let an: Vec<Vec<Scalar>> = (0..dn).map(|j| n.alpha_basis(j)).collect();

        // Families over (M, N, N) and (N, M, M) triples.
        let mnn: Vec<Vec<Scalar>> = (0..dm)
            .into_par_iter()
            .flat_map_iter(|a| {
                let mut out = Vec::new();
                for b in 0..dn {
                    for c in 0..dn {
                        let (x, y, z) = (&em[a], &en[b], &en[c]);
                        // α(m)∗[n,n'] − mⁿ∗α(n') + m^{n'}∗α(n)
                        let mut r = self.mn(&am[a], n.bracket_basis(b, c));
                        r = sub_vec(&r, &self.mn(&ma.m_right_n(x, y), &an[c]));
                        r = add_vec(&r, &self.mn(&ma.m_right_n(x, z), &an[b]));
                        out.push(r);
                        // [n,n']∗α(m) − ⁿm∗α(n') + α(n)∗m^{n'}
                        let mut r = self.nm(n.bracket_basis(b, c), &am[a]);
                        r = sub_vec(&r, &self.mn(&ma.n_left_m(y, x), &an[c]));
                        r = add_vec(&r, &self.nm(&an[b], &ma.m_right_n(x, z)));
                        out.push(r);
                        // α(n)∗^{n'}m + α(n)∗m^{n'}
                        let r = add_vec(&self.nm(&an[b], &ma.n_left_m(z, x)), &self.nm(&an[b], &ma.m_right_n(x, z)));
                        out.push(r);
                    }
                }
                out
            })
            .collect();
        let nmm: Vec<Vec<Scalar>> = (0..dn)
            .into_par_iter()
            .flat_map_iter(|b| {
                let mut out = Vec::new();
                for a in 0..dm {
                    for c in 0..dm {
                        let (y, x, z) = (&en[b], &em[a], &em[c]);
                        // α(n)∗[m,m'] − nᵐ∗α(m') + n^{m'}∗α(m)
                        let mut r = self.nm(&an[b], m.bracket_basis(a, c));
                        r = sub_vec(&r, &self.nm(&ma.n_right_m(y, x), &am[c]));
                        r = add_vec(&r, &self.nm(&ma.n_right_m(y, z), &am[a]));
                        out.push(r);
                        // [m,m']∗α(n) − ᵐn∗α(m') + α(m)∗n^{m'}
                        let mut r = self.mn(m.bracket_basis(a, c), &an[b]);
                        r = sub_vec(&r, &self.nm(&ma.m_left_n(x, y), &am[c]));
                        r = add_vec(&r, &self.mn(&am[a], &ma.n_right_m(y, z)));
                        out.push(r);
                        // α(m)∗^{m'}n + α(m)∗n^{m'}
                        let r = add_vec(&self.mn(&am[a], &ma.m_left_n(z, y)), &self.mn(&am[a], &ma.n_right_m(y, z)));
                        out.push(r);
                    }
                }
                out
            })
            .collect();

        // Quadruple families: ψ₁(g)∗ψ₂(g') − ψ₂(g)∗ψ₁(g') for generator pairs.
        let psis: Vec<(Vec<Scalar>, Vec<Scalar>)> = (0..self.dim())
            .map(|g| {
                let v = self.generator(g);
                (self.psi1(&v), self.psi2(&v))
            })
            .collect();
        let live: Vec<usize> = (0..self.dim()).filter(|&g| !is_zero_vec(&psis[g].0) || !is_zero_vec(&psis[g].1)).collect();
        let quad: Vec<Vec<Scalar>> = live
            .par_iter()
            .flat_map_iter(|&g| {
                let psis = &psis;
                live.iter().map(move |&h| sub_vec(&self.mn(&psis[g].0, &psis[h].1), &self.nm(&psis[g].1, &psis[h].0)))
            })
            .collect();

        mnn.into_iter().chain(nmm).chain(quad).filter(|v| !is_zero_vec(v)).collect()
    }
}

/// The non-abelian tensor product of two algebras acting compatibly on each other.
#[derive(Debug, Clone)]
pub struct TensorProduct {
    actions: MutualActions,
    presentation: QuotientSpace,
    algebra: HomLeibnizAlgebra,
}

/// Builds `M ∗ N`, refusing incompatible actions and verifying that the bracket
/// and twist descend to the quotient.
pub fn build_tensor(ma: &MutualActions) -> Result<TensorProduct> {
    for a in [ma.on_n(), ma.on_m()] {
        let r = a.validate();
        if !r.is_valid() {
            return Err(Error::InvalidAction(r.summary()));
        }
    }
    let compat = ma.check_compatible();
    if !compat.is_valid() {
        return Err(Error::IncompatibleActions(compat.summary()));
    }
    build_unchecked(ma)
}

fn build_unchecked(ma: &MutualActions) -> Result<TensorProduct> {
    let amb = Ambient::new(ma);
    let mut builder = SpanBuilder::new(amb.field, amb.dim());
    for r in amb.relations() {
        if builder.is_full() {
            break;
        }
        builder.insert(r);
    }
    let relations = builder.finish();
    let presentation = QuotientSpace::from_subspace(relations);
    let rel_basis = presentation.relations().basis();

    // Well-definedness of the bracket and the twist.
    let gens: Vec<Vec<Scalar>> = (0..amb.dim()).map(|g| amb.generator(g)).collect();
    let bad = rel_basis.par_iter().enumerate().find_map_first(|(ri, r)| {
        if !presentation.is_zero_class(&amb.alpha(r)) {
            return Some(format!("twist moves relation #{ri} off the relation subspace"));
        }
        for (g, v) in gens.iter().enumerate() {
            if !presentation.is_zero_class(&amb.bracket(r, v)) {
                return Some(format!("[relation #{ri}, {}] is not a relation", amb.label(g)));
            }
            if !presentation.is_zero_class(&amb.bracket(v, r)) {
                return Some(format!("[{}, relation #{ri}] is not a relation", amb.label(g)));
            }
        }
        None
    });
    if let Some(msg) = bad {
        return Err(Error::BracketNotWellDefined(msg));
    }

    let reps: Vec<Vec<Scalar>> = (0..presentation.dim()).map(|q| presentation.lift_basis(q)).collect();
    let mut labels: Vec<String> = presentation.coset_basis().iter().map(|&g| amb.label(g)).collect();
    disambiguate(&mut labels);
    let d = presentation.dim();
    let alpha = LinearMap::from_fn(amb.field, d, d, |q| presentation.project(&amb.alpha(&reps[q])));
    let algebra = HomLeibnizAlgebra::from_bracket_fn(amb.field, labels, alpha, |a, b| {
        presentation.project(&amb.bracket(&reps[a], &reps[b]))
    })?;
    let report = algebra.validate();
    if !report.is_valid() {
        return Err(Error::BracketNotWellDefined(report.summary()));
    }
    Ok(TensorProduct { actions: ma.clone(), presentation, algebra })
}

fn disambiguate(labels: &mut [String]) {
    for i in 0..labels.len() {
        while labels[..i].contains(&labels[i]) {
            labels[i].push('\'');
        }
    }
}

impl TensorProduct {
    fn ambient(&self) -> Ambient<'_> {
        Ambient::new(&self.actions)
    }

    pub fn actions(&self) -> &MutualActions {
        &self.actions
    }

    pub fn m(&self) -> &HomLeibnizAlgebra {
        self.actions.m()
    }

    pub fn n(&self) -> &HomLeibnizAlgebra {
        self.actions.n()
    }

    pub fn algebra(&self) -> &HomLeibnizAlgebra {
        &self.algebra
    }

    pub fn presentation(&self) -> &QuotientSpace {
        &self.presentation
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.presentation.ambient_dim()
    }

    pub fn relation_dim(&self) -> usize {
        self.presentation.relations().dim()
    }

    /// Ambient vector of `m ∗ n`.
    pub fn ambient_mn(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        self.ambient().mn(m, n)
    }

    /// Ambient vector of `n ∗ m`.
    pub fn ambient_nm(&self, n: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.ambient().nm(n, m)
    }

    /// Quotient coordinates of an ambient vector.
    pub fn class(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.presentation.project(v)
    }

    /// `m ∗ n` in quotient coordinates.
    pub fn mn(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        self.class(&self.ambient_mn(m, n))
    }

    /// `n ∗ m` in quotient coordinates.
    pub fn nm(&self, n: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.class(&self.ambient_nm(n, m))
    }

    pub fn representative(&self, q: &[Scalar]) -> Vec<Scalar> {
        self.presentation.lift(q)
    }

    /// `ψ₁` and `ψ₂` on ambient coordinates.
    pub fn psi1_ambient(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.ambient().psi1(v)
    }

    pub fn psi2_ambient(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.ambient().psi2(v)
    }

    pub fn ambient_bracket(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.ambient().bracket(a, b)
    }

    pub fn ambient_alpha(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.ambient().alpha(v)
    }

    /// `ψ₁`, `ψ₂` as linear maps on quotient coordinates.
    pub fn psi_linear(&self) -> Result<(LinearMap, LinearMap)> {
        let amb = self.ambient();
        let field = amb.field;
        let p1 = LinearMap::from_fn(field, amb.dim(), amb.dm, |g| amb.psi1(&amb.generator(g)));
        let p2 = LinearMap::from_fn(field, amb.dim(), amb.dn, |g| amb.psi2(&amb.generator(g)));
        let tm = QuotientSpace::new(field, amb.dm, &[])?;
        let tn = QuotientSpace::new(field, amb.dn, &[])?;
        let wrap = |e: LinAlgError| Error::BracketNotWellDefined(format!("psi does not descend: {e}"));
        Ok((p1.induced(&self.presentation, &tm).map_err(wrap)?, p2.induced(&self.presentation, &tn).map_err(wrap)?))
    }

    /// Linear map of the outer action by the basis element `x` of `M` or `N`,
    /// on quotient coordinates.
    fn outer_map(&self, side_m: bool, left: bool, x: &[Scalar]) -> Result<LinearMap> {
        let amb = self.ambient();
        let ambient = LinearMap::from_fn(amb.field, amb.dim(), amb.dim(), |g| amb.outer(side_m, left, x, &amb.generator(g)));
        ambient
            .induced(&self.presentation, &self.presentation)
            .map_err(|e| Error::BracketNotWellDefined(format!("outer action does not descend: {e}")))
    }
}

/// `ψ₁ : M ∗ N → M` and `ψ₂ : M ∗ N → N`, verified to be homomorphisms.
pub fn psi_maps(t: &TensorProduct) -> Result<(AlgebraHom, AlgebraHom)> {
    let (p1, p2) = t.psi_linear()?;
    Ok((AlgebraHom::new(t.algebra.clone(), t.m().clone(), p1)?, AlgebraHom::new(t.algebra.clone(), t.n().clone(), p2)?))
}

/// Which factor acts in [`outer_action`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    M,
    N,
}

/// The action of `M` (or `N`) on `M ∗ N`.
pub fn outer_action(t: &TensorProduct, side: Side) -> Result<HomAction> {
    let side_m = side == Side::M;
    let actor = if side_m { t.m() } else { t.n() };
    let d = t.dim();
    let mut lefts = Vec::with_capacity(actor.dim());
    let mut rights = Vec::with_capacity(actor.dim());
    for x in 0..actor.dim() {
        let e = actor.basis_vector(x);
        lefts.push(t.outer_map(side_m, true, &e)?);
        rights.push(t.outer_map(side_m, false, &e)?);
    }
    HomAction::from_fns(
        actor.clone(),
        t.algebra.clone(),
        |x, q| lefts[x].column(q),
        |q, x| rights[x].column(q),
    )
    .inspect(|a| {
        debug_assert_eq!(a.target().dim(), d);
    })
}

/// Checks that `f` and `g` preserve the four action maps.
fn check_equivariant(f: &LinearMap, g: &LinearMap, src: &MutualActions, dst: &MutualActions) -> Result<()> {
    let (m, n) = (src.m(), src.n());
    for i in 0..m.dim() {
        for j in 0..n.dim() {
            let (mi, nj) = (m.basis_vector(i), n.basis_vector(j));
            let (fm, gn) = (f.column(i), g.column(j));
            let checks = [
                ("f(^n m) = ^g(n) f(m)", f.apply(&src.n_left_m(&nj, &mi)), dst.n_left_m(&gn, &fm)),
                ("f(m^n) = f(m)^g(n)", f.apply(&src.m_right_n(&mi, &nj)), dst.m_right_n(&fm, &gn)),
                ("g(^m n) = ^f(m) g(n)", g.apply(&src.m_left_n(&mi, &nj)), dst.m_left_n(&fm, &gn)),
                ("g(n^m) = g(n)^f(m)", g.apply(&src.n_right_m(&nj, &mi)), dst.n_right_m(&gn, &fm)),
            ];
            for (name, lhs, rhs) in checks {
                if lhs != rhs {
                    return Err(Error::NotEquivariant(format!("{name} fails at m = {}, n = {}", m.labels()[i], n.labels()[j])));
                }
            }
        }
    }
    Ok(())
}

/// The generator map `m ∗ n ↦ f(m) ∗ g(n)`, `n ∗ m ↦ g(n) ∗ f(m)` on quotient coordinates.
pub(crate) fn functorial_linear(t: &TensorProduct, t2: &TensorProduct, f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    let amb = t.ambient();
    let ambient = LinearMap::from_fn(amb.field, amb.dim(), t2.ambient_dim(), |idx| {
        let mut out = None;
        amb.for_each_generator(&amb.generator(idx), |_, i, j, is_mn| {
            out = Some(if is_mn {
                t2.ambient_mn(&f.column(i), &g.column(j))
            } else {
                t2.ambient_nm(&g.column(j), &f.column(i))
            });
        });
        out.unwrap()
    });
    ambient
        .induced(&t.presentation, &t2.presentation)
        .map_err(|e| Error::BracketNotWellDefined(format!("induced tensor map does not descend: {e}")))
}

/// `f ∗ g : M ∗ N → M' ∗ N'` for action-preserving homomorphisms `f : M → M'`, `g : N → N'`.
pub fn induced_tensor_map(f: &AlgebraHom, g: &AlgebraHom, t: &TensorProduct, t2: &TensorProduct) -> Result<AlgebraHom> {
    if f.source() != t.m() || f.target() != t2.m() || g.source() != t.n() || g.target() != t2.n() {
        return Err(Error::Structure("homomorphisms do not match the tensor factors".into()));
    }
    check_equivariant(f.map(), g.map(), &t.actions, &t2.actions)?;
    let lin = functorial_linear(t, t2, f.map(), g.map())?;
    AlgebraHom::new(t.algebra.clone(), t2.algebra.clone(), lin)
}

/// Names of the checks in [`psi_properties`].
pub const PSI_PROPERTIES: [&str; 21] = [
    "a: psi1 is a homomorphism",
    "a: psi2 is a homomorphism",
    "b: outer actions are valid",
    "d: Ker psi1 is central",
    "d: Ker psi2 is central",
    "e: Im psi1 acts trivially on Ker psi1",
    "e: Im psi2 acts trivially on Ker psi2",
    "f.i", "f.ii", "f.iii", "f.iv", "f.v", "f.vi", "f.vii", "f.viii",
    "f.ix-xii", "f.xiii-xvi",
    "f.ix-xii via psi2", "f.xiii-xvi via psi2",
    "perfect factors give a perfect product",
    "twist preserves the bracket",
];

/// The properties of `ψ₁`, `ψ₂` and the outer actions, each checked exactly over
/// all basis tuples.
pub fn psi_properties(t: &TensorProduct) -> Result<ValidationReport> {
    let mut report = ValidationReport::new("psi maps and outer actions");
    report.declare(&PSI_PROPERTIES);
    let amb = t.ambient();
    let field = amb.field;
    let (m, n) = (t.m(), t.n());
    let alg = &t.algebra;
    let (p1, p2) = t.psi_linear()?;
    let hom1 = AlgebraHom::check(alg, m, &p1);
    let hom2 = AlgebraHom::check(alg, n, &p2);
    report.check(PSI_PROPERTIES[0], || vec![format!("{:?}", hom1.clone().err())], flag(field, hom1.is_ok()));
    report.check(PSI_PROPERTIES[1], || vec![format!("{:?}", hom2.clone().err())], flag(field, hom2.is_ok()));

    let om = outer_action(t, Side::M)?;
    let on = outer_action(t, Side::N)?;
    let (rm, rn) = (om.validate(), on.validate());
    report.check(PSI_PROPERTIES[2], || vec![rm.summary(), rn.summary()], flag(field, rm.is_valid() && rn.is_valid()));

    // d) kernels are central.
    for (name, psi) in [(PSI_PROPERTIES[3], &p1), (PSI_PROPERTIES[4], &p2)] {
        for k in psi.kernel().basis() {
            for q in 0..alg.dim() {
                let e = alg.basis_vector(q);
                let defect = [alg.bracket(&k, &e), alg.bracket(&e, &k)].concat();
                report.check(name, || vec![alg.format(&k), alg.labels()[q].clone()], defect);
            }
        }
    }
    // e) the image acts trivially on the kernel.
    for (name, psi, act) in [(PSI_PROPERTIES[5], &p1, &om), (PSI_PROPERTIES[6], &p2, &on)] {
        let actor = act.actor();
        for x in psi.image().basis() {
            for k in psi.kernel().basis() {
                let defect = [act.left(&x, &k), act.right(&k, &x)].concat();
                report.check(name, || vec![actor.format(&x), alg.format(&k)], defect);
            }
        }
    }

    // f) i)–viii) on generators.
    let gens: Vec<(String, Vec<Scalar>, bool)> = (0..amb.dim()).map(|g| (amb.label(g), amb.generator(g), g < amb.split())).collect();
    for (gl, g, is_mn) in &gens {
        for x in 0..m.dim() {
            let ex = m.basis_vector(x);
            let ax = m.alpha_basis(x);
            let lhs = amb.psi1(&amb.outer(true, true, &ex, g));
            let rhs = m.bracket(&ax, &amb.psi1(g));
            let name = if *is_mn { "f.i" } else { "f.iii" };
            report.check(name, || vec![m.labels()[x].clone(), gl.clone()], sub_vec(&lhs, &rhs));
            let lhs = amb.psi1(&amb.outer(true, false, &ex, g));
            let rhs = m.bracket(&amb.psi1(g), &ax);
            let name = if *is_mn { "f.ii" } else { "f.iv" };
            report.check(name, || vec![gl.clone(), m.labels()[x].clone()], sub_vec(&lhs, &rhs));
        }
        for y in 0..n.dim() {
            let ey = n.basis_vector(y);
            let ay = n.alpha_basis(y);
            let lhs = amb.psi2(&amb.outer(false, true, &ey, g));
            let rhs = n.bracket(&ay, &amb.psi2(g));
            let name = if *is_mn { "f.v" } else { "f.vii" };
            report.check(name, || vec![n.labels()[y].clone(), gl.clone()], sub_vec(&lhs, &rhs));
            let lhs = amb.psi2(&amb.outer(false, false, &ey, g));
            let rhs = n.bracket(&amb.psi2(g), &ay);
            let name = if *is_mn { "f.vi" } else { "f.viii" };
            report.check(name, || vec![gl.clone(), n.labels()[y].clone()], sub_vec(&lhs, &rhs));
        }
    }
    // f) ix)–xvi): both outer actions by ψ(g) agree with the bracket by α(g).
    for (gl, g, _) in &gens {
        let (x1, x2) = (amb.psi1(g), amb.psi2(g));
        let ag = amb.alpha(g);
        for (hl, h, _) in &gens {
            let left = t.class(&amb.bracket(&ag, h));
            let wit = || vec![gl.clone(), hl.clone()];
            report.check("f.ix-xii", wit, sub_vec(&t.class(&amb.outer(true, true, &x1, h)), &left));
            report.check("f.ix-xii via psi2", wit, sub_vec(&t.class(&amb.outer(false, true, &x2, h)), &left));
            let right = t.class(&amb.bracket(h, &ag));
            report.check("f.xiii-xvi", wit, sub_vec(&t.class(&amb.outer(true, false, &x1, h)), &right));
            report.check("f.xiii-xvi via psi2", wit, sub_vec(&t.class(&amb.outer(false, false, &x2, h)), &right));
        }
    }

    let perfect_ok = !(m == n && m.predicates().perfect) || alg.predicates().perfect;
    report.check(PSI_PROPERTIES[19], std::vec::Vec::new, flag(field, perfect_ok));
    let mult_ok = alg.validate().holds(crate::algebra::MULTIPLICATIVITY);
    report.check(PSI_PROPERTIES[20], std::vec::Vec::new, flag(field, mult_ok));
    Ok(report)
}

fn flag(field: FieldSpec, ok: bool) -> Vec<Scalar> {
    vec![if ok { field.zero() } else { field.one() }]
}

/// Right-exactness `M₁ ∗ N → M₂ ∗ N → M₃ ∗ N → 0` for a short exact sequence
/// `0 → M₁ -f→ M₂ -g→ M₃ → 0` of action-preserving homomorphisms.
pub fn right_exactness(
    f: &AlgebraHom,
    g: &AlgebraHom,
    t1: &TensorProduct,
    t2: &TensorProduct,
    t3: &TensorProduct,
) -> Result<ExactnessReport> {
    if !f.map().is_injective() {
        return Err(Error::HypothesisNotMet("f is not injective".into()));
    }
    if !g.map().is_surjective() {
        return Err(Error::HypothesisNotMet("g is not surjective".into()));
    }
    if f.image() != g.kernel() {
        return Err(Error::HypothesisNotMet("Im f differs from Ker g".into()));
    }
    if t1.n() != t2.n() || t2.n() != t3.n() {
        return Err(Error::HypothesisNotMet("the partner algebra differs between the tensor products".into()));
    }
    let n = t1.n();
    let id = AlgebraHom::identity(n);
    let fs = induced_tensor_map(f, &id, t1, t2)?;
    let gs = induced_tensor_map(g, &id, t2, t3)?;
    let mut report = ExactnessReport::new("M1*N -> M2*N -> M3*N -> 0");
    report.term("M1*N", t1.dim());
    report.term("M2*N", t2.dim());
    report.term("M3*N", t3.dim());
    record_joint(&mut report, "M2*N", fs.map(), gs.map());
    record_surjective(&mut report, "M3*N", gs.map());
    Ok(report)
}

/// The pieces of the ideal sequence `(M∗L) ⋊ (L∗M) -σ→ L∗L -τ→ (L/M)∗(L/M) → 0`.
#[derive(Debug, Clone)]
pub struct IdealSequence {
    pub ml: TensorProduct,
    pub lm: TensorProduct,
    pub ll: TensorProduct,
    pub qq: TensorProduct,
    pub quotient: HomLeibnizAlgebra,
    /// `π : L → L/M`.
    pub projection: LinearMap,
    /// Inclusion `M → L` in the RREF basis of `M`.
    pub inclusion: LinearMap,
    pub sigma_m: LinearMap,
    pub sigma_l: LinearMap,
    /// `σ(x, y) = σ'(x) + α(σ''(y))` on `(M∗L) ⊕ (L∗M)`.
    pub sigma: LinearMap,
    pub tau: LinearMap,
}

/// Builds all tensor products and maps for an ideal `M` of `L`.
pub fn ideal_sequence(l: &HomLeibnizAlgebra, m: &Subspace) -> Result<IdealSequence> {
    l.check_ideal(m)?;
    let field = l.field();
    let full = Subspace::full(field, l.dim());
    let ml = build_tensor(&MutualActions::ideals(l, m, &full)?)?;
    let lm = build_tensor(&MutualActions::ideals(l, &full, m)?)?;
    let ll = build_tensor(&MutualActions::adjoint(l))?;
    let (quotient, proj) = l.quotient_by(m)?;
    let qq = build_tensor(&MutualActions::adjoint(&quotient))?;
    let inclusion = LinearMap::from_columns(field, l.dim(), &m.basis())?;
    let id = LinearMap::identity(field, l.dim());
    let sigma_m = functorial_linear(&ml, &ll, &inclusion, &id)?;
    let sigma_l = functorial_linear(&lm, &ll, &id, &inclusion)?;
    let alpha_sigma_l = ll.algebra.alpha().compose(&sigma_l);
    let mut cols: Vec<Vec<Scalar>> = (0..ml.dim()).map(|j| sigma_m.column(j)).collect();
    cols.extend((0..lm.dim()).map(|j| alpha_sigma_l.column(j)));
    let sigma = LinearMap::from_columns(field, ll.dim(), &cols)?;
    let tau = functorial_linear(&ll, &qq, proj.map(), proj.map())?;
    Ok(IdealSequence { ml, lm, ll, qq, quotient, projection: proj.map().clone(), inclusion, sigma_m, sigma_l, sigma, tau })
}

/// Exactness of the ideal sequence at `L∗L` and surjectivity of `τ`.
pub fn ideal_sequence_report(l: &HomLeibnizAlgebra, m: &Subspace) -> Result<ExactnessReport> {
    let s = ideal_sequence(l, m)?;
    let mut report = ExactnessReport::new("(M*L) x (L*M) -> L*L -> (L/M)*(L/M) -> 0");
    report.term("M*L", s.ml.dim());
    report.term("L*M", s.lm.dim());
    report.term("L*L", s.ll.dim());
    report.term("(L/M)*(L/M)", s.qq.dim());
    record_joint(&mut report, "L*L", &s.sigma, &s.tau);
    record_surjective(&mut report, "(L/M)*(L/M)", &s.tau);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn span(alg: &HomLeibnizAlgebra, idx: &[usize]) -> Subspace {
        Subspace::span(alg.field(), alg.dim(), idx.iter().map(|&i| alg.basis_vector(i))).unwrap()
    }

    #[test]
    fn trivial_lines() {
        let a = catalog::abelian(q(), 1);
        let t = build_tensor(&MutualActions::trivial(&a, &a).unwrap()).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(t.algebra().is_abelian());
        let (p1, p2) = psi_maps(&t).unwrap();
        assert!(p1.map().is_zero() && p2.map().is_zero());
    }

    #[test]
    fn trivial_actions_give_abelianized_tensor() {
        let e1 = catalog::e1(q());
        let h = catalog::heisenberg(q());
        let t = build_tensor(&MutualActions::trivial(&e1, &h).unwrap()).unwrap();
        // E1^ab is 1-dim, Heisenberg^ab is 2-dim.
        assert_eq!(t.dim(), 2 * 2);
        assert!(t.algebra().is_abelian());
    }

    #[test]
    fn e1_square() {
        let e1 = catalog::e1(q());
        let t = build_tensor(&MutualActions::adjoint(&e1)).unwrap();
        assert!(t.algebra().validate().is_valid());
        let (p1, p2) = psi_maps(&t).unwrap();
        assert_eq!(p1.map(), p2.map());
        assert_eq!(p1.image(), span(&e1, &[0]));
        let r = psi_properties(&t).unwrap();
        assert!(r.is_valid(), "{}", r.summary());
    }

    #[test]
    fn sl2_square_has_dimension_three() {
        let sl2 = catalog::sl2(q());
        let t = build_tensor(&MutualActions::adjoint(&sl2)).unwrap();
        assert_eq!(t.dim(), 3);
        assert!(t.algebra().predicates().perfect);
        let r = psi_properties(&t).unwrap();
        assert!(r.is_valid(), "{}", r.summary());
        let om = outer_action(&t, Side::M).unwrap();
        assert!(om.validate().is_valid());
    }

    #[test]
    fn incompatible_actions_are_refused() {
        let sl2 = catalog::sl2(q());
        let ma = MutualActions::new(HomAction::adjoint(&sl2), HomAction::trivial(&sl2, &sl2).unwrap()).unwrap();
        assert!(matches!(build_tensor(&ma), Err(Error::IncompatibleActions(_))));
    }

    #[test]
    fn identity_maps_induce_identity() {
        let e1 = catalog::e1(q());
        let t = build_tensor(&MutualActions::adjoint(&e1)).unwrap();
        let id = AlgebraHom::identity(&e1);
        let f = induced_tensor_map(&id, &id, &t, &t).unwrap();
        assert_eq!(f.map(), &LinearMap::identity(q(), t.dim()));
    }

    #[test]
    fn non_equivariant_maps_are_refused() {
        let e1 = catalog::e1(q());
        let t = build_tensor(&MutualActions::adjoint(&e1)).unwrap();
        let triv = build_tensor(&MutualActions::trivial(&e1, &e1).unwrap()).unwrap();
        let id = AlgebraHom::identity(&e1);
        assert!(matches!(induced_tensor_map(&id, &id, &t, &triv), Err(Error::NotEquivariant(_))));
    }

    #[test]
    fn ideal_sequence_for_e1_and_sl2() {
        let e1 = catalog::e1(q());
        let r = ideal_sequence_report(&e1, &span(&e1, &[0])).unwrap();
        assert!(r.holds(), "{:?}", r.failures());
        let sl2 = catalog::sl2(q());
        let r = ideal_sequence_report(&sl2, &Subspace::full(q(), 3)).unwrap();
        assert!(r.holds());
        assert_eq!(r.term_dim("(L/M)*(L/M)"), Some(0));
    }
}
