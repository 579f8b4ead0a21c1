//! Hom-Leibniz actions, compatibility of mutual actions, and semidirect products.
//!
//! An action of `L` on `M` is a pair of bilinear maps `L ⊗ M → M`, `x ⊗ m ↦ ˣm`,
//! and `M ⊗ L → M`, `m ⊗ x ↦ mˣ`, subject to eight identities. All identities
//! are multilinear, so checking them on basis tuples is enough.

use crate::algebra::HomLeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{add_vec, bilinear, sub_vec, unit_vec, zero_vec, LinearMap, Subspace};
use crate::report::ValidationReport;

/// Names of the action identities, in checking order.
pub const ACTION_AXIOMS: [&str; 8] = [
    "a: alpha(m)^[x,y] = (m^x)^alpha(y) - (m^y)^alpha(x)",
    "b: ^[x,y]alpha(m) = (^x m)^alpha(y) - ^alpha(x)(m^y)",
    "c: ^alpha(x)(^y m) = -^alpha(x)(m^y)",
    "d: ^alpha(x)[m,m'] = [^x m, alpha(m')] - [^x m', alpha(m)]",
    "e: [m,m']^alpha(x) = [m^x, alpha(m')] + [alpha(m), m'^x]",
    "f: [alpha(m), ^x m'] = -[alpha(m), m'^x]",
    "g: alpha(^x m) = ^alpha(x) alpha(m)",
    "h: alpha(m^x) = alpha(m)^alpha(x)",
];

/// Names of the eight compatibility identities between mutual actions.
pub const COMPATIBILITY_AXIOMS: [&str; 8] = [
    "c1: ^(^m n)m' = [m^n, m']",
    "c2: ^(^n m)n' = [n^m, n']",
    "c3: ^(n^m)m' = [^n m, m']",
    "c4: ^(m^n)n' = [^m n, n']",
    "c5: m^(^m' n) = [m, m'^n]",
    "c6: n^(^n' m) = [n, n'^m]",
    "c7: m^(n^m') = [m, ^n m']",
    "c8: n^(m^n') = [n, ^m n']",
];

/// An action of `actor` (L) on `target` (M).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAction {
    actor: HomLeibnizAlgebra,
    target: HomLeibnizAlgebra,
    /// `left[(x * dm + m) * dm + k]`: coefficient of `e_k` in `ˣm`.
    left: Vec<Scalar>,
    /// `right[(m * dl + x) * dm + k]`: coefficient of `e_k` in `mˣ`.
    right: Vec<Scalar>,
}

impl HomAction {
    /// Raw constructor: checks shapes only.
    pub fn from_parts(
        actor: HomLeibnizAlgebra,
        target: HomLeibnizAlgebra,
        left: Vec<Scalar>,
        right: Vec<Scalar>,
    ) -> Result<Self> {
        let (dl, dm) = (actor.dim(), target.dim());
        if actor.field() != target.field() {
            return Err(Error::Structure("actor and target over different fields".into()));
        }
        if left.len() != dl * dm * dm || right.len() != dl * dm * dm {
            return Err(Error::Structure(format!(
                "action tensors have {} and {} entries, expected {}",
                left.len(),
                right.len(),
                dl * dm * dm
            )));
        }
        Ok(HomAction { actor, target, left, right })
    }

    /// Builds the tensors from functions on basis indices: `left(x, m)` and `right(m, x)`.
    pub fn from_fns(
        actor: HomLeibnizAlgebra,
        target: HomLeibnizAlgebra,
        left: impl Fn(usize, usize) -> Vec<Scalar>,
        right: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let (dl, dm) = (actor.dim(), target.dim());
        let mut l = Vec::with_capacity(dl * dm * dm);
        for x in 0..dl {
            for m in 0..dm {
                l.extend(left(x, m));
            }
        }
        let mut r = Vec::with_capacity(dl * dm * dm);
        for m in 0..dm {
            for x in 0..dl {
                r.extend(right(m, x));
            }
        }
        Self::from_parts(actor, target, l, r)
    }

    pub fn trivial(actor: &HomLeibnizAlgebra, target: &HomLeibnizAlgebra) -> Result<Self> {
        let n = actor.dim() * target.dim() * target.dim();
        let f = actor.field();
        Self::from_parts(actor.clone(), target.clone(), vec![f.zero(); n], vec![f.zero(); n])
    }

    /// `L` acting on itself by the bracket.
    pub fn adjoint(algebra: &HomLeibnizAlgebra) -> Self {
        Self::from_fns(
            algebra.clone(),
            algebra.clone(),
            |x, m| algebra.bracket_basis(x, m).to_vec(),
            |m, x| algebra.bracket_basis(m, x).to_vec(),
        )
        .unwrap()
    }

    /// The subalgebra on `actor_space` acting by brackets on the subalgebra on
    /// `target_space`, which must absorb brackets with the actor.
    pub fn restricted_adjoint(algebra: &HomLeibnizAlgebra, actor_space: &Subspace, target_space: &Subspace) -> Result<Self> {
        let (actor, _) = algebra.subalgebra(actor_space)?;
        let (target, _) = algebra.subalgebra(target_space)?;
        let xs = actor_space.basis();
        let ms = target_space.basis();
        let coords = |v: Vec<Scalar>| -> Result<Vec<Scalar>> {
            target_space.coordinates(&v).ok_or_else(|| {
                Error::NotAnIdeal(format!("{} escapes the acted-on subspace", algebra.format(&v)))
            })
        };
        let dm = target.dim();
        let dl = actor.dim();
        let mut left = Vec::with_capacity(dl * dm * dm);
        for x in &xs {
            for m in &ms {
                left.extend(coords(algebra.bracket(x, m))?);
            }
        }
        let mut right = Vec::with_capacity(dl * dm * dm);
        for m in &ms {
            for x in &xs {
                right.extend(coords(algebra.bracket(m, x))?);
            }
        }
        Self::from_parts(actor, target, left, right)
    }

    pub fn actor(&self) -> &HomLeibnizAlgebra {
        &self.actor
    }

    pub fn target(&self) -> &HomLeibnizAlgebra {
        &self.target
    }

    pub fn field(&self) -> FieldSpec {
        self.actor.field()
    }

    pub fn left_tensor(&self) -> &[Scalar] {
        &self.left
    }

    pub fn right_tensor(&self) -> &[Scalar] {
        &self.right
    }

    /// `ˣm`.
    pub fn left(&self, x: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let dm = self.target.dim();
        bilinear(self.field(), &self.left, dm, dm, x, m)
    }

    /// `mˣ`.
    pub fn right(&self, m: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let dm = self.target.dim();
        bilinear(self.field(), &self.right, self.actor.dim(), dm, m, x)
    }

    pub fn left_basis(&self, x: usize, m: usize) -> &[Scalar] {
        let dm = self.target.dim();
        let s = (x * dm + m) * dm;
        &self.left[s..s + dm]
    }

    pub fn right_basis(&self, m: usize, x: usize) -> &[Scalar] {
        let dm = self.target.dim();
        let s = (m * self.actor.dim() + x) * dm;
        &self.right[s..s + dm]
    }

    pub fn is_trivial(&self) -> bool {
        self.left.iter().chain(&self.right).all(Scalar::is_zero)
    }

    /// Checks the eight action identities over all basis tuples.
    pub fn validate(&self) -> ValidationReport {
        let (l, m) = (&self.actor, &self.target);
        let (dl, dm) = (l.dim(), m.dim());
        let mut report = ValidationReport::new("hom-leibniz action");
        report.declare(&ACTION_AXIOMS);
        let ax: Vec<Vec<Scalar>> = (0..dl).map(|i| l.alpha_basis(i)).collect();
        let am: Vec<Vec<Scalar>> = (0..dm).map(|i| m.alpha_basis(i)).collect();
        let w = |lx: &[usize], mm: &[usize]| -> Vec<String> {
            lx.iter().map(|&i| l.labels()[i].clone()).chain(mm.iter().map(|&i| m.labels()[i].clone())).collect()
        };

        // Identities in (m, x, y).
        for mi in 0..dm {
            for x in 0..dl {
                for y in 0..dl {
                    let xy = l.bracket_basis(x, y);
                    let lhs = self.right(&am[mi], xy);
                    let r1 = self.right(self.right_basis(mi, x), &ax[y]);
                    let r2 = self.right(self.right_basis(mi, y), &ax[x]);
                    report.check(ACTION_AXIOMS[0], || w(&[x, y], &[mi]), sub_vec(&lhs, &sub_vec(&r1, &r2)));

                    let lhs = self.left(xy, &am[mi]);
                    let r1 = self.right(self.left_basis(x, mi), &ax[y]);
                    let r2 = self.left(&ax[x], self.right_basis(mi, y));
                    report.check(ACTION_AXIOMS[1], || w(&[x, y], &[mi]), sub_vec(&lhs, &sub_vec(&r1, &r2)));

                    let lhs = self.left(&ax[x], self.left_basis(y, mi));
                    let rhs = self.left(&ax[x], self.right_basis(mi, y));
                    report.check(ACTION_AXIOMS[2], || w(&[x, y], &[mi]), add_vec(&lhs, &rhs));
                }
            }
        }
        // Identities in (x, m, m').
        for x in 0..dl {
            for mi in 0..dm {
                for mj in 0..dm {
                    let lhs = self.left(&ax[x], m.bracket_basis(mi, mj));
                    let r1 = m.bracket(self.left_basis(x, mi), &am[mj]);
                    let r2 = m.bracket(self.left_basis(x, mj), &am[mi]);
                    report.check(ACTION_AXIOMS[3], || w(&[x], &[mi, mj]), sub_vec(&lhs, &sub_vec(&r1, &r2)));

                    let lhs = self.right(m.bracket_basis(mi, mj), &ax[x]);
                    let r1 = m.bracket(self.right_basis(mi, x), &am[mj]);
                    let r2 = m.bracket(&am[mi], self.right_basis(mj, x));
                    report.check(ACTION_AXIOMS[4], || w(&[x], &[mi, mj]), sub_vec(&lhs, &add_vec(&r1, &r2)));

                    let lhs = m.bracket(&am[mi], self.left_basis(x, mj));
                    let rhs = m.bracket(&am[mi], self.right_basis(mj, x));
                    report.check(ACTION_AXIOMS[5], || w(&[x], &[mi, mj]), add_vec(&lhs, &rhs));
                }
            }
        }
        // Equivariance in (x, m).
        for x in 0..dl {
            for mi in 0..dm {
                let lhs = m.apply_alpha(self.left_basis(x, mi));
                let rhs = self.left(&ax[x], &am[mi]);
                report.check(ACTION_AXIOMS[6], || w(&[x], &[mi]), sub_vec(&lhs, &rhs));
                let lhs = m.apply_alpha(self.right_basis(mi, x));
                let rhs = self.right(&am[mi], &ax[x]);
                report.check(ACTION_AXIOMS[7], || w(&[x], &[mi]), sub_vec(&lhs, &rhs));
            }
        }
        report.set_flag("trivial", self.is_trivial());
        report
    }

    pub fn checked(self) -> Result<Self> {
        let r = self.validate();
        if r.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidAction(r.summary()))
        }
    }
}

/// Actions of `M` and `N` on each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutualActions {
    /// `M` acting on `N`.
    on_n: HomAction,
    /// `N` acting on `M`.
    on_m: HomAction,
}

impl MutualActions {
    pub fn new(on_n: HomAction, on_m: HomAction) -> Result<Self> {
        if on_n.actor != on_m.target || on_n.target != on_m.actor {
            return Err(Error::Structure("mutual actions do not pair up the same two algebras".into()));
        }
        Ok(MutualActions { on_n, on_m })
    }

    pub fn trivial(m: &HomLeibnizAlgebra, n: &HomLeibnizAlgebra) -> Result<Self> {
        Self::new(HomAction::trivial(m, n)?, HomAction::trivial(n, m)?)
    }

    /// `L` and `L` acting on each other by brackets.
    pub fn adjoint(l: &HomLeibnizAlgebra) -> Self {
        let a = HomAction::adjoint(l);
        MutualActions { on_n: a.clone(), on_m: a }
    }

    /// Two ideals of `l` acting on each other by brackets.
    pub fn ideals(l: &HomLeibnizAlgebra, m: &Subspace, n: &Subspace) -> Result<Self> {
        l.check_ideal(m)?;
        l.check_ideal(n)?;
        Self::new(HomAction::restricted_adjoint(l, m, n)?, HomAction::restricted_adjoint(l, n, m)?)
    }

    pub fn m(&self) -> &HomLeibnizAlgebra {
        &self.on_m.target
    }

    pub fn n(&self) -> &HomLeibnizAlgebra {
        &self.on_n.target
    }

    pub fn on_n(&self) -> &HomAction {
        &self.on_n
    }

    pub fn on_m(&self) -> &HomAction {
        &self.on_m
    }

    /// `ᵐn`.
    pub fn m_left_n(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        self.on_n.left(m, n)
    }

    /// `nᵐ`.
    pub fn n_right_m(&self, n: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.on_n.right(n, m)
    }

    /// `ⁿm`.
    pub fn n_left_m(&self, n: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.on_m.left(n, m)
    }

    /// `mⁿ`.
    pub fn m_right_n(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        self.on_m.right(m, n)
    }

    /// Checks the eight compatibility identities over basis triples.
    pub fn check_compatible(&self) -> ValidationReport {
        let (m, n) = (self.m(), self.n());
        let (dm, dn) = (m.dim(), n.dim());
        let f = m.field();
        let mut report = ValidationReport::new("compatible mutual actions");
        report.declare(&COMPATIBILITY_AXIOMS);
        let em: Vec<Vec<Scalar>> = (0..dm).map(|i| unit_vec(f, dm, i)).collect();
        let en: Vec<Vec<Scalar>> = (0..dn).map(|i| unit_vec(f, dn, i)).collect();
        let lm = |i: usize| m.labels()[i].clone();
        let ln = |i: usize| n.labels()[i].clone();

        // Triples (m, n, m').
        for a in 0..dm {
            for b in 0..dn {
                for c in 0..dm {
                    let (x, y, z) = (&em[a], &en[b], &em[c]);
                    let wit = || vec![lm(a), ln(b), lm(c)];
                    // c1: ^(^m n)m' = [m^n, m']
                    let lhs = self.n_left_m(&self.m_left_n(x, y), z);
                    let rhs = m.bracket(&self.m_right_n(x, y), z);
                    report.check(COMPATIBILITY_AXIOMS[0], wit, sub_vec(&lhs, &rhs));
                    // c3: ^(n^m)m' = [^n m, m']
                    let lhs = self.n_left_m(&self.n_right_m(y, x), z);
                    let rhs = m.bracket(&self.n_left_m(y, x), z);
                    report.check(COMPATIBILITY_AXIOMS[2], wit, sub_vec(&lhs, &rhs));
                    // c5: m^(^m' n) = [m, m'^n]
                    let lhs = self.m_right_n(x, &self.m_left_n(z, y));
                    let rhs = m.bracket(x, &self.m_right_n(z, y));
                    report.check(COMPATIBILITY_AXIOMS[4], wit, sub_vec(&lhs, &rhs));
                    // c7: m^(n^m') = [m, ^n m']
                    let lhs = self.m_right_n(x, &self.n_right_m(y, z));
                    let rhs = m.bracket(x, &self.n_left_m(y, z));
                    report.check(COMPATIBILITY_AXIOMS[6], wit, sub_vec(&lhs, &rhs));
                }
            }
        }
        // Triples (n, m, n').
        for b in 0..dn {
            for a in 0..dm {
                for c in 0..dn {
                    let (y, x, z) = (&en[b], &em[a], &en[c]);
                    let wit = || vec![ln(b), lm(a), ln(c)];
                    // c2: ^(^n m)n' = [n^m, n']
                    let lhs = self.m_left_n(&self.n_left_m(y, x), z);
                    let rhs = n.bracket(&self.n_right_m(y, x), z);
                    report.check(COMPATIBILITY_AXIOMS[1], wit, sub_vec(&lhs, &rhs));
                    // c4: ^(m^n)n' = [^m n, n']
                    let lhs = self.m_left_n(&self.m_right_n(x, y), z);
                    let rhs = n.bracket(&self.m_left_n(x, y), z);
                    report.check(COMPATIBILITY_AXIOMS[3], wit, sub_vec(&lhs, &rhs));
                    // c6: n^(^n' m) = [n, n'^m]
                    let lhs = self.n_right_m(y, &self.n_left_m(z, x));
                    let rhs = n.bracket(y, &self.n_right_m(z, x));
                    report.check(COMPATIBILITY_AXIOMS[5], wit, sub_vec(&lhs, &rhs));
                    // c8: n^(m^n') = [n, ^m n']
                    let lhs = self.n_right_m(y, &self.m_right_n(x, z));
                    let rhs = n.bracket(y, &self.m_left_n(x, z));
                    report.check(COMPATIBILITY_AXIOMS[7], wit, sub_vec(&lhs, &rhs));
                }
            }
        }
        report
    }
}

/// A semidirect product `M ⋊ L` with its split short exact sequence
/// `0 → M → M ⋊ L ⇄ L → 0`. The basis lists `M` first, then `L`.
#[derive(Debug, Clone)]
pub struct Semidirect {
    pub algebra: HomLeibnizAlgebra,
    pub injection: LinearMap,
    pub projection: LinearMap,
    pub section: LinearMap,
}

/// `[(m₁,l₁),(m₂,l₂)] = ([m₁,m₂] + ^{α(l₁)}m₂ + m₁^{α(l₂)}, [l₁,l₂])`.
pub fn semidirect(action: &HomAction) -> Result<Semidirect> {
    let report = action.validate();
    if !report.is_valid() {
        return Err(Error::InvalidAction(report.summary()));
    }
    let (m, l) = (action.target(), action.actor());
    let (dm, dl) = (m.dim(), l.dim());
    let f = m.field();
    let d = dm + l.dim();
    let mut labels: Vec<String> = m.labels().to_vec();
    for x in l.labels() {
        let mut x = x.clone();
        while labels.contains(&x) {
            x.push('\'');
        }
        labels.push(x);
    }
    let alpha = LinearMap::from_fn(f, d, d, |i| {
        let mut v = zero_vec(f, d);
        if i < dm {
            v[..dm].clone_from_slice(&m.alpha_basis(i));
        } else {
            v[dm..].clone_from_slice(&l.alpha_basis(i - dm));
        }
        v
    });
    let total = HomLeibnizAlgebra::from_bracket_fn(f, labels, alpha, |i, j| {
        let mut v = zero_vec(f, d);
        match (i < dm, j < dm) {
            (true, true) => v[..dm].clone_from_slice(m.bracket_basis(i, j)),
            (false, true) => v[..dm].clone_from_slice(&action.left(&l.alpha_basis(i - dm), &unit_vec(f, dm, j))),
            (true, false) => v[..dm].clone_from_slice(&action.right(&unit_vec(f, dm, i), &l.alpha_basis(j - dm))),
            (false, false) => v[dm..].clone_from_slice(l.bracket_basis(i - dm, j - dm)),
        }
        v
    })?;
    let injection = LinearMap::from_fn(f, dm, d, |i| unit_vec(f, d, i));
    let projection = LinearMap::from_fn(f, d, dl, |i| if i < dm { zero_vec(f, dl) } else { unit_vec(f, dl, i - dm) });
    let section = LinearMap::from_fn(f, dl, d, |i| unit_vec(f, d, dm + i));
    Ok(Semidirect { algebra: total, injection, projection, section })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn span(alg: &HomLeibnizAlgebra, idx: &[usize]) -> Subspace {
        Subspace::span(alg.field(), alg.dim(), idx.iter().map(|&i| alg.basis_vector(i))).unwrap()
    }

    #[test]
    fn trivial_action_is_valid_and_flagged() {
        let f = FieldSpec::Rationals;
        let a = HomAction::trivial(&catalog::e1(f), &catalog::sl2(f)).unwrap();
        let r = a.validate();
        assert!(r.is_valid());
        assert_eq!(r.flag("trivial"), Some(true));
    }

    #[test]
    fn adjoint_on_ideal_is_valid() {
        let e1 = catalog::e1(FieldSpec::Rationals);
        let a = HomAction::restricted_adjoint(&e1, &Subspace::full(e1.field(), 2), &span(&e1, &[0])).unwrap();
        let r = a.validate();
        assert!(r.is_valid(), "{}", r.summary());
        // e1 is central, so the restricted action vanishes.
        assert_eq!(r.flag("trivial"), Some(true));
        let r = HomAction::adjoint(&e1).validate();
        assert!(r.is_valid());
        assert_eq!(r.flag("trivial"), Some(false));
    }

    #[test]
    fn sign_flips_survive_but_new_entries_break_axiom_c() {
        let f = FieldSpec::Rationals;
        let e1 = catalog::e1(f);
        let a = HomAction::adjoint(&e1);
        // Every identity pairs a bracket value with a central element, so flipping
        // the sign of ^{e2}e2 keeps all eight identities.
        let mut left = a.left_tensor().to_vec();
        let idx = (2 + 1) * 2;
        left[idx] = -&left[idx];
        let flipped = HomAction::from_parts(e1.clone(), e1.clone(), left, a.right_tensor().to_vec()).unwrap();
        assert!(flipped.validate().is_valid());

        // Setting ^{e2}e1 = e1 breaks c) at (e2, e2, e1).
        let mut left = a.left_tensor().to_vec();
        left[2 * 2] = f.one();
        let bad = HomAction::from_parts(e1.clone(), e1.clone(), left, a.right_tensor().to_vec()).unwrap();
        let r = bad.validate();
        assert!(!r.holds(ACTION_AXIOMS[2]));
        let v = r.violations.iter().find(|v| v.axiom == ACTION_AXIOMS[2]).unwrap();
        assert_eq!(v.witness, vec!["e2", "e2", "e1"]);
    }

    #[test]
    fn representations_satisfy_abelian_axioms() {
        // E1 acting on its abelian ideal span{e1}: d), e), f) vanish identically.
        let e1 = catalog::e1(FieldSpec::Rationals);
        let a = HomAction::restricted_adjoint(&e1, &Subspace::full(e1.field(), 2), &span(&e1, &[0])).unwrap();
        assert!(a.target().is_abelian());
        let r = a.validate();
        for ax in ACTION_AXIOMS {
            assert!(r.holds(ax));
        }
    }

    #[test]
    fn compatibility() {
        let f = FieldSpec::Rationals;
        let e1 = catalog::e1(f);
        assert!(MutualActions::adjoint(&e1).check_compatible().is_valid());
        assert!(MutualActions::trivial(&e1, &catalog::sl2(f)).unwrap().check_compatible().is_valid());
        let sum = catalog::sl2_sum(f);
        let first = span(&sum, &[0, 1, 2]);
        let second = span(&sum, &[3, 4, 5]);
        let full = Subspace::full(f, 6);
        assert!(MutualActions::ideals(&sum, &first, &full).unwrap().check_compatible().is_valid());
        assert!(MutualActions::ideals(&sum, &first, &second).unwrap().check_compatible().is_valid());

        // In E1 every double bracket vanishes, so one-sided actions stay compatible;
        // sl2 exposes the failure.
        let mixed = MutualActions::new(HomAction::adjoint(&e1), HomAction::trivial(&e1, &e1).unwrap()).unwrap();
        assert!(mixed.check_compatible().is_valid());
        let sl2 = catalog::sl2(f);
        let mixed = MutualActions::new(HomAction::adjoint(&sl2), HomAction::trivial(&sl2, &sl2).unwrap()).unwrap();
        let r = mixed.check_compatible();
        assert!(!r.is_valid());
        assert!(!r.first_violation().unwrap().witness.is_empty());
    }

    #[test]
    fn semidirect_products() {
        let f = FieldSpec::Rationals;
        let a2 = catalog::abelian(f, 2);
        let a1 = catalog::abelian(f, 1);
        let sd = semidirect(&HomAction::trivial(&a1, &a2).unwrap()).unwrap();
        assert!(sd.algebra.is_abelian());
        assert_eq!(sd.algebra.dim(), 3);

        let e1 = catalog::e1(f);
        let act = HomAction::restricted_adjoint(&e1, &Subspace::full(f, 2), &span(&e1, &[0])).unwrap();
        let sd = semidirect(&act).unwrap();
        assert_eq!(sd.algebra.dim(), 3);
        assert!(sd.algebra.validate().is_valid());

        let sl2 = catalog::sl2(f);
        let sd = semidirect(&HomAction::adjoint(&sl2)).unwrap();
        assert_eq!(sd.algebra.dim(), 6);
        assert!(sd.algebra.validate().is_valid());
    }

    /// Rebuilds the action from the split sequence: `ˣm = [s(x), i(m)]`, `mˣ = [i(m), s(x)]`,
    /// read back through the injection. This holds when the twist of `L` is the identity,
    /// where the bracket carries no extra `α`.
    fn reconstruct(sd: &Semidirect, actor: &HomLeibnizAlgebra, target: &HomLeibnizAlgebra) -> HomAction {
        let img = sd.injection.image();
        HomAction::from_fns(
            actor.clone(),
            target.clone(),
            |x, m| {
                let v = sd.algebra.bracket(&sd.section.column(x), &sd.injection.column(m));
                img.coordinates(&v).unwrap()
            },
            |m, x| {
                let v = sd.algebra.bracket(&sd.injection.column(m), &sd.section.column(x));
                img.coordinates(&v).unwrap()
            },
        )
        .unwrap()
    }

    #[test]
    fn split_sequence_recovers_action() {
        let f = FieldSpec::Rationals;
        let sl2 = catalog::sl2(f);
        let act = HomAction::adjoint(&sl2);
        let sd = semidirect(&act).unwrap();
        assert_eq!(sd.injection.rank(), 3);
        assert_eq!(sd.projection.rank(), 3);
        assert_eq!(sd.projection.kernel(), sd.injection.image());
        assert_eq!(sd.projection.compose(&sd.section), LinearMap::identity(f, 3));
        assert!(sd.projection.compose(&sd.injection).is_zero());
        assert_eq!(reconstruct(&sd, &sl2, &sl2), act);
    }
}
