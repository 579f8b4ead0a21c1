//! Seeded generators of valid small instances for property batteries.
//!
//! Every generator draws from families that are valid by construction and
//! then validates anyway, resampling on the (unexpected) failure.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::actions::MutualActions;
use crate::algebra::{default_labels, HomLeibnizAlgebra};
use crate::catalog;
use crate::field::{FieldSpec, Scalar};
use crate::homology::CoRepresentation;
use crate::linalg::{zero_vec, LinearMap, Subspace};

/// The generator used throughout: ChaCha8 seeded from a `u64`.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small(field: FieldSpec, rng: &mut impl Rng) -> Scalar {
    field.from_i64(rng.gen_range(-2..=2))
}

fn nonzero(field: FieldSpec, rng: &mut impl Rng) -> Scalar {
    let choices: [(i64, i64); 6] = [(1, 1), (2, 1), (3, 1), (-1, 1), (1, 2), (-2, 3)];
    let (a, b) = *choices.choose(rng).unwrap();
    field.ratio(a, b)
}

pub fn random_matrix(field: FieldSpec, rng: &mut impl Rng, rows: usize, cols: usize) -> LinearMap {
    let columns: Vec<Vec<Scalar>> = (0..cols).map(|_| (0..rows).map(|_| small(field, rng)).collect()).collect();
    LinearMap::from_fn(field, cols, rows, |j| columns[j].clone())
}

pub fn random_invertible(field: FieldSpec, rng: &mut impl Rng, n: usize) -> LinearMap {
    loop {
        let m = random_matrix(field, rng, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

fn diagonal(field: FieldSpec, entries: &[Scalar]) -> LinearMap {
    LinearMap::from_fn(field, entries.len(), entries.len(), |i| {
        let mut v = zero_vec(field, entries.len());
        v[i] = entries[i].clone();
        v
    })
}

/// Abelian algebra with an arbitrary (or, if `surjective`, invertible) twist.
fn abelian(field: FieldSpec, rng: &mut impl Rng, n: usize, surjective: bool) -> HomLeibnizAlgebra {
    let alpha = if surjective { random_invertible(field, rng, n) } else { random_matrix(field, rng, n, n) };
    HomLeibnizAlgebra::abelian(field, default_labels("a", n), alpha).unwrap()
}

/// Any bracket with the zero twist.
fn zero_twist(field: FieldSpec, rng: &mut impl Rng, n: usize) -> HomLeibnizAlgebra {
    let data: Vec<Vec<Scalar>> = (0..n * n)
        .map(|_| (0..n).map(|_| if rng.gen_bool(0.3) { small(field, rng) } else { field.zero() }).collect())
        .collect();
    HomLeibnizAlgebra::from_bracket_fn(field, default_labels("z", n), LinearMap::zero(field, n, n), |i, j| {
        data[i * n + j].clone()
    })
    .unwrap()
}

/// Two-step nilpotent `V ⊕ Z` with brackets `V × V → Z` and twist `t` on `V`, `t²` on `Z`.
fn two_step(field: FieldSpec, rng: &mut impl Rng, n: usize) -> HomLeibnizAlgebra {
    let p = rng.gen_range(1..n);
    let t = nonzero(field, rng);
    let t2 = &t * &t;
    let entries: Vec<Scalar> = (0..n).map(|i| if i < p { t.clone() } else { t2.clone() }).collect();
    let mut data = vec![vec![zero_vec(field, n); n]; n];
    for row in data.iter_mut().take(p) {
        for cell in row.iter_mut().take(p) {
            for z in cell.iter_mut().skip(p) {
                if rng.gen_bool(0.5) {
                    *z = small(field, rng);
                }
            }
        }
    }
    let base = HomLeibnizAlgebra::from_bracket_fn(field, default_labels("v", n), LinearMap::identity(field, n), |i, j| {
        data[i][j].clone()
    })
    .unwrap();
    base.yau_twist(&diagonal(field, &entries)).unwrap()
}

fn twisted_sl2(field: FieldSpec, rng: &mut impl Rng) -> HomLeibnizAlgebra {
    let t = nonzero(field, rng);
    let inv = t.inv().unwrap();
    catalog::sl2(field).yau_twist(&diagonal(field, &[t, field.one(), inv])).unwrap()
}

fn twisted_heisenberg(field: FieldSpec, rng: &mut impl Rng) -> HomLeibnizAlgebra {
    let (a, b) = (nonzero(field, rng), nonzero(field, rng));
    let ab = &a * &b;
    catalog::heisenberg(field).yau_twist(&diagonal(field, &[a, b, ab])).unwrap()
}

/// A random valid algebra of dimension at most `max_dim` (at least 1). With
/// `surjective`, the twist is invertible.
pub fn random_algebra(field: FieldSpec, rng: &mut impl Rng, max_dim: usize, surjective: bool) -> HomLeibnizAlgebra {
    assert!(max_dim >= 1);
    loop {
        let n = rng.gen_range(1..=max_dim);
        let family = rng.gen_range(0..6);
        let candidate = match family {
            0 => abelian(field, rng, n, surjective),
            1 if !surjective => zero_twist(field, rng, n),
            2 if n >= 2 => two_step(field, rng, n),
            3 if max_dim >= 3 => twisted_sl2(field, rng),
            4 if max_dim >= 3 => twisted_heisenberg(field, rng),
            5 if max_dim >= 2 => catalog::e1(field),
            _ => continue,
        };
        if candidate.validate().is_valid() {
            return candidate;
        }
    }
}

/// A random valid co-representation: adjoint, or trivial with a random twist.
pub fn random_corep(field: FieldSpec, rng: &mut impl Rng, max_dim: usize) -> CoRepresentation {
    loop {
        let l = random_algebra(field, rng, max_dim, false);
        let c = if rng.gen_bool(0.5) {
            CoRepresentation::adjoint(&l)
        } else {
            let m = rng.gen_range(1..=max_dim);
            CoRepresentation::trivial(&l, random_matrix(field, rng, m, m)).unwrap()
        };
        if c.validate().is_valid() {
            return c;
        }
    }
}

/// Two algebras with surjective twists and trivial mutual actions.
pub fn random_trivial_pair(field: FieldSpec, rng: &mut impl Rng, max_dim: usize) -> MutualActions {
    let m = random_algebra(field, rng, max_dim, true);
    let n = random_algebra(field, rng, max_dim, true);
    MutualActions::trivial(&m, &n).unwrap()
}

/// Candidate ideals of `l`: the whole algebra, `[L, L]`, `Z(L)` and the ideal
/// generated by a random vector.
fn candidate_ideals(l: &HomLeibnizAlgebra, rng: &mut impl Rng) -> Vec<Subspace> {
    let field = l.field();
    let v: Vec<Scalar> = (0..l.dim()).map(|_| small(field, rng)).collect();
    let mut out = vec![Subspace::full(field, l.dim()), l.derived_subspace().clone(), l.center().clone(), l.generated_ideal([v])];
    out.retain(|s| !s.is_zero() && l.check_ideal(s).is_ok());
    out
}

/// An algebra with non-zero bracket and two nonzero ideals acting on each
/// other by brackets, returned as `(L, M, N)`.
pub fn random_ideal_pair(field: FieldSpec, rng: &mut impl Rng, max_dim: usize) -> (HomLeibnizAlgebra, Subspace, Subspace) {
    loop {
        let l = random_algebra(field, rng, max_dim, false);
        if l.is_abelian() {
            continue;
        }
        let ideals = candidate_ideals(&l, rng);
        if ideals.is_empty() {
            continue;
        }
        let m = ideals.choose(rng).unwrap().clone();
        let n = ideals.choose(rng).unwrap().clone();
        let Ok(ma) = MutualActions::ideals(&l, &m, &n) else { continue };
        if ma.on_n().validate().is_valid() && ma.on_m().validate().is_valid() && ma.check_compatible().is_valid() {
            return (l, m, n);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic_and_valid() {
        let f = FieldSpec::Rationals;
        let mut a = rng(11);
        let mut b = rng(11);
        for _ in 0..10 {
            let x = random_algebra(f, &mut a, 4, false);
            assert_eq!(x, random_algebra(f, &mut b, 4, false));
            assert!(x.validate().is_valid());
        }
        for _ in 0..5 {
            assert!(random_corep(f, &mut a, 3).validate().is_valid());
            let p = random_trivial_pair(f, &mut a, 3);
            assert!(p.m().alpha().is_surjective() && p.n().alpha().is_surjective());
            let (l, m, _) = random_ideal_pair(f, &mut a, 4);
            assert!(l.check_ideal(&m).is_ok());
        }
    }
}
