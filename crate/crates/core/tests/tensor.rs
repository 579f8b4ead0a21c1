mod common;

use homleib::actions::MutualActions;
use homleib::random::{random_algebra, random_ideal_pair, random_trivial_pair, rng};
use homleib::tensor::{build_tensor, psi_maps, psi_properties, TensorProduct};
use homleib::{catalog, FieldSpec, HomLeibnizAlgebra, Scalar};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { Q.one() } else { Q.zero() }).collect()
}

/// Brackets and twists of relation vectors stay among the relations.
fn relations_closed(t: &TensorProduct) -> bool {
    let rel = t.presentation().relations();
    let n = t.ambient_dim();
    rel.basis().iter().all(|r| {
        rel.contains(&t.ambient_alpha(r))
            && (0..n).all(|g| {
                let e = unit(n, g);
                rel.contains(&t.ambient_bracket(r, &e)) && rel.contains(&t.ambient_bracket(&e, r))
            })
    })
}

fn kernels_central(t: &TensorProduct) -> bool {
    let (p1, p2) = psi_maps(t).unwrap();
    let center = t.algebra().center();
    p1.kernel().is_subspace_of(center) && p2.kernel().is_subspace_of(center)
}

fn abelianization_dim(l: &HomLeibnizAlgebra) -> usize {
    l.dim() - l.derived_subspace().dim()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn adjoint_square_matches_reference(seed in any::<u64>()) {
        let l = random_algebra(Q, &mut rng(seed), 3, seed % 2 == 0);
        let t = build_tensor(&MutualActions::adjoint(&l)).unwrap();
        prop_assert_eq!(t.dim(), common::tensor_dim(&common::Mutual::adjoint(&common::from_leibniz(&l))));
        prop_assert!(t.algebra().validate().is_valid());
        prop_assert!(relations_closed(&t));
        prop_assert!(kernels_central(&t));
    }

    #[test]
    fn ideal_pairs_match_reference(seed in any::<u64>()) {
        let (l, m, n) = random_ideal_pair(Q, &mut rng(seed), 3);
        let t = build_tensor(&MutualActions::ideals(&l, &m, &n).unwrap()).unwrap();
        let mb: Vec<_> = m.basis().iter().map(|v| common::to_q_vec(v)).collect();
        let nb: Vec<_> = n.basis().iter().map(|v| common::to_q_vec(v)).collect();
        let reference = common::tensor_dim(&common::Mutual::ideals(&common::from_leibniz(&l), &mb, &nb));
        prop_assert_eq!(t.dim(), reference);
        prop_assert!(relations_closed(&t));
        prop_assert!(kernels_central(&t));
    }

    #[test]
    fn trivial_actions_split_into_abelianizations(seed in any::<u64>()) {
        let ma = random_trivial_pair(Q, &mut rng(seed), 3);
        let t = build_tensor(&ma).unwrap();
        prop_assert_eq!(t.dim(), 2 * abelianization_dim(ma.m()) * abelianization_dim(ma.n()));
        prop_assert!(t.algebra().is_abelian());
        let reference = common::Mutual::trivial(&common::from_leibniz(ma.m()), &common::from_leibniz(ma.n()));
        prop_assert_eq!(t.dim(), common::tensor_dim(&reference));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn psi_properties_hold_on_ideal_pairs(seed in any::<u64>()) {
        let (l, m, n) = random_ideal_pair(Q, &mut rng(seed), 3);
        let t = build_tensor(&MutualActions::ideals(&l, &m, &n).unwrap()).unwrap();
        let report = psi_properties(&t).unwrap();
        prop_assert!(report.is_valid(), "{}", report.summary());
    }
}

#[test]
fn e1_tensor_square_matches_reference() {
    let t = build_tensor(&MutualActions::adjoint(&catalog::e1(Q))).unwrap();
    assert_eq!(t.dim(), common::tensor_dim(&common::Mutual::adjoint(&common::e1())));
    assert!(psi_properties(&t).unwrap().is_valid());
}

#[test]
fn sl2_tensor_square_is_sl2() {
    for l in [catalog::sl2(Q), catalog::twisted_sl2(Q)] {
        let t = build_tensor(&MutualActions::adjoint(&l)).unwrap();
        assert_eq!(t.dim(), 3);
        let (psi, _) = psi_maps(&t).unwrap();
        assert!(psi.map().is_injective() && psi.map().is_surjective());
    }
    assert_eq!(common::tensor_dim(&common::Mutual::adjoint(&common::sl2())), 3);
    assert_eq!(common::tensor_dim(&common::Mutual::adjoint(&common::twisted_sl2())), 3);
}

#[test]
fn perfect_factors_give_perfect_squares() {
    for l in [catalog::sl2(Q), catalog::twisted_sl2(Q), catalog::sl2_sum(Q)] {
        let t = build_tensor(&MutualActions::adjoint(&l)).unwrap();
        assert!(t.algebra().predicates().perfect);
    }
}

#[test]
fn lines_with_trivial_actions_give_two_generators() {
    let a = catalog::abelian(Q, 1);
    let t = build_tensor(&MutualActions::trivial(&a, &a).unwrap()).unwrap();
    assert_eq!(t.dim(), 2);
    assert!(t.algebra().is_abelian());
}
