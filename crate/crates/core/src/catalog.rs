//! Named small algebras used throughout the tests, the CLI and the documentation.

use crate::algebra::{default_labels, HomLeibnizAlgebra};
use crate::field::{FieldSpec, Scalar};
use crate::homassoc::HomAssociativeAlgebra;
use crate::linalg::{zero_vec, LinearMap};

fn vector(field: FieldSpec, entries: &[i64]) -> Vec<Scalar> {
    entries.iter().map(|&x| field.from_i64(x)).collect()
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Two-dimensional non-Hom-Lie algebra: `[e2, e2] = e1`, `α(e1) = e1`, `α(e2) = e1 + e2`.
pub fn e1(field: FieldSpec) -> HomLeibnizAlgebra {
    let alpha = LinearMap::from_columns(field, 2, &[vector(field, &[1, 0]), vector(field, &[1, 1])]).unwrap();
    HomLeibnizAlgebra::from_bracket_fn(field, default_labels("e", 2), alpha, |i, j| {
        if (i, j) == (1, 1) {
            vector(field, &[1, 0])
        } else {
            zero_vec(field, 2)
        }
    })
    .unwrap()
}

/// `sl2` on the basis `e, h, f` with the identity twist.
pub fn sl2(field: FieldSpec) -> HomLeibnizAlgebra {
    HomLeibnizAlgebra::from_bracket_fn(field, labels(&["e", "h", "f"]), LinearMap::identity(field, 3), |i, j| {
        let v: [i64; 3] = match (i, j) {
            (0, 2) => [0, 1, 0],
            (2, 0) => [0, -1, 0],
            (1, 0) => [2, 0, 0],
            (0, 1) => [-2, 0, 0],
            (1, 2) => [0, 0, -2],
            (2, 1) => [0, 0, 2],
            _ => [0, 0, 0],
        };
        vector(field, &v)
    })
    .unwrap()
}

/// The automorphism `e ↦ 4e`, `h ↦ h`, `f ↦ f/4` of `sl2`.
pub fn sl2_diagonal_automorphism(field: FieldSpec) -> LinearMap {
    let d = [field.from_i64(4), field.one(), field.ratio(1, 4)];
    LinearMap::from_fn(field, 3, 3, |i| {
        let mut v = zero_vec(field, 3);
        v[i] = d[i].clone();
        v
    })
}

/// The Yau twist of `sl2` by [`sl2_diagonal_automorphism`]: perfect and α-perfect.
pub fn twisted_sl2(field: FieldSpec) -> HomLeibnizAlgebra {
    sl2(field).yau_twist(&sl2_diagonal_automorphism(field)).unwrap()
}

/// `sl2 ⊕ sl2` with the identity twist.
pub fn sl2_sum(field: FieldSpec) -> HomLeibnizAlgebra {
    let s = sl2(field);
    s.direct_sum(&s).unwrap()
}

/// Abelian algebra of dimension `n` with the identity twist.
pub fn abelian(field: FieldSpec, n: usize) -> HomLeibnizAlgebra {
    HomLeibnizAlgebra::abelian(field, default_labels("a", n), LinearMap::identity(field, n)).unwrap()
}

/// Heisenberg Lie algebra `[x, y] = z = -[y, x]`.
pub fn heisenberg(field: FieldSpec) -> HomLeibnizAlgebra {
    HomLeibnizAlgebra::from_bracket_fn(field, labels(&["x", "y", "z"]), LinearMap::identity(field, 3), |i, j| {
        match (i, j) {
            (0, 1) => vector(field, &[0, 0, 1]),
            (1, 0) => vector(field, &[0, 0, -1]),
            _ => zero_vec(field, 3),
        }
    })
    .unwrap()
}

/// A two-dimensional algebra whose kernel part is α-central but not central:
/// `[k2, k2] = k1`, `α(k1) = 0`, `α(k2) = k1`, plus an abelian summand `l`
/// with identity twist. Projecting onto `l` gives an α-central extension.
pub fn alpha_central_total(field: FieldSpec) -> HomLeibnizAlgebra {
    let alpha = LinearMap::from_columns(
        field,
        3,
        &[vector(field, &[0, 0, 0]), vector(field, &[1, 0, 0]), vector(field, &[0, 0, 1])],
    )
    .unwrap();
    HomLeibnizAlgebra::from_bracket_fn(field, labels(&["k1", "k2", "l"]), alpha, |i, j| {
        if (i, j) == (1, 1) {
            vector(field, &[1, 0, 0])
        } else {
            zero_vec(field, 3)
        }
    })
    .unwrap()
}

/// Dual numbers `K[x]/(x²)` on the basis `1, x`, identity twist.
pub fn dual_numbers(field: FieldSpec) -> HomAssociativeAlgebra {
    HomAssociativeAlgebra::from_product_fn(field, labels(&["1", "x"]), LinearMap::identity(field, 2), |i, j| {
        match (i, j) {
            (0, 0) => vector(field, &[1, 0]),
            (0, 1) | (1, 0) => vector(field, &[0, 1]),
            _ => zero_vec(field, 2),
        }
    })
    .unwrap()
}

/// Upper-triangular `2 × 2` matrices on `E11, E12, E22`, identity twist.
pub fn upper_triangular(field: FieldSpec) -> HomAssociativeAlgebra {
    // Index i of (E11, E12, E22) as a matrix unit (row, col).
    let units = [(0, 0), (0, 1), (1, 1)];
    HomAssociativeAlgebra::from_product_fn(field, labels(&["E11", "E12", "E22"]), LinearMap::identity(field, 3), |i, j| {
        matrix_unit_product(field, &units, i, j)
    })
    .unwrap()
}

/// All `2 × 2` matrices on `E11, E12, E21, E22`, identity twist.
pub fn matrices_2x2(field: FieldSpec) -> HomAssociativeAlgebra {
    let units = [(0, 0), (0, 1), (1, 0), (1, 1)];
    HomAssociativeAlgebra::from_product_fn(
        field,
        labels(&["E11", "E12", "E21", "E22"]),
        LinearMap::identity(field, 4),
        |i, j| matrix_unit_product(field, &units, i, j),
    )
    .unwrap()
}

/// The zero product on a one-dimensional space, identity twist.
pub fn zero_product_line(field: FieldSpec) -> HomAssociativeAlgebra {
    HomAssociativeAlgebra::from_product_fn(field, labels(&["u"]), LinearMap::identity(field, 1), |_, _| {
        zero_vec(field, 1)
    })
    .unwrap()
}

fn matrix_unit_product(field: FieldSpec, units: &[(usize, usize)], i: usize, j: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, units.len());
    let ((a, b), (c, d)) = (units[i], units[j]);
    if b == c {
        let k = units.iter().position(|&u| u == (a, d)).unwrap();
        v[k] = field.one();
    }
    v
}

/// Names accepted by [`associative_by_name`].
pub const ASSOCIATIVE_NAMES: [&str; 4] = ["dual-numbers", "upper-triangular", "matrices-2x2", "zero-product-line"];

/// Looks up a named Hom-associative algebra.
pub fn associative_by_name(name: &str, field: FieldSpec) -> Option<HomAssociativeAlgebra> {
    Some(match name {
        "dual-numbers" => dual_numbers(field),
        "upper-triangular" => upper_triangular(field),
        "matrices-2x2" => matrices_2x2(field),
        "zero-product-line" => zero_product_line(field),
        _ => return None,
    })
}

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 7] = ["e1", "sl2", "twisted-sl2", "sl2-sum", "heisenberg", "abelian1", "alpha-central"];

/// Looks up a named Hom-Leibniz algebra.
pub fn by_name(name: &str, field: FieldSpec) -> Option<HomLeibnizAlgebra> {
    Some(match name {
        "e1" => e1(field),
        "sl2" => sl2(field),
        "twisted-sl2" => twisted_sl2(field),
        "sl2-sum" => sl2_sum(field),
        "heisenberg" => heisenberg(field),
        "abelian1" => abelian(field, 1),
        "alpha-central" => alpha_central_total(field),
        _ => return None,
    })
}
