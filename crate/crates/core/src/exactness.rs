//! Exactness certificates by exact rank arithmetic, including a generic
//! snake-lemma construction used by the six-term sequences.

use crate::field::Scalar;
use crate::linalg::{LinearMap, QuotientSpace, Subspace};
use crate::report::ExactnessReport;

/// Records exactness of `A -f-> B -g-> C` at `B`: `Im f = Ker g`.
pub fn record_joint(report: &mut ExactnessReport, name: &str, f: &LinearMap, g: &LinearMap) -> bool {
    let image = f.image();
    let kernel = g.kernel();
    let holds = image == kernel;
    report.joint(name, image.dim(), kernel.dim(), holds);
    holds
}

/// Records surjectivity of `f` as a joint `Im f = target`.
pub fn record_surjective(report: &mut ExactnessReport, name: &str, f: &LinearMap) -> bool {
    let rank = f.rank();
    let holds = rank == f.codomain_dim();
    report.joint(name, rank, f.codomain_dim(), holds);
    holds
}

/// Records injectivity of `f` as a joint `0 = Ker f`.
pub fn record_injective(report: &mut ExactnessReport, name: &str, f: &LinearMap) -> bool {
    let k = f.kernel().dim();
    report.joint(name, 0, k, k == 0);
    k == 0
}

/// A commutative diagram with exact rows
///
/// ```text
///   A1 --f1--> A2 --f2--> A3
///   |v1        |v2        |v3
///   B1 --g1--> B2 --g2--> B3
/// ```
///
/// and everything the snake lemma derives from it.
#[derive(Debug, Clone)]
pub struct Snake {
    pub kernels: [Subspace; 3],
    pub cokernels: [QuotientSpace; 3],
    /// `Ker v1 → Ker v2` in kernel-basis coordinates.
    pub ker_f1: LinearMap,
    /// `Ker v2 → Ker v3` in kernel-basis coordinates.
    pub ker_f2: LinearMap,
    /// Connecting map `Ker v3 → Coker v1`.
    pub delta: LinearMap,
    pub coker_g1: LinearMap,
    pub coker_g2: LinearMap,
}

/// Maps `Ker(src) → Ker(dst)` along `f`, in RREF-basis coordinates; `None` if
/// some kernel vector leaves `dst`.
pub fn restrict_between(f: &LinearMap, src: &Subspace, dst: &Subspace) -> Option<LinearMap> {
    let mut cols = Vec::with_capacity(src.dim());
    for k in src.basis() {
        cols.push(dst.coordinates(&f.apply(&k))?);
    }
    Some(LinearMap::from_columns(f.field(), dst.dim(), &cols).unwrap())
}

pub struct SnakeInput<'a> {
    pub f1: &'a LinearMap,
    pub f2: &'a LinearMap,
    pub g1: &'a LinearMap,
    pub g2: &'a LinearMap,
    pub v1: &'a LinearMap,
    pub v2: &'a LinearMap,
    pub v3: &'a LinearMap,
}

/// Generic term names for [`snake`].
pub const SNAKE_TERMS: [&str; 6] = ["Ker v1", "Ker v2", "Ker v3", "Coker v1", "Coker v2", "Coker v3"];

/// Builds the snake sequence
/// `Ker v1 → Ker v2 → Ker v3 → Coker v1 → Coker v2 → Coker v3 → 0`,
/// recording the diagram hypotheses as checks and exactness at each joint.
/// `names` labels the six terms in the report. Returns `None` when a
/// hypothesis fails so badly that the maps cannot be formed.
pub fn snake(input: &SnakeInput<'_>, names: [&str; 6], report: &mut ExactnessReport) -> Option<Snake> {
    let SnakeInput { f1, f2, g1, g2, v1, v2, v3 } = *input;
    let field = f1.field();

    // Diagram hypotheses.
    report.check("left square commutes", g1.compose(v1) == v2.compose(f1));
    report.check("right square commutes", g2.compose(v2) == v3.compose(f2));
    report.check("top row exact in the middle", f1.image() == f2.kernel());
    report.check("top row surjective on the right", f2.is_surjective());
    report.check("bottom row injective on the left", g1.is_injective());
    report.check("bottom row exact in the middle", g1.image() == g2.kernel());

    let kernels = [v1.kernel(), v2.kernel(), v3.kernel()];
    let cokernels = [
        QuotientSpace::from_subspace(v1.image()),
        QuotientSpace::from_subspace(v2.image()),
        QuotientSpace::from_subspace(v3.image()),
    ];
    let ker_f1 = restrict_between(f1, &kernels[0], &kernels[1]);
    let ker_f2 = restrict_between(f2, &kernels[1], &kernels[2]);
    report.check("f1 maps kernels into kernels", ker_f1.is_some());
    report.check("f2 maps kernels into kernels", ker_f2.is_some());
    let (ker_f1, ker_f2) = (ker_f1?, ker_f2?);

    // δ(k) = class of g1⁻¹(v2(f2⁻¹(k))).
    let mut delta_cols: Vec<Vec<Scalar>> = Vec::with_capacity(kernels[2].dim());
    let mut delta_ok = true;
    for k in kernels[2].basis() {
        let lifted = f2.solve(&k).and_then(|a| g1.solve(&v2.apply(&a)));
        match lifted {
            Some(c) => delta_cols.push(cokernels[0].project(&c)),
            None => {
                delta_ok = false;
                delta_cols.push(vec![field.zero(); cokernels[0].dim()]);
            }
        }
    }
    report.check("connecting map is defined", delta_ok);
    let delta = LinearMap::from_columns(field, cokernels[0].dim(), &delta_cols).unwrap();

    let coker_g1 = g1.induced(&cokernels[0], &cokernels[1]);
    let coker_g2 = g2.induced(&cokernels[1], &cokernels[2]);
    report.check("g1 descends to cokernels", coker_g1.is_ok());
    report.check("g2 descends to cokernels", coker_g2.is_ok());
    let (coker_g1, coker_g2) = (coker_g1.ok()?, coker_g2.ok()?);

    let dims = [
        kernels[0].dim(),
        kernels[1].dim(),
        kernels[2].dim(),
        cokernels[0].dim(),
        cokernels[1].dim(),
        cokernels[2].dim(),
    ];
    for (name, dim) in names.iter().zip(dims) {
        report.term(name, dim);
    }
    record_joint(report, names[1], &ker_f1, &ker_f2);
    record_joint(report, names[2], &ker_f2, &delta);
    record_joint(report, names[3], &delta, &coker_g1);
    record_joint(report, names[4], &coker_g1, &coker_g2);
    if g2.is_surjective() {
        record_surjective(report, names[5], &coker_g2);
    }
    Some(Snake { kernels, cokernels, ker_f1, ker_f2, delta, coker_g1, coker_g2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn map(rows: usize, cols: &[&[i64]]) -> LinearMap {
        let f = FieldSpec::Rationals;
        let cols: Vec<Vec<Scalar>> = cols.iter().map(|c| c.iter().map(|&x| f.from_i64(x)).collect()).collect();
        LinearMap::from_columns(f, rows, &cols).unwrap()
    }

    #[test]
    fn joints() {
        let f = FieldSpec::Rationals;
        let inc = map(2, &[&[1, 0]]);
        let proj = map(1, &[&[0], &[1]]);
        let mut r = ExactnessReport::new("0 -> K -> K^2 -> K -> 0");
        assert!(record_injective(&mut r, "left", &inc));
        assert!(record_joint(&mut r, "middle", &inc, &proj));
        assert!(record_surjective(&mut r, "right", &proj));
        assert!(r.holds());
        let mut bad = ExactnessReport::new("not exact");
        assert!(!record_joint(&mut bad, "middle", &LinearMap::zero(f, 1, 2), &proj));
        assert!(!bad.holds());
    }

    #[test]
    fn snake_of_multiplication_by_zero() {
        // Rows 0 → K → K² → K → 0 with vertical maps 0, 0, 0: the snake
        // sequence is K → K² → K → K → K² → K with δ an isomorphism.
        let f = FieldSpec::Rationals;
        let inc = map(2, &[&[1, 0]]);
        let proj = map(1, &[&[0], &[1]]);
        let z1 = LinearMap::zero(f, 1, 1);
        let z2 = LinearMap::zero(f, 2, 2);
        let mut r = ExactnessReport::new("snake");
        let s = snake(&SnakeInput { f1: &inc, f2: &proj, g1: &inc, g2: &proj, v1: &z1, v2: &z2, v3: &z1 }, SNAKE_TERMS, &mut r)
            .unwrap();
        assert!(r.holds(), "{:?}", r.failures());
        assert_eq!(s.delta.rank(), 0);
    }

    #[test]
    fn snake_with_identity_verticals() {
        let f = FieldSpec::Rationals;
        let inc = map(2, &[&[1, 0]]);
        let proj = map(1, &[&[0], &[1]]);
        let i1 = LinearMap::identity(f, 1);
        let i2 = LinearMap::identity(f, 2);
        let mut r = ExactnessReport::new("snake");
        let s = snake(&SnakeInput { f1: &inc, f2: &proj, g1: &inc, g2: &proj, v1: &i1, v2: &i2, v3: &i1 }, SNAKE_TERMS, &mut r)
            .unwrap();
        assert!(r.holds());
        assert!(s.kernels.iter().all(Subspace::is_zero));
    }

    #[test]
    fn broken_square_is_reported() {
        let f = FieldSpec::Rationals;
        let inc = map(2, &[&[1, 0]]);
        let proj = map(1, &[&[0], &[1]]);
        let i1 = LinearMap::identity(f, 1);
        let swap = map(2, &[&[0, 1], &[1, 0]]);
        let mut r = ExactnessReport::new("snake");
        let _ = snake(&SnakeInput { f1: &inc, f2: &proj, g1: &inc, g2: &proj, v1: &i1, v2: &swap, v3: &i1 }, SNAKE_TERMS, &mut r);
        assert!(!r.holds());
        assert!(r.failures().iter().any(|m| m.contains("square")));
    }
}
