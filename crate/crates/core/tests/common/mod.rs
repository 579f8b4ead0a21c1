//! A deliberately naive reference implementation used as a test oracle.
//!
//! Everything here works on plain `BigRational` vectors and is written
//! straight from the defining formulas, sharing no code with the library:
//! structure constants are nested vectors, chains are sparse maps from index
//! tuples, and ranks come from textbook Gaussian elimination.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use homleib::homassoc::HomAssociativeAlgebra;
use homleib::{HomLeibnizAlgebra, Scalar};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Rank of a list of rows by plain elimination.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for k in c..cols {
                    let delta = &f * &rows[r][k];
                    rows[i][k] -= delta;
                }
            }
        }
        r += 1;
    }
    r
}

fn to_q(s: &Scalar) -> Q {
    match s {
        Scalar::Rational(x) => x.clone(),
        Scalar::Modular { .. } => panic!("the oracle works over Q only"),
    }
}

pub fn to_q_vec(v: &[Scalar]) -> Vec<Q> {
    v.iter().map(to_q).collect()
}

fn unit(d: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); d];
    v[i] = Q::one();
    v
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(s: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| s * x).collect()
}

fn neg(a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| -x).collect()
}

/// An algebra given by `c[i][j]` = `[e_i, e_j]` (or `e_i e_j`) and `alpha[j]` = `α(e_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Alg {
    pub d: usize,
    pub c: Vec<Vec<Vec<Q>>>,
    pub alpha: Vec<Vec<Q>>,
}

impl Alg {
    pub fn new(d: usize, entries: &[(usize, usize, Vec<Q>)], alpha: Vec<Vec<Q>>) -> Self {
        let mut c = vec![vec![vec![Q::zero(); d]; d]; d];
        for (i, j, v) in entries {
            c[*i][*j] = v.clone();
        }
        Alg { d, c, alpha }
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.d];
        for i in 0..self.d {
            for j in 0..self.d {
                let s = &x[i] * &y[j];
                if !s.is_zero() {
                    out = add(&out, &scale(&s, &self.c[i][j]));
                }
            }
        }
        out
    }

    pub fn a(&self, x: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.d];
        for j in 0..self.d {
            if !x[j].is_zero() {
                out = add(&out, &scale(&x[j], &self.alpha[j]));
            }
        }
        out
    }

    pub fn commutator(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        add(&self.mul(x, y), &neg(&self.mul(y, x)))
    }

    pub fn e(&self, i: usize) -> Vec<Q> {
        unit(self.d, i)
    }
}

/// Reads the raw structure data out of a library algebra.
pub fn from_leibniz(l: &HomLeibnizAlgebra) -> Alg {
    let d = l.dim();
    let s = l.structure();
    let c = (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| to_q(&s[(i * d + j) * d + k])).collect()).collect()).collect();
    let alpha = (0..d).map(|j| l.alpha().column(j).iter().map(to_q).collect()).collect();
    Alg { d, c, alpha }
}

pub fn from_associative(a: &HomAssociativeAlgebra) -> Alg {
    let d = a.dim();
    let s = a.product_tensor();
    let c = (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| to_q(&s[(i * d + j) * d + k])).collect()).collect()).collect();
    let alpha = (0..d).map(|j| a.alpha().column(j).iter().map(to_q).collect()).collect();
    Alg { d, c, alpha }
}

fn identity(d: usize) -> Vec<Vec<Q>> {
    (0..d).map(|i| unit(d, i)).collect()
}

/// `[e2, e2] = e1`, `α(e1) = e1`, `α(e2) = e1 + e2`, typed in by hand.
pub fn e1() -> Alg {
    Alg::new(2, &[(1, 1, vec![q(1), q(0)])], vec![vec![q(1), q(0)], vec![q(1), q(1)]])
}

/// `sl2` on `e, h, f`: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
pub fn sl2() -> Alg {
    let v = |a, b, c| vec![q(a), q(b), q(c)];
    Alg::new(
        3,
        &[(0, 2, v(0, 1, 0)), (2, 0, v(0, -1, 0)), (1, 0, v(2, 0, 0)), (0, 1, v(-2, 0, 0)), (1, 2, v(0, 0, -2)), (2, 1, v(0, 0, 2))],
        identity(3),
    )
}

/// `sl2` with bracket `[x, y]' = [φx, φy]` and twist `φ = diag(4, 1, 1/4)`.
pub fn twisted_sl2() -> Alg {
    let base = sl2();
    let phi = [q(4), q(1), qr(1, 4)];
    let mut c = base.c.clone();
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = scale(&(&phi[i] * &phi[j]), &base.c[i][j]);
        }
    }
    let alpha = (0..3).map(|i| scale(&phi[i], &unit(3, i))).collect();
    Alg { d: 3, c, alpha }
}

/// Coefficients for homology: `left[x][m]` = `ˣm`, `right[m][x]` = `mˣ`, `alpha[m]` = `α_M(e_m)`.
pub struct Coefficients {
    pub dm: usize,
    pub alpha: Vec<Vec<Q>>,
    pub left: Vec<Vec<Vec<Q>>>,
    pub right: Vec<Vec<Vec<Q>>>,
}

impl Coefficients {
    /// The ground field with zero operations and identity twist.
    pub fn trivial(l: &Alg) -> Self {
        Coefficients {
            dm: 1,
            alpha: vec![vec![q(1)]],
            left: vec![vec![vec![q(0)]]; l.d],
            right: vec![vec![vec![q(0)]; l.d]],
        }
    }

    /// Reads the raw tensors of a library co-representation.
    pub fn from_library(c: &homleib::homology::CoRepresentation) -> Self {
        let (dl, dm) = (c.algebra().dim(), c.dim());
        let (lt, rt) = (c.left_tensor(), c.right_tensor());
        let vecq = |s: &[Scalar]| s.iter().map(to_q).collect::<Vec<Q>>();
        Coefficients {
            dm,
            alpha: (0..dm).map(|j| vecq(&c.alpha().column(j))).collect(),
            left: (0..dl).map(|x| (0..dm).map(|m| vecq(&lt[(x * dm + m) * dm..(x * dm + m + 1) * dm])).collect()).collect(),
            right: (0..dm).map(|m| (0..dl).map(|x| vecq(&rt[(m * dl + x) * dm..(m * dl + x + 1) * dm])).collect()).collect(),
        }
    }

    /// `ˣy = −[y, x]`, `yˣ = [y, x]`.
    pub fn adjoint(l: &Alg) -> Self {
        let d = l.d;
        Coefficients {
            dm: d,
            alpha: l.alpha.clone(),
            left: (0..d).map(|x| (0..d).map(|y| neg(&l.c[y][x])).collect()).collect(),
            right: (0..d).map(|y| (0..d).map(|x| l.c[y][x].clone()).collect()).collect(),
        }
    }

    fn act_left(&self, x: &[Q], m: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dm];
        for (i, xi) in x.iter().enumerate() {
            for (j, mj) in m.iter().enumerate() {
                let s = xi * mj;
                if !s.is_zero() {
                    out = add(&out, &scale(&s, &self.left[i][j]));
                }
            }
        }
        out
    }

    fn act_right(&self, m: &[Q], x: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dm];
        for (j, mj) in m.iter().enumerate() {
            for (i, xi) in x.iter().enumerate() {
                let s = mj * xi;
                if !s.is_zero() {
                    out = add(&out, &scale(&s, &self.right[j][i]));
                }
            }
        }
        out
    }

    fn twist(&self, m: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dm];
        for (j, mj) in m.iter().enumerate() {
            if !mj.is_zero() {
                out = add(&out, &scale(mj, &self.alpha[j]));
            }
        }
        out
    }
}

type Chain = BTreeMap<Vec<usize>, Q>;

/// Expands `v₀ ⊗ v₁ ⊗ … ⊗ v_k` into a sparse chain, scaled by `s`.
fn expand(s: &Q, factors: &[Vec<Q>], into: &mut Chain) {
    let mut partial: Vec<(Vec<usize>, Q)> = vec![(Vec::new(), s.clone())];
    for f in factors {
        let mut next = Vec::new();
        for (idx, coeff) in &partial {
            for (i, x) in f.iter().enumerate() {
                if !x.is_zero() {
                    let mut k = idx.clone();
                    k.push(i);
                    next.push((k, coeff * x));
                }
            }
        }
        partial = next;
    }
    for (k, v) in partial {
        let e = into.entry(k).or_insert_with(Q::zero);
        *e += v;
    }
}

fn tuples(dm: usize, d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..dm).map(|m| vec![m]).collect();
    for _ in 0..n {
        out = out.into_iter().flat_map(|t| (0..d).map(move |x| {
            let mut t = t.clone();
            t.push(x);
            t
        })).collect();
    }
    out
}

/// The matrix of `d_n` as rows indexed by basis tuples of `CL_n`, written
/// directly from the three sums of the boundary formula.
pub fn boundary_rows(l: &Alg, m: &Coefficients, n: usize) -> Vec<Vec<Q>> {
    let targets = tuples(m.dm, l.d, n - 1);
    let position: BTreeMap<Vec<usize>, usize> = targets.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let sign = |k: usize| if k.is_multiple_of(2) { q(1) } else { q(-1) };
    tuples(m.dm, l.d, n)
        .into_iter()
        .map(|t| {
            let mv = unit(m.dm, t[0]);
            let xs: Vec<Vec<Q>> = t[1..].iter().map(|&i| l.e(i)).collect();
            let ax: Vec<Vec<Q>> = xs.iter().map(|x| l.a(x)).collect();
            let mut chain = Chain::new();
            // m^{x1} ⊗ α(x2) ⊗ … ⊗ α(xn)
            let mut f = vec![m.act_right(&mv, &xs[0])];
            f.extend(ax[1..].iter().cloned());
            expand(&q(1), &f, &mut chain);
            // Σ_{i≥2} (−1)^i ^{xi}m ⊗ α(x1) ⊗ … (omit i) … ⊗ α(xn)
            for i in 2..=n {
                let mut f = vec![m.act_left(&xs[i - 1], &mv)];
                f.extend(ax.iter().enumerate().filter(|(k, _)| *k != i - 1).map(|(_, v)| v.clone()));
                expand(&sign(i), &f, &mut chain);
            }
            // Σ_{i<j} (−1)^{j+1} α(m) ⊗ α(x1) … [xi, xj] … (omit j) … α(xn)
            for i in 1..=n {
                for j in i + 1..=n {
                    let mut f = vec![m.twist(&mv)];
                    for k in 1..=n {
                        if k == j {
                            continue;
                        }
                        f.push(if k == i { l.mul(&xs[i - 1], &xs[j - 1]) } else { ax[k - 1].clone() });
                    }
                    expand(&sign(j + 1), &f, &mut chain);
                }
            }
            let mut row = vec![Q::zero(); targets.len()];
            for (k, v) in chain {
                row[position[&k]] += v;
            }
            row
        })
        .collect()
}

/// `dim HL_n` as `dim CL_n − rank d_n − rank d_{n+1}`.
pub fn homology_dim(l: &Alg, m: &Coefficients, n: usize) -> usize {
    let cn = m.dm * l.d.pow(n as u32);
    let rn = if n == 0 { 0 } else { rank(boundary_rows(l, m, n)) };
    let rn1 = rank(boundary_rows(l, m, n + 1));
    cn - rn - rn1
}

/// Whether `d_{n−1} ∘ d_n` vanishes, computed by multiplying the row matrices.
pub fn square_vanishes(l: &Alg, m: &Coefficients, n: usize) -> bool {
    let a = boundary_rows(l, m, n);
    let b = boundary_rows(l, m, n - 1);
    a.iter().all(|row| {
        let mut out = vec![Q::zero(); b.first().map_or(0, Vec::len)];
        for (k, x) in row.iter().enumerate() {
            if !x.is_zero() {
                out = add(&out, &scale(x, &b[k]));
            }
        }
        out.iter().all(Zero::is_zero)
    })
}

type Op = Box<dyn Fn(&[Q], &[Q]) -> Vec<Q>>;

/// Four bilinear operations for two algebras acting on each other:
/// `ᵐn`, `nᵐ` (on N) and `ⁿm`, `mⁿ` (on M), on coordinate vectors.
pub struct Mutual {
    pub m: Alg,
    pub n: Alg,
    pub m_left_n: Op,
    pub n_right_m: Op,
    pub n_left_m: Op,
    pub m_right_n: Op,
}

impl Mutual {
    /// `L` acting on itself by brackets from both sides.
    pub fn adjoint(l: &Alg) -> Self {
        let op = |l: Alg| Box::new(move |a: &[Q], b: &[Q]| l.mul(a, b)) as Op;
        Mutual {
            m: l.clone(),
            n: l.clone(),
            m_left_n: op(l.clone()),
            n_right_m: op(l.clone()),
            n_left_m: op(l.clone()),
            m_right_n: op(l.clone()),
        }
    }

    pub fn trivial(m: &Alg, n: &Alg) -> Self {
        let (dm, dn) = (m.d, n.d);
        Mutual {
            m: m.clone(),
            n: n.clone(),
            m_left_n: Box::new(move |_, _| vec![Q::zero(); dn]),
            n_right_m: Box::new(move |_, _| vec![Q::zero(); dn]),
            n_left_m: Box::new(move |_, _| vec![Q::zero(); dm]),
            m_right_n: Box::new(move |_, _| vec![Q::zero(); dm]),
        }
    }

    /// Two ideals of `l`, given by bases, acting on each other by the bracket of `l`.
    pub fn ideals(l: &Alg, mb: &[Vec<Q>], nb: &[Vec<Q>]) -> Self {
        let op = |src: Vec<Vec<Q>>, dst: Vec<Vec<Q>>, tgt: Vec<Vec<Q>>, l: Alg| {
            Box::new(move |a: &[Q], b: &[Q]| {
                let (x, y) = (combine(&src, a), combine(&dst, b));
                coords(&tgt, &l.mul(&x, &y))
            }) as Op
        };
        let (m, n) = (mb.to_vec(), nb.to_vec());
        Mutual {
            m: restrict(l, mb),
            n: restrict(l, nb),
            // ᵐn = [m, n] in N
            m_left_n: op(m.clone(), n.clone(), n.clone(), l.clone()),
            // nᵐ = [n, m] in N
            n_right_m: op(n.clone(), m.clone(), n.clone(), l.clone()),
            // ⁿm = [n, m] in M
            n_left_m: op(n.clone(), m.clone(), m.clone(), l.clone()),
            // mⁿ = [m, n] in M
            m_right_n: op(m.clone(), n.clone(), m.clone(), l.clone()),
        }
    }
}

fn combine(basis: &[Vec<Q>], c: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); basis[0].len()];
    for (b, x) in basis.iter().zip(c) {
        out = add(&out, &scale(x, b));
    }
    out
}

/// Coordinates of `v` in the linearly independent family `basis`; panics if `v` is outside its span.
pub fn coords(basis: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    let k = basis.len();
    let n = v.len();
    // Augmented system: columns are the basis vectors, last column is v.
    let mut rows: Vec<Vec<Q>> = (0..n).map(|i| basis.iter().map(|b| b[i].clone()).chain([v[i].clone()]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..n {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..=k {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    assert_eq!(pivots.len(), k, "basis is not independent");
    assert!(rows[r..].iter().all(|row| row[k].is_zero()), "vector outside the span");
    let mut out = vec![Q::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = rows[i][k].clone();
    }
    out
}

/// The subalgebra on `basis` with structure constants in that basis.
pub fn restrict(l: &Alg, basis: &[Vec<Q>]) -> Alg {
    let k = basis.len();
    let c = (0..k).map(|i| (0..k).map(|j| coords(basis, &l.mul(&basis[i], &basis[j]))).collect()).collect();
    let alpha = (0..k).map(|j| coords(basis, &l.a(&basis[j]))).collect();
    Alg { d: k, c, alpha }
}

/// `dim M ∗ N`: the `2·dm·dn` generators `m∗n`, `n∗m` modulo the ten
/// relation families on basis tuples.
pub fn tensor_dim(x: &Mutual) -> usize {
    let (m, n) = (&x.m, &x.n);
    let (dm, dn) = (m.d, n.d);
    let total = 2 * dm * dn;
    // m∗n at i*dn + j; n∗m at dm*dn + j*dm + i.
    let mn = |a: &[Q], b: &[Q]| {
        let mut v = vec![Q::zero(); total];
        for i in 0..dm {
            for j in 0..dn {
                v[i * dn + j] = &a[i] * &b[j];
            }
        }
        v
    };
    let nm = |b: &[Q], a: &[Q]| {
        let mut v = vec![Q::zero(); total];
        for j in 0..dn {
            for i in 0..dm {
                v[dm * dn + j * dm + i] = &b[j] * &a[i];
            }
        }
        v
    };
    let sub = |a: Vec<Q>, b: Vec<Q>| add(&a, &neg(&b));
    let (ml, nr, nl, mr) = (&x.m_left_n, &x.n_right_m, &x.n_left_m, &x.m_right_n);
    let mut rows = Vec::new();
    for a in 0..dm {
        for a2 in 0..dm {
            for b in 0..dn {
                for b2 in 0..dn {
                    let (mm, mm2, nn, nn2) = (m.e(a), m.e(a2), n.e(b), n.e(b2));
                    // α(m) ∗ [n,n'] = m^n ∗ α(n') − m^{n'} ∗ α(n)
                    rows.push(sub(mn(&m.a(&mm), &n.mul(&nn, &nn2)), sub(mn(&mr(&mm, &nn), &n.a(&nn2)), mn(&mr(&mm, &nn2), &n.a(&nn)))));
                    // α(n) ∗ [m,m'] = n^m ∗ α(m') − n^{m'} ∗ α(m)
                    rows.push(sub(nm(&n.a(&nn), &m.mul(&mm, &mm2)), sub(nm(&nr(&nn, &mm), &m.a(&mm2)), nm(&nr(&nn, &mm2), &m.a(&mm)))));
                    // [m,m'] ∗ α(n) = ^m n ∗ α(m') − α(m) ∗ n^{m'}
                    rows.push(sub(mn(&m.mul(&mm, &mm2), &n.a(&nn)), sub(nm(&ml(&mm, &nn), &m.a(&mm2)), mn(&m.a(&mm), &nr(&nn, &mm2)))));
                    // [n,n'] ∗ α(m) = ^n m ∗ α(n') − α(n) ∗ m^{n'}
                    rows.push(sub(nm(&n.mul(&nn, &nn2), &m.a(&mm)), sub(mn(&nl(&nn, &mm), &n.a(&nn2)), nm(&n.a(&nn), &mr(&mm, &nn2)))));
                    // α(m) ∗ ^{m'}n = −α(m) ∗ n^{m'}
                    rows.push(add(&mn(&m.a(&mm), &ml(&mm2, &nn)), &mn(&m.a(&mm), &nr(&nn, &mm2))));
                    // α(n) ∗ ^{n'}m = −α(n) ∗ m^{n'}
                    rows.push(add(&nm(&n.a(&nn), &nl(&nn2, &mm)), &nm(&n.a(&nn), &mr(&mm, &nn2))));
                    // m^n ∗ ^{m'}n' = ^m n ∗ m'^{n'}
                    rows.push(sub(mn(&mr(&mm, &nn), &ml(&mm2, &nn2)), nm(&ml(&mm, &nn), &mr(&mm2, &nn2))));
                    // m^n ∗ n'^{m'} = ^m n ∗ ^{n'}m'
                    rows.push(sub(mn(&mr(&mm, &nn), &nr(&nn2, &mm2)), nm(&ml(&mm, &nn), &nl(&nn2, &mm2))));
                    // ^n m ∗ ^{m'}n' = n^m ∗ m'^{n'}
                    rows.push(sub(mn(&nl(&nn, &mm), &ml(&mm2, &nn2)), nm(&nr(&nn, &mm), &mr(&mm2, &nn2))));
                    // ^n m ∗ n'^{m'} = n^m ∗ ^{n'}m'
                    rows.push(sub(mn(&nl(&nn, &mm), &nr(&nn2, &mm2)), nm(&nr(&nn, &mm), &nl(&nn2, &mm2))));
                }
            }
        }
    }
    total - rank(rows)
}

/// `A ⊗ A` index `a*d + b`.
fn kron2(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

/// Rows spanning `Im b₃` with `b₃(a⊗b⊗c) = ab⊗α(c) − α(a)⊗bc + ca⊗α(b)`.
pub fn b3_rows(a: &Alg) -> Vec<Vec<Q>> {
    let d = a.d;
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y, z) = (a.e(i), a.e(j), a.e(k));
                let t1 = kron2(&a.mul(&x, &y), &a.a(&z));
                let t2 = kron2(&a.a(&x), &a.mul(&y, &z));
                let t3 = kron2(&a.mul(&z, &x), &a.a(&y));
                rows.push(add(&add(&t1, &neg(&t2)), &t3));
            }
        }
    }
    rows
}

/// `dim (A⊗A)/Im b₃`.
pub fn l_alpha_dim(a: &Alg) -> usize {
    a.d * a.d - rank(b3_rows(a))
}

/// `dim Ker(a⊗b ↦ ab − ba) − rank b₃`.
pub fn hh1_dim(a: &Alg) -> usize {
    let d = a.d;
    let images: Vec<Vec<Q>> = (0..d * d).map(|g| a.commutator(&a.e(g / d), &a.e(g % d))).collect();
    let kernel = d * d - rank(images);
    kernel - rank(b3_rows(a))
}

/// `A⊗A` modulo `Im b₃`, `α(a)⊗[b,c]` and `[a,b]⊗α(c)`.
pub fn milnor_dim(a: &Alg) -> usize {
    let d = a.d;
    let mut rows = b3_rows(a);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y, z) = (a.e(i), a.e(j), a.e(k));
                rows.push(kron2(&a.a(&x), &a.commutator(&y, &z)));
                rows.push(kron2(&a.commutator(&x, &y), &a.a(&z)));
            }
        }
    }
    d * d - rank(rows)
}

/// `dim [A,A] − dim [A,[A,A]]` for the commutator bracket.
pub fn commutator_quotient_dim(a: &Alg) -> usize {
    let d = a.d;
    let comms: Vec<Vec<Q>> = (0..d * d).map(|g| a.commutator(&a.e(g / d), &a.e(g % d))).collect();
    let outer: Vec<Vec<Q>> = (0..d).flat_map(|i| comms.iter().map(move |c| (i, c.clone()))).map(|(i, c)| a.commutator(&a.e(i), &c)).collect();
    rank(comms) - rank(outer)
}

/// `dim Z(L)`: solve `[x, e_j] = [e_j, x] = 0` for all `j`.
pub fn center_dim(l: &Alg) -> usize {
    let d = l.d;
    // Equations in the unknown coordinates of x: one row per (j, k, side).
    let mut rows = Vec::new();
    for j in 0..d {
        for k in 0..d {
            rows.push((0..d).map(|i| l.c[i][j][k].clone()).collect());
            rows.push((0..d).map(|i| l.c[j][i][k].clone()).collect());
        }
    }
    d - rank(rows)
}

pub fn abs_sum(v: &[Q]) -> Q {
    v.iter().fold(Q::zero(), |acc, x| acc + x.abs())
}
