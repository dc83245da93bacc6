//! Tensor-space matrices realising the q-Brauer generators on `(C^N)^{⊗n}`,
//! and a residual report for the defining relations.
//!
//! `g_i ↦ q R_{n−i}` and `e ↦ Q_{n−1}`, where `A_i` acts on tensor factors
//! `i, i+1`. See [`QWeights`] for the two diagonal conventions of `Q`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use fusym_core::{Error, Partition, Result, RootOfUnity};
use nalgebra::{Complex, DMatrix, DVector};
use serde::Serialize;

pub type C64 = Complex<f64>;
pub type Matrix = DMatrix<C64>;

/// Largest tensor-space dimension `N^n` a representation may have.
pub const MAX_DIM: usize = 4096;

/// Exponent convention for the weights `q^{±(N+1−2i)}` of `Q = Σ_{ij} w_i E_ij ⊗ E_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QWeights {
    /// `w_i = q^{N+1−2i}`, the displayed formula. Satisfies the relations only at `q = ±1`.
    Displayed,
    /// `w_i = q^{2i−N−1}`. Satisfies every relation for all `q`.
    Reflected,
}

/// `[m]_q = (q^m − q^{−m})/(q − q^{−1})`, continuous at `q = ±1`.
pub fn qnumber(q: C64, m: i32) -> C64 {
    let d = q - q.inv();
    if d.norm() < 1e-14 {
        return q.powi(m - 1) * m as f64;
    }
    (q.powi(m) - q.powi(-m)) / d
}

/// Index of `v_a ⊗ v_b` in `C^n ⊗ C^n`.
fn idx(a: usize, b: usize, n: usize) -> usize {
    a * n + b
}

/// The type-A solution `R` of the braid relation on `C^N ⊗ C^N`.
pub fn build_r(q: C64, n: usize) -> Matrix {
    let one = C64::new(1.0, 0.0);
    let mut r = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let ij = idx(i, j, n);
            if i == j {
                r[(ij, ij)] += q;
            } else {
                r[(ij, idx(j, i, n))] += one;
            }
            if i < j {
                r[(ij, ij)] += q - q.inv();
            }
        }
    }
    r
}

/// `Q = Σ_{i,j} w_i E_ij ⊗ E_ij` on `C^N ⊗ C^N`.
pub fn build_q(q: C64, n: usize, weights: QWeights) -> Matrix {
    let mut m = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        let e = n as i32 + 1 - 2 * (i as i32 + 1);
        let w = match weights {
            QWeights::Displayed => q.powi(e),
            QWeights::Reflected => q.powi(-e),
        };
        for j in 0..n {
            m[(idx(i, i, n), idx(j, j, n))] = w;
        }
    }
    m
}

/// `A_i = 1_{i−1} ⊗ A ⊗ 1_{n−1−i}` for a two-factor operator `A` on `(C^dim)^{⊗2}`.
pub fn embed(a: &Matrix, i: usize, factors: usize, dim: usize) -> Matrix {
    assert!(i >= 1 && i < factors, "A_i needs 1 ≤ i < n");
    let left = Matrix::identity(dim.pow(i as u32 - 1), dim.pow(i as u32 - 1));
    let right_size = dim.pow((factors - 1 - i) as u32);
    let right = Matrix::identity(right_size, right_size);
    left.kronecker(a).kronecker(&right)
}

/// The images of `g_1, …, g_{n−1}` and `e`.
#[derive(Debug, Clone)]
pub struct Representation {
    pub q: C64,
    pub dim: usize,
    pub factors: usize,
    g: Vec<Matrix>,
    e: Matrix,
}

impl Representation {
    pub fn new(q: C64, dim: usize, factors: usize, weights: QWeights) -> Result<Self> {
        if dim < 2 || factors < 2 {
            return Err(Error::Domain(format!("need N ≥ 2 and n ≥ 2, got N = {dim}, n = {factors}")));
        }
        let total = dim.checked_pow(factors as u32).unwrap_or(usize::MAX);
        if total > MAX_DIM {
            return Err(Error::Size { dim: total, cap: MAX_DIM });
        }
        let r = build_r(q, dim);
        let g = (1..factors).map(|i| embed(&r, factors - i, factors, dim) * q).collect();
        let e = embed(&build_q(q, dim, weights), factors - 1, factors, dim);
        Ok(Self { q, dim, factors, g, e })
    }

    /// `q = e^{iπ/ℓ}` with the reflected weights.
    pub fn from_context(ctx: &RootOfUnity, factors: usize) -> Result<Self> {
        if !ctx.is_orthogonal() {
            return Err(Error::Domain("tensor-space matrices need N > 0".into()));
        }
        let q = C64::from_polar(1.0, PI / ctx.ell() as f64);
        Self::new(q, ctx.abs_n(), factors, QWeights::Reflected)
    }

    /// The `q = 1` specialisation (Brauer's centraliser algebra).
    pub fn classical(dim: usize, factors: usize) -> Result<Self> {
        Self::new(C64::new(1.0, 0.0), dim, factors, QWeights::Reflected)
    }

    /// Image of `g_i`, `1 ≤ i < n`.
    pub fn g(&self, i: usize) -> &Matrix {
        &self.g[i - 1]
    }

    pub fn e(&self) -> &Matrix {
        &self.e
    }

    pub fn identity(&self) -> Matrix {
        let d = self.e.nrows();
        Matrix::identity(d, d)
    }

    /// Replace the image of `e` (used for negative controls).
    pub fn with_e(mut self, e: Matrix) -> Self {
        self.e = e;
        self
    }

    fn g_inv(&self, i: usize) -> Result<Matrix> {
        self.g(i).clone().try_inverse().ok_or(Error::Degenerate(0.0))
    }
}

/// Product that skips zero entries; the generators have O(dim) nonzeros.
pub fn sparse_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.nrows();
    let mut rows_of_b: Vec<Vec<(usize, C64)>> = vec![Vec::new(); b.nrows()];
    for j in 0..b.ncols() {
        for k in 0..b.nrows() {
            let v = b[(k, j)];
            if v != C64::new(0.0, 0.0) {
                rows_of_b[k].push((j, v));
            }
        }
    }
    let mut out = Matrix::zeros(n, b.ncols());
    for k in 0..a.ncols() {
        if rows_of_b[k].is_empty() {
            continue;
        }
        for i in 0..n {
            let v = a[(i, k)];
            if v == C64::new(0.0, 0.0) {
                continue;
            }
            for &(j, w) in &rows_of_b[k] {
                out[(i, j)] += v * w;
            }
        }
    }
    out
}

fn max_abs(m: &Matrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Residual {
    pub name: String,
    pub value: f64,
}

/// Max-norm residuals of every relation that makes sense for the given `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationReport {
    pub dim: usize,
    pub factors: usize,
    pub residuals: Vec<Residual>,
}

impl RelationReport {
    pub fn max(&self) -> f64 {
        self.residuals.iter().map(|r| r.value).fold(0.0, f64::max)
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.residuals.iter().find(|r| r.name == name).map(|r| r.value)
    }

    /// `Err` naming the first relation whose residual reaches `tol`.
    pub fn check(&self, tol: f64) -> Result<()> {
        match self.residuals.iter().find(|r| r.value.partial_cmp(&tol) != Some(std::cmp::Ordering::Less)) {
            Some(r) => Err(Error::Relation { name: r.name.clone(), residual: r.value }),
            None => Ok(()),
        }
    }
}

pub fn verify_relations(rep: &Representation) -> Result<RelationReport> {
    let n = rep.factors;
    let q = rep.q;
    let id = rep.identity();
    let e = rep.e();
    let mul = |xs: &[&Matrix]| xs[1..].iter().fold(xs[0].clone(), |acc, x| sparse_mul(&acc, x));
    let mut out = Vec::new();
    let mut push = |name: String, value: f64| out.push(Residual { name, value });

    for i in 1..n {
        let g = rep.g(i);
        push(format!("quadratic g{i}"), max_abs(&(mul(&[g, g]) - g * (q * q - 1.0) - &id * (q * q))));
    }
    for i in 1..n.saturating_sub(1) {
        let (a, b) = (rep.g(i), rep.g(i + 1));
        push(format!("braid g{i} g{}", i + 1), max_abs(&(mul(&[a, b, a]) - mul(&[b, a, b]))));
    }
    for i in 1..n {
        for j in (i + 2)..n {
            let (a, b) = (rep.g(i), rep.g(j));
            push(format!("commute g{i} g{j}"), max_abs(&(mul(&[a, b]) - mul(&[b, a]))));
        }
    }
    push("E1 e^2 = [N] e".into(), max_abs(&(mul(&[e, e]) - e * qnumber(q, rep.dim as i32))));
    for i in 3..n {
        let g = rep.g(i);
        push(format!("E2 e g{i} = g{i} e"), max_abs(&(mul(&[e, g]) - mul(&[g, e]))));
    }
    push("E2 e g1 = q^2 e".into(), max_abs(&(mul(&[e, rep.g(1)]) - e * (q * q))));
    if n >= 3 {
        let np1 = rep.dim as i32 + 1;
        push("E2 e g2 e = q^(N+1) e".into(), max_abs(&(mul(&[e, rep.g(2), e]) - e * q.powi(np1))));
        let g2i = rep.g_inv(2)?;
        push("E2 e g2^-1 e = q^(-1-N) e".into(), max_abs(&(mul(&[e, &g2i, e]) - e * q.powi(-np1))));
    }
    if n >= 4 {
        let (g1i, g2i) = (rep.g_inv(1)?, rep.g_inv(2)?);
        let x = mul(&[rep.g(2), rep.g(3), &g1i, &g2i]);
        let e2 = mul(&[e, &x, e]);
        push("E3 left".into(), max_abs(&(mul(&[&x, &e2]) - &e2)));
        push("E3 right".into(), max_abs(&(mul(&[&e2, &x]) - &e2)));
    }
    Ok(RelationReport { dim: rep.dim, factors: n, residuals: out })
}

fn flatten(m: &Matrix) -> DVector<C64> {
    DVector::from_iterator(m.len(), m.iter().copied())
}

/// Dimension of the span of all words of length ≤ `max_len` in `1, e, g_i`,
/// by incremental Gram–Schmidt with relative cutoff `1e-8`.
pub fn word_span_dimension(rep: &Representation, max_len: usize) -> usize {
    let mut gens: Vec<Matrix> = (1..rep.factors).map(|i| rep.g(i).clone()).collect();
    gens.push(rep.e().clone());
    let mut basis: Vec<DVector<C64>> = Vec::new();
    let try_add = |m: &Matrix, basis: &mut Vec<DVector<C64>>| -> bool {
        let mut v = flatten(m);
        let norm0 = v.norm();
        if norm0 == 0.0 {
            return false;
        }
        for _ in 0..2 {
            for b in basis.iter() {
                let c = b.dotc(&v);
                v -= b * c;
            }
        }
        let norm = v.norm();
        if norm > 1e-8 * norm0 {
            basis.push(v / C64::new(norm, 0.0));
            true
        } else {
            false
        }
    };
    let mut frontier = vec![rep.identity()];
    try_add(&frontier[0], &mut basis);
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let m = w * g;
                if try_add(&m, &mut basis) {
                    next.push(m);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    basis.len()
}

/// `Σ_λ (#paths to λ)²` at level `n` of the untruncated Brauer diagram
/// (add or remove one box per step), i.e. `(2n − 1)!!`.
pub fn brauer_dimension(n: usize) -> u128 {
    let mut level: BTreeMap<Partition, u128> = BTreeMap::from([(Partition::empty(), 1)]);
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for (l, c) in &level {
            for m in l.add_box().into_iter().chain(l.remove_box()) {
                *next.entry(m).or_insert(0) += c;
            }
        }
        level = next;
    }
    level.values().map(|c| c * c).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_at_one_is_the_flip() {
        let n = 3;
        let r = build_r(C64::new(1.0, 0.0), n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let want = if a == d && b == c { 1.0 } else { 0.0 };
                        assert_eq!(r[(a * n + b, c * n + d)], C64::new(want, 0.0));
                    }
                }
            }
        }
    }

    #[test]
    fn q_trace_is_quantum_integer() {
        let q = C64::from_polar(1.0, PI / 9.0);
        for w in [QWeights::Displayed, QWeights::Reflected] {
            let m = build_q(q, 4, w);
            assert!((m.trace() - qnumber(q, 4)).norm() < 1e-12);
            assert!(max_abs(&(&m * &m - &m * qnumber(q, 4))) < 1e-12);
        }
    }

    #[test]
    fn index_reversal() {
        let rep = Representation::classical(2, 3).unwrap();
        let r = build_r(C64::new(1.0, 0.0), 2);
        assert_eq!(rep.g(1), &embed(&r, 2, 3, 2));
        assert_eq!(rep.g(2), &embed(&r, 1, 3, 2));
    }

    #[test]
    fn double_factorials() {
        assert_eq!(brauer_dimension(1), 1);
        assert_eq!(brauer_dimension(2), 3);
        assert_eq!(brauer_dimension(3), 15);
        assert_eq!(brauer_dimension(4), 105);
    }

    #[test]
    fn size_cap() {
        assert!(matches!(Representation::classical(4, 7), Err(Error::Size { .. })));
        assert!(Representation::from_context(&RootOfUnity::new(-4, 8).unwrap(), 3).is_err());
    }
}
