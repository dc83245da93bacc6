//! Group elements at which the boundary characters of Λ(N, ℓ) vanish.

use std::f64::consts::PI;

use fusym_core::labels::{all_brauer_labels, brauer_labels};
use fusym_core::{Error, Partition, Result, RootOfUnity};
use fusym_lattice::characters::{o_character, schur, sp_character, C64};
use fusym_lattice::Det;

/// Boundary characters must be below this at every evaluation point.
pub const VANISHING_TOL: f64 = 1e-8;

/// A torus element `exp(x)` of SO(N) or Sp(|N|), or for N = 2k an element of determinant −1
/// whose remaining eigenvalues are `e^{±2πi x_j}`, `j < k`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalPoint {
    pub det: Det,
    pub x: Vec<f64>,
    /// Eigenvalues in the defining representation of U(|N|).
    pub eigenvalues: Vec<C64>,
}

impl EvalPoint {
    fn new(det: Det, doubled: &[i64], ell: u64, extra: &[f64]) -> Self {
        let x: Vec<f64> = doubled.iter().map(|&p| p as f64 / (2 * ell) as f64).collect();
        let mut eigenvalues: Vec<C64> = x.iter().map(|t| C64::from_polar(1.0, 2.0 * PI * t)).collect();
        eigenvalues.extend(x.iter().map(|t| C64::from_polar(1.0, -2.0 * PI * t)));
        eigenvalues.extend(extra.iter().map(|&e| C64::new(e, 0.0)));
        Self { det, x, eigenvalues }
    }

    /// Character of the O(N) / Sp(|N|) label `μ` (transposed convention for N < 0, sign dropped).
    pub fn subgroup_character(&self, ctx: &RootOfUnity, mu: &Partition) -> Result<f64> {
        if ctx.n() > 0 {
            o_character(ctx.abs_n(), mu, &self.x, self.det)
        } else {
            sp_character(&mu.conjugate(), &self.x)
        }
    }

    /// U(|N|) character of `λ` (transposed for N < 0, sign dropped).
    pub fn unitary_character(&self, ctx: &RootOfUnity, lambda: &Partition) -> Result<f64> {
        let label = if ctx.n() > 0 { lambda.clone() } else { lambda.conjugate() };
        Ok(schur(&label, &self.eigenvalues)?.re)
    }
}

/// Strictly decreasing `k`-subsets of `candidates` (given in decreasing order).
fn decreasing_subsets(candidates: &[i64], k: usize) -> Vec<Vec<i64>> {
    fn go(c: &[i64], k: usize, start: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..c.len() {
            if c.len() - i < k - cur.len() {
                break;
            }
            cur.push(c[i]);
            go(c, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(candidates, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Alcove points without the boundary check.
///
/// Coordinates are listed doubled: `p` stands for `x = p/(2ℓ)`.
/// N = 2k+1: integers `ℓ/2 > p_1 > … > p_k > 0`.
/// N = 2k: half-integers in the same range, plus det −1 points from k − 1 integers.
/// N = −2k: all-integer or all-half-integer `p` in that range.
pub fn alcove_points(ctx: &RootOfUnity) -> Vec<EvalPoint> {
    let ell = ctx.ell() as i64;
    let k = ctx.rank();
    // doubled values strictly between 0 and ℓ
    let integers: Vec<i64> = (1..ell).rev().filter(|p| p % 2 == 0).collect();
    let halves: Vec<i64> = (1..ell).rev().filter(|p| p % 2 == 1).collect();
    let mut out = Vec::new();
    let u = ctx.ell();
    if ctx.n() > 0 && ctx.abs_n() % 2 == 1 {
        out.extend(decreasing_subsets(&integers, k).iter().map(|p| EvalPoint::new(Det::Plus, p, u, &[1.0])));
    } else if ctx.n() > 0 {
        out.extend(decreasing_subsets(&halves, k).iter().map(|p| EvalPoint::new(Det::Plus, p, u, &[])));
        out.extend(
            decreasing_subsets(&integers, k - 1).iter().map(|p| EvalPoint::new(Det::Minus, p, u, &[1.0, -1.0])),
        );
    } else {
        for set in [&integers, &halves] {
            out.extend(decreasing_subsets(set, k).iter().map(|p| EvalPoint::new(Det::Plus, p, u, &[])));
        }
    }
    out
}

fn is_group_label(ctx: &RootOfUnity, l: &Partition) -> bool {
    if ctx.n() > 0 {
        l.col(1) + l.col(2) <= ctx.abs_n()
    } else {
        l.row(1) <= ctx.rank()
    }
}

/// Alcove points, after checking that every boundary diagram that is a group label has
/// vanishing character there (diagrams up to one box beyond the largest label).
pub fn evaluation_points(ctx: &RootOfUnity) -> Result<Vec<EvalPoint>> {
    if ctx.n() < 0 && ctx.abs_n() % 2 == 1 {
        return Err(Error::Domain(format!("no symplectic group for N = {}", ctx.n())));
    }
    let points = alcove_points(ctx);
    let top = all_brauer_labels(ctx).iter().map(Partition::size).max().unwrap_or(0);
    let mut boundary = brauer_labels(ctx, top + 1).boundary;
    boundary.extend(brauer_labels(ctx, top).boundary);
    for mu in boundary.iter().filter(|l| is_group_label(ctx, l)) {
        for p in &points {
            let v = p.subgroup_character(ctx, mu)?;
            if v.abs() > VANISHING_TOL {
                return Err(Error::Config(format!(
                    "boundary diagram {mu} has character {v:e} at x = {:?} ({:?})",
                    p.x, p.det
                )));
            }
        }
    }
    Ok(points)
}
