//! The index `[M : N]` by the weight-vector ratio and by the sine product over the weights of 𝔭.

use std::f64::consts::PI;

use fusym_core::{Error, Result, RootOfUnity};
use serde::Serialize;

use crate::stabilize::{stabilize, DEFAULT_N_CAP};

/// A positive weight of 𝔭 restricted from a positive root of sl_N, in the basis `φ_1, …, φ_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PWeight(pub Vec<i64>);

/// Positive weights of 𝔭 and the multiplicity of its zero weight.
///
/// N = 2k+1: `2φ_i, φ_i, φ_i ± φ_j`, zero weight k times.
/// N = 2k: `2φ_i, φ_i ± φ_j`, zero weight k − 1 times.
/// N = −2k: `φ_i ± φ_j`, zero weight k − 1 times.
pub fn p_weights(ctx: &RootOfUnity) -> Result<(Vec<PWeight>, usize)> {
    let k = ctx.rank();
    let unit = |i: usize, c: i64| {
        let mut v = vec![0; k];
        v[i] = c;
        v
    };
    let mut out = Vec::new();
    let odd = ctx.abs_n() % 2 == 1;
    if ctx.n() < 0 && odd {
        return Err(Error::Domain(format!("no symplectic group for N = {}", ctx.n())));
    }
    if ctx.n() > 0 {
        out.extend((0..k).map(|i| PWeight(unit(i, 2))));
        if odd {
            out.extend((0..k).map(|i| PWeight(unit(i, 1))));
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            for s in [1, -1] {
                let mut v = unit(i, 1);
                v[j] = s;
                out.push(PWeight(v));
            }
        }
    }
    let zero = if odd { k } else { k.saturating_sub(1) };
    Ok((out, zero))
}

/// `ρ̌ = ((|N| + 1)/2 − i)_{i ≤ k}`.
pub fn rho_check(ctx: &RootOfUnity) -> Vec<f64> {
    let half = (ctx.abs_n() as f64 + 1.0) / 2.0;
    (1..=ctx.rank()).map(|i| half - i as f64).collect()
}

/// 2 for N = 2k > 0, else 1.
pub fn b_factor(ctx: &RootOfUnity) -> f64 {
    if ctx.n() > 0 && ctx.abs_n() % 2 == 0 {
        2.0
    } else {
        1.0
    }
}

/// `dim 𝔭 = 2·#{ω > 0} + n(𝔭)`, the exponent of ℓ in the growth of the index.
pub fn dim_p(ctx: &RootOfUnity) -> Result<usize> {
    let (w, zero) = p_weights(ctx)?;
    Ok(2 * w.len() + zero)
}

/// `b(N) ℓ^{n(𝔭)} ∏_{ω>0} 1 / (4 sin²((ω, ρ̌)π/ℓ))`.
pub fn index_closed_form(ctx: &RootOfUnity) -> Result<f64> {
    let (weights, zero) = p_weights(ctx)?;
    let rho = rho_check(ctx);
    let ell = ctx.ell() as f64;
    let mut value = b_factor(ctx) * ell.powi(zero as i32);
    for w in &weights {
        let pairing: f64 = w.0.iter().zip(&rho).map(|(&a, b)| a as f64 * b).sum();
        let s = (pairing * PI / ell).sin();
        if s.abs() < 1e-12 {
            return Err(Error::Domain(format!("weight {:?} pairs to a multiple of ℓ", w.0)));
        }
        value /= 4.0 * s * s;
    }
    Ok(value)
}

/// `‖a‖² / ‖b‖²` at the stable level.
pub fn index_ratio(ctx: &RootOfUnity) -> Result<f64> {
    Ok(stabilize(ctx, 2, DEFAULT_N_CAP)?.1.index)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexReport {
    pub n: i64,
    pub ell: u64,
    pub n_stable: usize,
    pub ratio: f64,
    pub closed_form: f64,
    pub relative_difference: f64,
}

pub fn index_report(ctx: &RootOfUnity) -> Result<IndexReport> {
    let (n_stable, g) = stabilize(ctx, 2, DEFAULT_N_CAP)?;
    let closed_form = index_closed_form(ctx)?;
    Ok(IndexReport {
        n: ctx.n(),
        ell: ctx.ell(),
        n_stable,
        ratio: g.index,
        closed_form,
        relative_difference: (g.index - closed_form).abs() / closed_form.abs(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticsRow {
    pub ell: u64,
    pub index: f64,
    /// `index / ℓ^{dim 𝔭}`.
    pub scaled: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticsProbe {
    pub n: i64,
    pub dim_p: usize,
    pub rows: Vec<AsymptoticsRow>,
    /// `b(N) ∏ 1/(2π(ω, ρ̌))²`, the value the scaled column tends to.
    pub limit: f64,
}

impl AsymptoticsProbe {
    /// Scaled values move monotonically toward `limit`, each step closing the gap.
    pub fn converges(&self) -> bool {
        let gaps: Vec<f64> = self.rows.iter().map(|r| (r.scaled - self.limit).abs()).collect();
        let signs_agree = self.rows.iter().all(|r| (r.scaled - self.limit).signum() == (self.rows[0].scaled - self.limit).signum());
        self.limit > 0.0 && signs_agree && gaps.windows(2).all(|w| w[1] < w[0])
    }
}

/// Closed-form index at each ℓ, divided by `ℓ^{dim 𝔭}`.
pub fn asymptotics_probe(n: i64, ells: &[u64]) -> Result<AsymptoticsProbe> {
    if ells.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("levels must be strictly increasing".into()));
    }
    let first = RootOfUnity::new(n, *ells.first().ok_or_else(|| Error::Domain("no levels given".into()))?)?;
    let dim = dim_p(&first)?;
    let mut rows = Vec::with_capacity(ells.len());
    for &ell in ells {
        let ctx = RootOfUnity::new(n, ell)?;
        let index = index_closed_form(&ctx)?;
        rows.push(AsymptoticsRow { ell, index, scaled: index / (ell as f64).powi(dim as i32) });
    }
    let (weights, _) = p_weights(&first)?;
    let rho = rho_check(&first);
    let limit = weights.iter().fold(b_factor(&first), |acc, w| {
        let pairing: f64 = w.0.iter().zip(&rho).map(|(&a, b)| a as f64 * b).sum();
        acc / (2.0 * PI * pairing).powi(2)
    });
    Ok(AsymptoticsProbe { n, dim_p: dim, rows, limit })
}
