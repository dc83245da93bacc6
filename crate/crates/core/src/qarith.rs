//! q-numbers at `q = e^{iπ/ℓ}` and the two weight formulas.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::labels::{self, Kind, LabelSet};
use crate::partitions::Partition;

/// The parameter pair `(N, ℓ)` with `1 < |N| < ℓ`.
///
/// `N < 0` selects the symplectic series, `N > 0` the orthogonal one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RootOfUnity {
    n: i64,
    ell: u64,
}

impl RootOfUnity {
    pub fn new(n: i64, ell: u64) -> Result<Self> {
        if n.unsigned_abs() < 2 || n.unsigned_abs() >= ell {
            return Err(Error::Context(format!("need 1 < |N| < ℓ, got N = {n}, ℓ = {ell}")));
        }
        Ok(Self { n, ell })
    }

    /// The signed parameter N.
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn abs_n(&self) -> usize {
        self.n.unsigned_abs() as usize
    }

    /// Rank k = ⌊|N|/2⌋ of the orthogonal or symplectic group.
    pub fn rank(&self) -> usize {
        self.abs_n() / 2
    }

    pub fn is_orthogonal(&self) -> bool {
        self.n > 0
    }

    /// `[m]` at this level.
    pub fn qint(&self, m: i64) -> f64 {
        qint(m, self.ell)
    }
}

/// `x` with `digits` significant digits: fixed notation for moderate exponents, scientific otherwise.
pub fn format_sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.*e}", digits - 1);
    let exp: i32 = sci.rsplit('e').next().and_then(|e| e.parse().ok()).unwrap_or(0);
    if (-4..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

/// `[m] = sin(mπ/ℓ)/sin(π/ℓ)`, with `m` reduced mod `2ℓ` first and exact zeros at multiples of `ℓ`.
pub fn qint(m: i64, ell: u64) -> f64 {
    let ell = ell as i64;
    let r = m.rem_euclid(2 * ell);
    if r % ell == 0 {
        return 0.0;
    }
    let r = if r > ell { r - 2 * ell } else { r };
    (r as f64 * PI / ell as f64).sin() / (PI / ell as f64).sin()
}

/// First-order coefficient of `[m]` at a multiple of `ℓ`, in units of the common infinitesimal.
fn vanishing_slope(m: i64, ell: u64) -> f64 {
    let turns = m / ell as i64;
    let sign = if turns % 2 == 0 { 1.0 } else { -1.0 };
    sign * m as f64
}

/// Product of `[numer]/[hook]` over the boxes, evaluated as a limit in `q` so that
/// vanishing factors cancel in pairs.
fn hook_product(ctx: &RootOfUnity, lambda: &Partition, numer: impl Fn(usize, usize) -> i64) -> Result<f64> {
    let ell = ctx.ell as i64;
    let mut value = 1.0;
    let mut order = 0i64;
    for (i, j) in lambda.boxes() {
        let h = lambda.hook_length(i, j)? as i64;
        let m = numer(i, j);
        if m % ell == 0 {
            order += 1;
            value *= vanishing_slope(m, ctx.ell);
        } else {
            value *= ctx.qint(m);
        }
        if h % ell == 0 {
            order -= 1;
            value /= vanishing_slope(h, ctx.ell);
        } else {
            value /= ctx.qint(h);
        }
    }
    match order {
        0 => Ok(value),
        o if o > 0 => Ok(0.0),
        _ => Err(Error::Internal(format!("pole of order {} for {lambda} at ℓ = {}", -order, ctx.ell))),
    }
}

/// `∏ [N + j − i] / [h(i,j)]` without a label-set check.
pub fn hecke_product(ctx: &RootOfUnity, lambda: &Partition) -> Result<f64> {
    hook_product(ctx, lambda, |i, j| ctx.n + j as i64 - i as i64)
}

/// `∏ [N + d(i,j)] / [h(i,j)]` without a label-set check.
pub fn brauer_product(ctx: &RootOfUnity, lambda: &Partition) -> Result<f64> {
    hook_product(ctx, lambda, |i, j| ctx.n + lambda.brauer_content(i, j).expect("box of λ"))
}

/// The Hecke weight d̃_λ for λ ∈ Λ̃(N, ℓ).
pub fn hecke_weight(ctx: &RootOfUnity, lambda: &Partition) -> Result<f64> {
    labels::require(ctx, Kind::Hecke, lambda)?;
    hecke_product(ctx, lambda)
}

/// The Brauer weight d_λ for λ ∈ Λ(N, ℓ).
pub fn brauer_weight(ctx: &RootOfUnity, lambda: &Partition) -> Result<f64> {
    labels::require(ctx, Kind::Brauer, lambda)?;
    brauer_product(ctx, lambda)
}

/// Weights for every member of a label set.
#[derive(Debug, Clone, Serialize)]
pub struct WeightTable {
    pub context: RootOfUnity,
    pub kind: Kind,
    pub entries: Vec<(Partition, f64)>,
}

impl WeightTable {
    pub fn for_labels(labels: &LabelSet) -> Result<Self> {
        let f = match labels.kind {
            Kind::Hecke => hecke_product,
            Kind::Brauer => brauer_product,
        };
        let entries = labels
            .members
            .iter()
            .map(|l| Ok((l.clone(), f(&labels.context, l)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { context: labels.context, kind: labels.kind, entries })
    }

    pub fn get(&self, lambda: &Partition) -> Option<f64> {
        self.entries.iter().find(|(l, _)| l == lambda).map(|(_, v)| *v)
    }

    pub fn square_sum(&self) -> f64 {
        self.entries.iter().map(|(_, v)| v * v).sum()
    }
}

/// Outcome of scanning all of Λ(N, ℓ) for positivity of `ω_λ = d_λ / [N]^{|λ|}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PositivityReport {
    pub context: RootOfUnity,
    pub all_positive: bool,
    pub first_negative: Option<(Partition, f64)>,
    pub checked: usize,
}

/// Scans every λ ∈ Λ(N, ℓ) in canonical order and tests `ω_λ > tol`.
pub fn positivity_report(ctx: &RootOfUnity, tol: f64) -> Result<PositivityReport> {
    let all = labels::all_brauer_labels(ctx);
    let qn = ctx.qint(ctx.n);
    let mut first_negative = None;
    for lambda in &all {
        let omega = brauer_product(ctx, lambda)? / qn.powi(lambda.size() as i32);
        if omega <= tol {
            first_negative = Some((lambda.clone(), omega));
            break;
        }
    }
    Ok(PositivityReport {
        context: *ctx,
        all_positive: first_negative.is_none(),
        first_negative,
        checked: all.len(),
    })
}
