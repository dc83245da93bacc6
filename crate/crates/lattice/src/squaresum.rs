//! Square sums of the Brauer weights over the parity classes of Λ(N, ℓ).

use std::f64::consts::PI;

use fusym_core::labels::{all_brauer_labels, brauer_case, BrauerCase};
use fusym_core::qarith::brauer_product;
use fusym_core::{Error, Result, RootOfUnity};
use serde::Serialize;

use crate::roots::RootSystem;

#[derive(Debug, Clone, Serialize)]
pub struct SquareSumReport {
    pub context: RootOfUnity,
    pub even_sum: f64,
    pub odd_sum: f64,
    pub closed_form: f64,
    /// `|even − closed| / closed`.
    pub closed_form_error: f64,
    /// `|even − odd| / closed`.
    pub parity_error: f64,
    pub tol: f64,
    pub passed: bool,
}

/// `b(N) = 2` for positive even N, else 1.
pub fn b_factor(ctx: &RootOfUnity) -> f64 {
    if ctx.n() > 0 && ctx.abs_n() % 2 == 0 {
        2.0
    } else {
        1.0
    }
}

/// `ℓ^k / (b(N) ∏_{α>0} 4 sin²(π(α, ρ̌)/ℓ))`.
pub fn square_sum_closed_form(ctx: &RootOfUnity) -> Result<f64> {
    let system = RootSystem::for_context(ctx)
        .ok_or_else(|| Error::Domain(format!("no root system for N = {}", ctx.n())))?;
    let n = ctx.abs_n() as f64;
    let rho_check: Vec<f64> = (1..=ctx.rank()).map(|i| (n + 1.0) / 2.0 - i as f64).collect();
    let ell = ctx.ell() as f64;
    let denom: f64 = system
        .positive_roots()
        .iter()
        .map(|a| {
            let s = (PI * a.iter().zip(&rho_check).map(|(&c, r)| c as f64 * r).sum::<f64>() / ell).sin();
            4.0 * s * s
        })
        .product();
    Ok(ell.powi(ctx.rank() as i32) / (b_factor(ctx) * denom))
}

/// Checks the closed form and the parity balance; defined for `N < 0` even and for `N > 0` with `ℓ − N` even.
pub fn verify_square_sums(ctx: &RootOfUnity, tol: f64) -> Result<SquareSumReport> {
    if brauer_case(ctx) == BrauerCase::B {
        return Err(Error::Domain(format!(
            "square sums need ℓ − N even for N > 0, got N = {}, ℓ = {}",
            ctx.n(),
            ctx.ell()
        )));
    }
    let closed_form = square_sum_closed_form(ctx)?;
    let (mut even_sum, mut odd_sum) = (0.0, 0.0);
    for lambda in all_brauer_labels(ctx) {
        let d = brauer_product(ctx, &lambda)?;
        if lambda.size() % 2 == 0 {
            even_sum += d * d;
        } else {
            odd_sum += d * d;
        }
    }
    let closed_form_error = (even_sum - closed_form).abs() / closed_form;
    let parity_error = (even_sum - odd_sum).abs() / closed_form;
    Ok(SquareSumReport {
        context: *ctx,
        even_sum,
        odd_sum,
        closed_form,
        closed_form_error,
        parity_error,
        tol,
        passed: closed_form_error < tol && parity_error < tol,
    })
}
