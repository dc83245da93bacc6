//! The per-context verification suite behind `fusym verify`.

use fusym_branching::{method_mismatch, require_branching_context, Brancher};
use fusym_core::labels::{brauer_case, hecke_labels, BrauerCase};
use fusym_core::qarith::{format_sig, positivity_report};
use fusym_core::{Error, Result, RootOfUnity};
use fusym_lattice::{s_matrix, verify_square_sums, Setup};
use fusym_molev::{verify_relations, RelationReport, Representation, MAX_DIM};
use fusym_towers::{index_closed_form, pf_consistency, stabilize_with, DEFAULT_N_CAP};
use serde::Serialize;

use crate::tolerances;

fn sig(x: f64) -> String {
    format_sig(x, 9)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Self { name, status: if passed { Status::Pass } else { Status::Fail }, detail }
    }

    fn skip(name: &'static str, detail: impl Into<String>) -> Self {
        Self { name, status: Status::Skip, detail: detail.into() }
    }

    fn from_result(name: &'static str, r: Result<Check>) -> Self {
        r.unwrap_or_else(|e| Check::new(name, false, e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub n: i64,
    pub ell: u64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Unitary cases, where square sums, the index formula and positivity are expected to hold.
pub fn is_unitary(ctx: &RootOfUnity) -> bool {
    matches!(brauer_case(ctx), BrauerCase::A | BrauerCase::C)
}

/// Runs every check that applies to the context. `tol` scales the numeric thresholds
/// (1e-8 reproduces the documented defaults).
pub fn verify_context(ctx: &RootOfUnity, tol: f64) -> VerifyReport {
    let scale = tol / 1e-8;
    let brancher = Brancher::new();
    let checks = vec![
        check_relations(ctx, None, tol),
        check_unitarity(ctx, tol),
        check_square_sums(ctx, tol),
        Check::from_result("positivity", positivity(ctx)),
        Check::from_result("folding vs direct", folding(&brancher, ctx)),
        Check::from_result("pf consistency and index", graph_checks(&brancher, ctx, scale)),
    ];
    VerifyReport { n: ctx.n(), ell: ctx.ell(), checks }
}

/// Largest tensor power, at most 4, whose matrices fit under [`MAX_DIM`].
pub fn default_factors(ctx: &RootOfUnity) -> usize {
    let dim = ctx.abs_n();
    (2..=4).rev().find(|&f| dim.pow(f as u32) <= MAX_DIM).unwrap_or(2)
}

/// Relation reports at `q = e^{iπ/ℓ}` and at `q = 1`, on `factors` tensor factors.
pub fn relation_reports(ctx: &RootOfUnity, factors: usize) -> Result<[RelationReport; 2]> {
    let quantum = verify_relations(&Representation::from_context(ctx, factors)?)?;
    let classical = verify_relations(&Representation::classical(ctx.abs_n(), factors)?)?;
    Ok([quantum, classical])
}

pub fn check_relations(ctx: &RootOfUnity, factors: Option<usize>, tol: f64) -> Check {
    Check::from_result(RELATIONS, relations(ctx, factors, tolerances::RELATION * tol / 1e-8))
}

pub fn check_unitarity(ctx: &RootOfUnity, tol: f64) -> Check {
    Check::from_result(UNITARITY, unitarity(ctx, tolerances::UNITARITY * tol / 1e-8))
}

pub fn check_square_sums(ctx: &RootOfUnity, tol: f64) -> Check {
    Check::from_result(SQUARE_SUMS, square_sums(ctx, tolerances::SQUARE_SUM * tol / 1e-8))
}

const RELATIONS: &str = "molev relations";
const UNITARITY: &str = "s-matrix unitarity";
const SQUARE_SUMS: &str = "square sums";

fn relations(ctx: &RootOfUnity, factors: Option<usize>, tol: f64) -> Result<Check> {
    if ctx.n() < 0 {
        return Ok(Check::skip(RELATIONS, "tensor-space matrices need N > 0"));
    }
    let factors = factors.unwrap_or_else(|| default_factors(ctx));
    Ok(check_relation_reports(&relation_reports(ctx, factors)?, tol))
}

/// The relation check on reports that are already computed. `tol` is the residual bound itself.
pub fn check_relation_reports(reports: &[RelationReport], tol: f64) -> Check {
    let worst = reports.iter().map(RelationReport::max).fold(0.0, f64::max);
    let factors = reports.first().map_or(0, |r| r.factors);
    Check::new(RELATIONS, worst < tol, format!("n = {factors}, q = e^(iπ/ℓ) and q = 1: max residual {}", sig(worst)))
}

fn setup_for(ctx: &RootOfUnity) -> Option<Setup> {
    match (ctx.n() > 0, ctx.abs_n() % 2) {
        (true, 1) => Some(Setup::SoOdd),
        (true, _) => Some(Setup::OEven),
        (false, 0) => Some(Setup::Sp),
        _ => None,
    }
}

fn unitarity(ctx: &RootOfUnity, tol: f64) -> Result<Check> {
    const NAME: &str = UNITARITY;
    let Some(setup) = setup_for(ctx) else {
        return Ok(Check::skip(NAME, "no root system for odd negative N"));
    };
    let s = s_matrix(&setup.pair(ctx.rank(), ctx.ell())?, setup.sign(), 1e-9)?;
    Ok(Check::new(NAME, s.unitarity_defect < tol, format!("{setup:?}: {0}×{0}, defect {1}", s.dim(), sig(s.unitarity_defect))))
}

fn square_sums(ctx: &RootOfUnity, tol: f64) -> Result<Check> {
    const NAME: &str = SQUARE_SUMS;
    if !is_unitary(ctx) {
        return Ok(Check::skip(NAME, "defined only in the unitary cases"));
    }
    let r = verify_square_sums(ctx, tol)?;
    Ok(Check::new(
        NAME,
        r.passed,
        format!("even {}, odd {}, closed form {}", sig(r.even_sum), sig(r.odd_sum), sig(r.closed_form)),
    ))
}

fn positivity(ctx: &RootOfUnity) -> Result<Check> {
    let r = positivity_report(ctx, tolerances::POSITIVITY)?;
    let expected = is_unitary(ctx);
    let detail = match &r.first_negative {
        None => format!("all {} weights positive", r.checked),
        Some((l, w)) => format!("first non-positive weight at [{l}]: {}", sig(*w)),
    };
    let verdict = if expected { "positivity expected" } else { "a negative weight expected" };
    Ok(Check::new("positivity", r.all_positive == expected, format!("{detail} ({verdict})")))
}

fn folding(brancher: &Brancher, ctx: &RootOfUnity) -> Result<Check> {
    const NAME: &str = "folding vs direct";
    if require_branching_context(ctx).is_err() {
        return Ok(Check::skip(NAME, "no symplectic group for odd negative N"));
    }
    if !is_unitary(ctx) {
        return Ok(Check::skip(NAME, "restriction to the subgroup is defined only in the unitary cases"));
    }
    let mut count = 0;
    for size in 0..=tolerances::BRANCHING_BOXES {
        for lambda in hecke_labels(ctx, size).iter() {
            if let Some((d, f)) = method_mismatch(brancher, ctx, lambda)? {
                return Ok(Check::new(NAME, false, format!("[{lambda}]: direct {:?} vs folded {:?}", d.as_map(), f.as_map())));
            }
            count += 1;
        }
    }
    Ok(Check::new(NAME, true, format!("{count} labels with ≤ {} boxes agree", tolerances::BRANCHING_BOXES)))
}

fn graph_checks(brancher: &Brancher, ctx: &RootOfUnity, scale: f64) -> Result<Check> {
    const NAME: &str = "pf consistency and index";
    if !is_unitary(ctx) {
        return Ok(Check::skip(NAME, "index formula applies only in the unitary cases"));
    }
    let (n_stable, g) = stabilize_with(brancher, ctx, 2, DEFAULT_N_CAP)?;
    let pf = pf_consistency(&g);
    let closed = index_closed_form(ctx)?;
    let diff = (g.index - closed).abs() / closed.abs();
    if !diff.is_finite() {
        return Err(Error::Internal("index comparison produced a non-finite value".into()));
    }
    Ok(Check::new(
        NAME,
        pf < tolerances::PF * scale && diff < tolerances::INDEX * scale,
        format!(
            "n = {n_stable}: index {} vs {} (rel {}), pf residual {}",
            sig(g.index),
            sig(closed),
            sig(diff),
            sig(pf)
        ),
    ))
}
