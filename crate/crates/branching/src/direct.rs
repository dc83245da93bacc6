//! Restriction multiplicities from the linear system `χ^U_λ(g) = Σ_μ b_μ χ_μ(g)`.

use std::collections::BTreeMap;

use fusym_core::labels::brauer_labels;
use fusym_core::{Error, Partition, Result, RootOfUnity};
use nalgebra::{DMatrix, DVector, SVD};

use crate::points::{alcove_points, EvalPoint};
use crate::table::{BranchingTable, Method, TableContext};

pub const RESIDUAL_TOL: f64 = 1e-7;
pub const INTEGRALITY_TOL: f64 = 1e-6;
/// Smallest accepted ratio of extreme singular values.
pub const RANK_TOL: f64 = 1e-9;

/// The character matrix for one `(N, ℓ, n)`, factored once and reused for every λ with n boxes.
#[derive(Debug)]
pub struct DirectSolver {
    ctx: RootOfUnity,
    box_count: usize,
    unknowns: Vec<Partition>,
    points: Vec<EvalPoint>,
    svd: SVD<f64, nalgebra::Dyn, nalgebra::Dyn>,
    matrix: DMatrix<f64>,
}

impl DirectSolver {
    /// Uses every alcove point when there are few; otherwise the best-conditioned ones
    /// (largest eigenvalue Vandermonde), enlarged until the matrix has full column rank.
    pub fn new(ctx: &RootOfUnity, box_count: usize) -> Result<Self> {
        let unknowns = brauer_labels(ctx, box_count).members;
        let all = by_conditioning(alcove_points(ctx));
        let mut target = 6 * unknowns.len() + 32;
        loop {
            let points = all[..target.min(all.len())].to_vec();
            let matrix = character_matrix(ctx, &points, &unknowns)?;
            let svd = matrix.clone().svd(true, true);
            let sv = &svd.singular_values;
            let (max, min) = (sv.max(), sv.min());
            let full_rank = unknowns.is_empty() || (points.len() >= unknowns.len() && min > RANK_TOL * max);
            if full_rank {
                return Ok(Self { ctx: *ctx, box_count, unknowns, points, svd, matrix });
            }
            if points.len() == all.len() && all.len() < unknowns.len() {
                return Err(Error::Config(format!(
                    "({}, {}) has {} alcove points for {} labels with {box_count} boxes",
                    ctx.n(),
                    ctx.ell(),
                    all.len(),
                    unknowns.len()
                )));
            }
            if points.len() == all.len() {
                return Err(Error::Config(format!(
                    "character matrix for ({}, {}) at n = {box_count} has rank deficit: σ_min/σ_max = {:e}",
                    ctx.n(),
                    ctx.ell(),
                    if max > 0.0 { min / max } else { 0.0 }
                )));
            }
            target *= 2;
        }
    }

    pub fn context(&self) -> &RootOfUnity {
        &self.ctx
    }

    pub fn box_count(&self) -> usize {
        self.box_count
    }

    pub fn unknowns(&self) -> &[Partition] {
        &self.unknowns
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// Integer multiplicities for `λ`, with residual and integrality checks.
    pub fn solve(&self, lambda: &Partition) -> Result<BTreeMap<Partition, i64>> {
        if lambda.size() != self.box_count {
            return Err(Error::Domain(format!("{lambda} does not have {} boxes", self.box_count)));
        }
        let rhs = DVector::from_iterator(
            self.points.len(),
            self.points.iter().map(|p| p.unitary_character(&self.ctx, lambda)).collect::<Result<Vec<_>>>()?,
        );
        if self.unknowns.is_empty() {
            return Ok(BTreeMap::new());
        }
        let sol = self
            .svd
            .solve(&rhs, 0.0)
            .map_err(|e| Error::Solve { label: lambda.clone(), detail: e.to_string() })?;
        let residual = (&self.matrix * &sol - &rhs).amax();
        if residual > RESIDUAL_TOL {
            return Err(Error::Solve { label: lambda.clone(), detail: format!("residual {residual:e}") });
        }
        let mut out = BTreeMap::new();
        for (mu, v) in self.unknowns.iter().zip(sol.iter()) {
            let r = v.round();
            if (v - r).abs() > INTEGRALITY_TOL {
                return Err(Error::Solve { label: lambda.clone(), detail: format!("non-integral {v} at {mu}") });
            }
            if r != 0.0 {
                out.insert(mu.clone(), r as i64);
            }
        }
        Ok(out)
    }

    pub fn table(&self, lambda: &Partition) -> Result<BranchingTable> {
        BranchingTable::from_signed((&self.ctx).into(), lambda.clone(), self.solve(lambda)?, Method::DirectSolve)
    }
}

/// Sorts points by `log |∏_{i<j} (z_i − z_j)|`, largest first. Clustered eigenvalues make
/// both alternants tiny and their ratio inaccurate.
fn by_conditioning(points: Vec<EvalPoint>) -> Vec<EvalPoint> {
    let mut keyed: Vec<(f64, EvalPoint)> = points
        .into_iter()
        .map(|p| {
            let z = &p.eigenvalues;
            let mut log = 0.0;
            for i in 0..z.len() {
                for j in i + 1..z.len() {
                    log += (z[i] - z[j]).norm().ln();
                }
            }
            (log, p)
        })
        .collect();
    keyed.sort_by(|a, b| b.0.total_cmp(&a.0));
    keyed.into_iter().map(|(_, p)| p).collect()
}

fn character_matrix(ctx: &RootOfUnity, points: &[EvalPoint], unknowns: &[Partition]) -> Result<DMatrix<f64>> {
    let mut m = DMatrix::zeros(points.len(), unknowns.len());
    for (i, p) in points.iter().enumerate() {
        for (j, mu) in unknowns.iter().enumerate() {
            m[(i, j)] = p.subgroup_character(ctx, mu)?;
        }
    }
    Ok(m)
}

/// `b^λ_μ(N, ℓ)` by the character solve; λ must lie in Λ̃(N, ℓ).
pub fn fusion_branch_direct(ctx: &RootOfUnity, lambda: &Partition) -> Result<BranchingTable> {
    fusym_core::labels::require(ctx, fusym_core::Kind::Hecke, lambda)?;
    DirectSolver::new(ctx, lambda.size())?.table(lambda)
}

/// Level used for classical tables: `2(|λ| + |N| + 1)`, made ≡ N mod 2 for N > 0.
pub fn auxiliary_level(n: i64, boxes: usize) -> u64 {
    let mut ell = 2 * (boxes as u64 + n.unsigned_abs() + 1);
    if n > 0 && (ell as i64 - n) % 2 != 0 {
        ell += 1;
    }
    ell
}

/// True iff the U(|N|) module of λ is nonzero (at most N rows, or at most |N| columns for N < 0).
pub fn has_unitary_module(n: i64, lambda: &Partition) -> bool {
    if n > 0 {
        lambda.num_rows() <= n as usize
    } else {
        lambda.row(1) <= n.unsigned_abs() as usize
    }
}

/// The finite-N classical table, solved at [`auxiliary_level`] where no folding happens.
pub fn classical_branch(n: i64, lambda: &Partition) -> Result<BranchingTable> {
    classical_with(n, lambda, |ctx| DirectSolver::new(ctx, lambda.size()).map(std::sync::Arc::new))
}

pub(crate) fn classical_with(
    n: i64,
    lambda: &Partition,
    solver: impl FnOnce(&RootOfUnity) -> Result<std::sync::Arc<DirectSolver>>,
) -> Result<BranchingTable> {
    let context = TableContext::Classical { n };
    if !has_unitary_module(n, lambda) {
        return BranchingTable::from_signed(context, lambda.clone(), BTreeMap::new(), Method::DirectSolve);
    }
    let ctx = RootOfUnity::new(n, auxiliary_level(n, lambda.size()))?;
    let values = solver(&ctx)?.solve(lambda)?;
    BranchingTable::from_signed(context, lambda.clone(), values, Method::DirectSolve)
}
