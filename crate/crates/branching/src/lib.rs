//! Restriction multiplicities `b^λ_μ` from U(N) to O(N) or Sp(|N|), classically and at roots of unity.
//!
//! Labels for N < 0 are the transposed diagrams used throughout the workspace.

pub mod direct;
pub mod folding;
pub mod littlewood;
pub mod points;
pub mod table;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use fusym_core::{Error, Kind, Partition, Result, RootOfUnity};
use fusym_lattice::Sign;

pub use direct::{auxiliary_level, classical_branch, fusion_branch_direct, DirectSolver};
pub use folding::{fold_table, natural_sign, AffineGroupSpec};
pub use littlewood::littlewood_stable;
pub use points::{evaluation_points, EvalPoint};
pub use table::{BranchingTable, Entry, Method, StableFamily, TableContext};

/// Memoises one [`DirectSolver`] per `(N, ℓ, n)`; safe to share across threads.
#[derive(Debug, Default)]
pub struct Brancher {
    solvers: Mutex<HashMap<(i64, u64, usize), Arc<DirectSolver>>>,
}

impl Brancher {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn solver(&self, ctx: &RootOfUnity, n: usize) -> Result<Arc<DirectSolver>> {
        let key = (ctx.n(), ctx.ell(), n);
        if let Some(s) = self.solvers.lock().expect("solver cache").get(&key) {
            return Ok(s.clone());
        }
        let s = Arc::new(DirectSolver::new(ctx, n)?);
        self.solvers.lock().expect("solver cache").entry(key).or_insert(s.clone());
        Ok(s)
    }

    pub fn direct(&self, ctx: &RootOfUnity, lambda: &Partition) -> Result<BranchingTable> {
        fusym_core::labels::require(ctx, Kind::Hecke, lambda)?;
        self.solver(ctx, lambda.size())?.table(lambda)
    }

    pub fn classical(&self, n: i64, lambda: &Partition) -> Result<BranchingTable> {
        direct::classical_with(n, lambda, |ctx| self.solver(ctx, lambda.size()))
    }

    /// Folded multiplicities with an explicit sign, possibly negative (used as a control).
    pub fn folded_signed(
        &self,
        ctx: &RootOfUnity,
        lambda: &Partition,
        sign: Sign,
    ) -> Result<std::collections::BTreeMap<Partition, i64>> {
        fusym_core::labels::require(ctx, Kind::Hecke, lambda)?;
        let classical = self.classical(ctx.n(), lambda)?;
        fold_table(ctx, sign, &classical.as_map())
    }

    pub fn folded(&self, ctx: &RootOfUnity, lambda: &Partition) -> Result<BranchingTable> {
        let values = self.folded_signed(ctx, lambda, natural_sign(ctx))?;
        BranchingTable::from_signed(ctx.into(), lambda.clone(), values, Method::Folded)
    }
}

/// Fusion table by folding the classical table of λ.
pub fn fusion_branch_folded(ctx: &RootOfUnity, lambda: &Partition) -> Result<BranchingTable> {
    Brancher::new().folded(ctx, lambda)
}

/// Compares the two fusion methods for λ; `Ok(None)` when they agree.
pub fn method_mismatch(
    brancher: &Brancher,
    ctx: &RootOfUnity,
    lambda: &Partition,
) -> Result<Option<(BranchingTable, BranchingTable)>> {
    let d = brancher.direct(ctx, lambda)?;
    let f = brancher.folded(ctx, lambda)?;
    Ok(if d.same_entries(&f) { None } else { Some((d, f)) })
}

/// Rejects contexts without a subgroup (odd negative N).
pub fn require_branching_context(ctx: &RootOfUnity) -> Result<()> {
    if ctx.n() < 0 && ctx.abs_n() % 2 == 1 {
        return Err(Error::Domain(format!("no symplectic group for N = {}", ctx.n())));
    }
    Ok(())
}
