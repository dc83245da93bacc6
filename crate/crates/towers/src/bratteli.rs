//! Bratteli diagrams of the Hecke and Brauer towers.

use fusym_core::labels::{brauer_labels, hecke_labels};
use fusym_core::{Error, Kind, Partition, Result, RootOfUnity};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BratteliDiagram {
    pub context: RootOfUnity,
    pub kind: Kind,
    /// `levels[n]` lists the simple modules at level n in canonical order.
    pub levels: Vec<Vec<Partition>>,
    /// `edges[n]` joins level n to level n + 1 as `(index at n, index at n + 1)`.
    pub edges: Vec<Vec<(usize, usize)>>,
    /// Number of paths from ∅, i.e. the dimension of each simple module.
    pub path_counts: Vec<Vec<u128>>,
}

impl BratteliDiagram {
    pub fn n_max(&self) -> usize {
        self.levels.len() - 1
    }

    /// `Σ_λ (paths to λ)²`, the dimension of the level-n algebra.
    pub fn algebra_dimension(&self, n: usize) -> u128 {
        self.path_counts[n].iter().map(|p| p * p).sum()
    }

    pub fn path_count(&self, n: usize, lambda: &Partition) -> Option<u128> {
        let i = self.levels.get(n)?.binary_search(lambda).ok()?;
        Some(self.path_counts[n][i])
    }
}

fn level(ctx: &RootOfUnity, kind: Kind, n: usize) -> Vec<Partition> {
    match kind {
        Kind::Hecke => hecke_labels(ctx, n).members,
        Kind::Brauer => brauer_labels(ctx, n).members,
    }
}

/// Levels `0..=n_max`. Hecke edges add a box; Brauer edges add or remove one.
pub fn build_bratteli(ctx: &RootOfUnity, kind: Kind, n_max: usize) -> Result<BratteliDiagram> {
    if n_max == 0 {
        return Err(Error::Domain("a Bratteli diagram needs n_max ≥ 1".into()));
    }
    let levels: Vec<Vec<Partition>> = (0..=n_max).map(|n| level(ctx, kind, n)).collect();
    let mut edges = Vec::with_capacity(n_max);
    let mut path_counts = vec![vec![1u128; levels[0].len()]];
    for n in 0..n_max {
        let (lower, upper) = (&levels[n], &levels[n + 1]);
        let mut step = Vec::new();
        let mut counts = vec![0u128; upper.len()];
        for (i, mu) in lower.iter().enumerate() {
            let mut targets = mu.add_box();
            if kind == Kind::Brauer {
                targets.extend(mu.remove_box());
            }
            for lambda in targets {
                if let Ok(j) = upper.binary_search(&lambda) {
                    step.push((i, j));
                    counts[j] += path_counts[n][i];
                }
            }
        }
        step.sort_unstable();
        edges.push(step);
        path_counts.push(counts);
    }
    Ok(BratteliDiagram { context: *ctx, kind, levels, edges, path_counts })
}
