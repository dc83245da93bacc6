//! Detecting the level from which the inclusion graphs repeat.

use std::collections::BTreeMap;

use fusym_branching::Brancher;
use fusym_core::{Error, Partition, Result, RootOfUnity};

use crate::graph::{inclusion_graph_with, InclusionGraph};

pub const DEFAULT_N_CAP: usize = 80;

/// Period of the Hecke label sets in n: adding two full columns (or rows) of |N| boxes.
pub fn period(ctx: &RootOfUnity) -> usize {
    2 * ctx.abs_n()
}

/// Levels are compared in steps of lcm(|N|, 2), where a full-column label (a power of det) appears.
pub fn level_step(ctx: &RootOfUnity) -> usize {
    let n = ctx.abs_n();
    if n % 2 == 0 {
        n
    } else {
        2 * n
    }
}

type Signature = (Vec<Partition>, Vec<Partition>, BTreeMap<(Partition, Partition), u64>);

/// The graph with even labels reduced, so that graphs `2|N|` levels apart compare equal.
fn signature(g: &InclusionGraph) -> Result<Signature> {
    let reduced = g.reduced_even_labels()?;
    let odd: Vec<Partition> = g.odd.iter().map(|v| v.label.clone()).collect();
    let edges = g.edges.iter().map(|&(i, j, m)| ((reduced[i].clone(), odd[j].clone()), m)).collect();
    let mut even = reduced;
    even.sort();
    Ok((even, odd, edges))
}

/// Smallest level `n ≥ n_start`, a multiple of [`level_step`], with `graph(n) = graph(n + P) = graph(n + 2P)`,
/// `P = 2|N|`, after stripping full columns.
pub fn stabilize(ctx: &RootOfUnity, n_start: usize, n_cap: usize) -> Result<(usize, InclusionGraph)> {
    stabilize_with(&Brancher::new(), ctx, n_start, n_cap)
}

pub fn stabilize_with(
    brancher: &Brancher,
    ctx: &RootOfUnity,
    n_start: usize,
    n_cap: usize,
) -> Result<(usize, InclusionGraph)> {
    let step = level_step(ctx);
    let p = period(ctx);
    let mut n = n_start.max(2).div_ceil(step) * step;
    let mut cache: BTreeMap<usize, (InclusionGraph, Signature)> = BTreeMap::new();
    let mut fetch = |m: usize| -> Result<Signature> {
        if let Some((_, s)) = cache.get(&m) {
            return Ok(s.clone());
        }
        let g = inclusion_graph_with(brancher, ctx, m)?;
        let s = signature(&g)?;
        cache.insert(m, (g, s.clone()));
        Ok(s)
    };
    let mut last = String::from("no level compared");
    while n + 2 * p <= n_cap {
        let (a, b, c) = (fetch(n)?, fetch(n + p)?, fetch(n + 2 * p)?);
        if a == b && b == c {
            let graph = cache.remove(&n).expect("graph was just built").0;
            return Ok((n, graph));
        }
        last = format!(
            "n = {n}: {} even / {} edges vs {} even / {} edges at n + {p}",
            a.0.len(),
            a.2.len(),
            b.0.len(),
            b.2.len()
        );
        n += step;
    }
    Err(Error::NonStabilization { n_cap, detail: last })
}
