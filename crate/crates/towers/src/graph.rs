//! Inclusion graphs `H̄_n ⊂ B̄r_n` with their Perron–Frobenius weight vectors.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use fusym_branching::{require_branching_context, Brancher};
use fusym_core::labels::{brauer_labels, hecke_labels, hecke_reduce};
use fusym_core::qarith::{brauer_product, format_sig, hecke_product};
use fusym_core::{Error, Partition, Result, RootOfUnity};
use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::{NodeIndex, UnGraph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vertex {
    pub label: Partition,
    /// `d̃_λ` on the even side, `d_μ` on the odd side.
    pub weight: f64,
}

/// Bipartite graph with `edges[(i, j)] = b^λ_μ` for even vertex i and odd vertex j.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InclusionGraph {
    pub n: i64,
    pub ell: u64,
    pub level: usize,
    pub even: Vec<Vertex>,
    pub odd: Vec<Vertex>,
    pub edges: Vec<(usize, usize, u64)>,
    /// `‖a‖² / ‖b‖²` over the whole level.
    pub index: f64,
}

/// Inclusion graph at an even level `n ≥ 2`.
pub fn inclusion_graph(ctx: &RootOfUnity, n: usize) -> Result<InclusionGraph> {
    inclusion_graph_with(&Brancher::new(), ctx, n)
}

/// As [`inclusion_graph`], reusing the solvers cached in `brancher`.
pub fn inclusion_graph_with(brancher: &Brancher, ctx: &RootOfUnity, n: usize) -> Result<InclusionGraph> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Domain(format!("inclusion graphs need an even level n ≥ 2, got {n}")));
    }
    require_branching_context(ctx)?;
    let even_labels = hecke_labels(ctx, n).members;
    let odd_labels = brauer_labels(ctx, n).members;
    let solver = brancher.solver(ctx, n)?;
    let rows = even_labels.par_iter().map(|lambda| solver.solve(lambda)).collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::new();
    for (i, row) in rows.into_iter().enumerate() {
        for (mu, m) in row {
            let j = odd_labels
                .binary_search(&mu)
                .map_err(|_| Error::Internal(format!("branching target {mu} is not a level-{n} label")))?;
            let m = u64::try_from(m).map_err(|_| Error::Solve {
                label: even_labels[i].clone(),
                detail: format!("negative multiplicity {m} at {mu}"),
            })?;
            edges.push((i, j, m));
        }
    }
    edges.sort_unstable();
    let even = weigh(ctx, even_labels, hecke_product)?;
    let odd = weigh(ctx, odd_labels, brauer_product)?;
    let index = square_norm(&even) / square_norm(&odd);
    Ok(InclusionGraph { n: ctx.n(), ell: ctx.ell(), level: n, even, odd, edges, index })
}

fn weigh(
    ctx: &RootOfUnity,
    labels: Vec<Partition>,
    f: fn(&RootOfUnity, &Partition) -> Result<f64>,
) -> Result<Vec<Vertex>> {
    labels.into_iter().map(|label| Ok(Vertex { weight: f(ctx, &label)?, label })).collect()
}

fn square_norm(v: &[Vertex]) -> f64 {
    v.iter().map(|x| x.weight * x.weight).sum()
}

impl InclusionGraph {
    pub fn context(&self) -> Result<RootOfUnity> {
        RootOfUnity::new(self.n, self.ell)
    }

    pub fn even_index(&self, label: &Partition) -> Option<usize> {
        self.even.iter().position(|v| &v.label == label)
    }

    pub fn odd_index(&self, label: &Partition) -> Option<usize> {
        self.odd.iter().position(|v| &v.label == label)
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u64 {
        self.edges.iter().find(|e| e.0 == i && e.1 == j).map_or(0, |e| e.2)
    }

    /// Even neighbours of odd vertex `j`, with multiplicities.
    pub fn even_neighbours(&self, j: usize) -> Vec<(usize, u64)> {
        self.edges.iter().filter(|e| e.1 == j).map(|e| (e.0, e.2)).collect()
    }

    pub fn odd_neighbours(&self, i: usize) -> Vec<(usize, u64)> {
        self.edges.iter().filter(|e| e.0 == i).map(|e| (e.1, e.2)).collect()
    }

    /// Even labels with full columns (or rows, for N < 0) removed.
    pub fn reduced_even_labels(&self) -> Result<Vec<Partition>> {
        let ctx = self.context()?;
        Ok(self.even.iter().map(|v| hecke_reduce(&ctx, &v.label)).collect())
    }

    /// The connected component of the odd vertex ∅, reindexed; the index is kept.
    pub fn principal_graph(&self) -> Result<InclusionGraph> {
        let root = self
            .odd_index(&Partition::empty())
            .ok_or_else(|| Error::Internal("the odd side has no ∅".into()))?;
        let (evens, odds) = self.component(Side::Odd, root);
        Ok(self.restrict(&evens, &odds))
    }

    /// Vertices reachable from a starting vertex, as sorted even and odd index sets.
    pub fn component(&self, side: Side, start: usize) -> (Vec<usize>, Vec<usize>) {
        let mut seen_even = BTreeSet::new();
        let mut seen_odd = BTreeSet::new();
        let mut queue = VecDeque::from([(side, start)]);
        match side {
            Side::Even => seen_even.insert(start),
            Side::Odd => seen_odd.insert(start),
        };
        while let Some((s, v)) = queue.pop_front() {
            for &(i, j, _) in &self.edges {
                match s {
                    Side::Even if i == v && seen_odd.insert(j) => queue.push_back((Side::Odd, j)),
                    Side::Odd if j == v && seen_even.insert(i) => queue.push_back((Side::Even, i)),
                    _ => {}
                }
            }
        }
        (seen_even.into_iter().collect(), seen_odd.into_iter().collect())
    }

    pub fn is_connected(&self) -> bool {
        if self.odd.is_empty() {
            return self.even.len() <= 1;
        }
        let (e, o) = self.component(Side::Odd, 0);
        e.len() == self.even.len() && o.len() == self.odd.len()
    }

    fn restrict(&self, evens: &[usize], odds: &[usize]) -> InclusionGraph {
        let even_pos: BTreeMap<usize, usize> = evens.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        let odd_pos: BTreeMap<usize, usize> = odds.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(i, j, m)| Some((*even_pos.get(&i)?, *odd_pos.get(&j)?, m)))
            .collect();
        InclusionGraph {
            even: evens.iter().map(|&i| self.even[i].clone()).collect(),
            odd: odds.iter().map(|&j| self.odd[j].clone()).collect(),
            edges,
            ..self.clone()
        }
    }

    /// Undirected multigraph view: node weights are sides, edge weights multiplicities.
    pub fn to_petgraph(&self) -> UnGraph<Side, u64> {
        let mut g = UnGraph::with_capacity(self.even.len() + self.odd.len(), self.edges.len());
        for _ in &self.even {
            g.add_node(Side::Even);
        }
        for _ in &self.odd {
            g.add_node(Side::Odd);
        }
        let offset = self.even.len();
        for &(i, j, m) in &self.edges {
            g.add_edge(NodeIndex::new(i), NodeIndex::new(offset + j), m);
        }
        g
    }

    /// Perron–Frobenius residual `max_μ |Σ_λ g_{λμ} a_λ − index·b_μ| / |index·b_μ|`.
    pub fn pf_residual(&self) -> f64 {
        pf_consistency(self)
    }

    /// `d_μ² · index` for every odd vertex.
    pub fn local_indices(&self) -> Vec<(Partition, f64)> {
        local_indices(self)
    }

    pub fn to_json(&self, n_stable: Option<usize>) -> String {
        let doc = JsonGraph {
            even: self.even.iter().map(|v| JsonEven { label: v.label.clone(), dtilde: v.weight }).collect(),
            odd: self
                .odd
                .iter()
                .map(|v| JsonOdd { label: v.label.clone(), d: v.weight, local_index: v.weight * v.weight * self.index })
                .collect(),
            edges: self.edges.iter().map(|&(i, j, m)| [i as u64, j as u64, m]).collect(),
            index: self.index,
            n_stable,
        };
        serde_json::to_string_pretty(&doc).expect("graph documents always serialise")
    }

    /// Graphviz text: even vertices as boxes, odd as circles, one line per unit of multiplicity.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph inclusion_{}_{} {{", self.n.to_string().replace('-', "m"), self.ell);
        for (i, v) in self.even.iter().enumerate() {
            let _ = writeln!(s, "  e{i} [shape=box, label=\"[{}]\\nd̃={}\"];", v.label, format_sig(v.weight, 9));
        }
        for (j, v) in self.odd.iter().enumerate() {
            let _ = writeln!(s, "  o{j} [shape=circle, label=\"[{}]\\nd={}\"];", v.label, format_sig(v.weight, 9));
        }
        for &(i, j, m) in &self.edges {
            for _ in 0..m {
                let _ = writeln!(s, "  e{i} -- o{j};");
            }
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonEven {
    pub label: Partition,
    pub dtilde: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonOdd {
    pub label: Partition,
    pub d: f64,
    pub local_index: f64,
}

/// The documented JSON schema of an exported graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub even: Vec<JsonEven>,
    pub odd: Vec<JsonOdd>,
    pub edges: Vec<[u64; 3]>,
    pub index: f64,
    pub n_stable: Option<usize>,
}

pub fn pf_consistency(graph: &InclusionGraph) -> f64 {
    let mut worst: f64 = 0.0;
    for (j, v) in graph.odd.iter().enumerate() {
        let lhs: f64 = graph.even_neighbours(j).iter().map(|&(i, m)| m as f64 * graph.even[i].weight).sum();
        let rhs = graph.index * v.weight;
        worst = worst.max((lhs - rhs).abs() / rhs.abs());
    }
    worst
}

/// `[M_μ : N] = d_μ² [M : N]` for any μ ∈ Λ(N, ℓ).
pub fn local_index(ctx: &RootOfUnity, mu: &Partition, index: f64) -> Result<f64> {
    let d = fusym_core::qarith::brauer_weight(ctx, mu)?;
    Ok(d * d * index)
}

pub fn local_indices(graph: &InclusionGraph) -> Vec<(Partition, f64)> {
    graph.odd.iter().map(|v| (v.label.clone(), v.weight * v.weight * graph.index)).collect()
}

/// Isomorphism of bipartite multigraphs preserving sides and multiplicities.
pub fn bipartite_isomorphic(a: &InclusionGraph, b: &InclusionGraph) -> bool {
    is_isomorphic_matching(&a.to_petgraph(), &b.to_petgraph(), |x, y| x == y, |x, y| x == y)
}

/// Isomorphism with an unlabelled multigraph (edge weight = multiplicity).
pub fn isomorphic_to<N>(graph: &InclusionGraph, reference: &UnGraph<N, u64>) -> bool {
    is_isomorphic_matching(&graph.to_petgraph(), reference, |_, _| true, |x, y| x == y)
}
