//! Reference Dynkin diagrams for principal-graph comparisons.

use petgraph::graph::UnGraph;

fn path(n: usize) -> Vec<(u32, u32)> {
    (1..n as u32).map(|i| (i - 1, i)).collect()
}

/// A_n: a path on n vertices.
pub fn dynkin_a(n: usize) -> UnGraph<(), u64> {
    assert!(n >= 1, "A_n needs n ≥ 1");
    let mut g = UnGraph::from_edges(path(n).into_iter().map(|(a, b)| (a, b, 1u64)));
    while g.node_count() < n {
        g.add_node(());
    }
    g
}

/// D_n: a path on n − 1 vertices with one extra leaf at the second-to-last vertex.
pub fn dynkin_d(n: usize) -> UnGraph<(), u64> {
    assert!(n >= 4, "D_n needs n ≥ 4");
    let mut edges = path(n - 1);
    edges.push((n as u32 - 3, n as u32 - 1));
    UnGraph::from_edges(edges.into_iter().map(|(a, b)| (a, b, 1u64)))
}

/// Largest adjacency eigenvalue squared, `4cos²(π/h)` for a Dynkin diagram with Coxeter number h.
pub fn norm_squared<N>(g: &UnGraph<N, u64>) -> f64 {
    let n = g.node_count();
    let mut v = vec![1.0; n];
    let mut lambda = 0.0;
    for _ in 0..10_000 {
        let mut w = vec![0.0; n];
        for e in g.edge_indices() {
            let (a, b) = g.edge_endpoints(e).expect("edge");
            let m = *g.edge_weight(e).expect("weight") as f64;
            w[a.index()] += m * v[b.index()];
            w[b.index()] += m * v[a.index()];
        }
        // A + I shifts the spectrum away from −λ so the iteration converges on bipartite graphs.
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi += vi;
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        let next = norm / v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v = w.into_iter().map(|x| x / norm).collect();
        if (next - lambda).abs() < 1e-15 {
            lambda = next;
            break;
        }
        lambda = next;
    }
    (lambda - 1.0) * (lambda - 1.0)
}
