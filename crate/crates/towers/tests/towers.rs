use std::collections::BTreeSet;
use std::f64::consts::PI;

use fusym_core::{partition, Error, Kind, Partition, RootOfUnity};
use fusym_towers::*;
use proptest::prelude::*;

fn ctx(n: i64, ell: u64) -> RootOfUnity {
    RootOfUnity::new(n, ell).unwrap()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1.0)
}

fn stable(n: i64, ell: u64) -> (usize, InclusionGraph) {
    stabilize(&ctx(n, ell), 2, DEFAULT_N_CAP).unwrap()
}

fn unit_graph(g: &InclusionGraph) -> petgraph::graph::UnGraph<(), u64> {
    g.to_petgraph().map(|_, _| (), |_, w| *w)
}

// ---- Bratteli diagrams ----

#[test]
fn bratteli_levels() {
    let b = build_bratteli(&ctx(2, 8), Kind::Brauer, 4).unwrap();
    assert_eq!(b.levels[0], vec![Partition::empty()]);
    assert_eq!(b.levels[2], vec![Partition::empty(), partition![2], partition![1, 1]]);
    assert_eq!(b.path_count(2, &Partition::empty()), Some(1));
    let h = build_bratteli(&ctx(3, 7), Kind::Hecke, 3).unwrap();
    assert_eq!(h.levels[3], Partition::all_of_size(3));
    assert!(matches!(build_bratteli(&ctx(3, 7), Kind::Hecke, 0), Err(Error::Domain(_))));
}

#[test]
fn generic_levels_give_classical_dimensions() {
    // Large ℓ and N: the Brauer algebra has dimension (2n−1)!!, the Hecke algebra n!.
    let b = build_bratteli(&ctx(12, 60), Kind::Brauer, 5).unwrap();
    let h = build_bratteli(&ctx(12, 60), Kind::Hecke, 5).unwrap();
    let double_fact = [1u128, 1, 3, 15, 105, 945];
    let fact = [1u128, 1, 2, 6, 24, 120];
    for n in 0..=5 {
        assert_eq!(b.algebra_dimension(n), double_fact[n], "Brauer n = {n}");
        assert_eq!(h.algebra_dimension(n), fact[n], "Hecke n = {n}");
    }
}

fn count_paths(b: &BratteliDiagram, level: usize, index: usize) -> u128 {
    if level == 0 {
        return 1;
    }
    b.edges[level - 1].iter().filter(|e| e.1 == index).map(|e| count_paths(b, level - 1, e.0)).sum()
}

#[test]
fn path_counts_match_enumeration_at_3_7() {
    let b = build_bratteli(&ctx(3, 7), Kind::Brauer, 10).unwrap();
    for n in 0..=10 {
        for i in 0..b.levels[n].len() {
            assert_eq!(b.path_counts[n][i], count_paths(&b, n, i));
        }
    }
    let dims: Vec<u128> = (0..=10).map(|n| b.algebra_dimension(n)).collect();
    for n in 2..=10 {
        assert!(dims[n] >= dims[n - 2], "{dims:?}");
    }
}

#[test]
fn brauer_edges_add_or_remove_one_box() {
    let b = build_bratteli(&ctx(4, 8), Kind::Brauer, 6).unwrap();
    for (n, step) in b.edges.iter().enumerate() {
        for &(i, j) in step {
            let (mu, lambda) = (&b.levels[n][i], &b.levels[n + 1][j]);
            assert!(lambda.contains(mu) || mu.contains(lambda));
            assert_eq!(lambda.size().abs_diff(mu.size()), 1);
        }
    }
}

// ---- stable graphs ----

#[test]
fn stable_levels_and_shapes() {
    // (N, ℓ) → (n_stable, even, odd, edges)
    let expected = [
        ((2, 8), (6, 4, 3, 6)),
        ((2, 10), (8, 5, 4, 9)),
        ((3, 7), (6, 5, 3, 7)),
        ((3, 9), (12, 10, 4, 18)),
        ((4, 8), (12, 10, 6, 18)),
        ((-4, 8), (12, 10, 6, 18)),
    ];
    for ((n, ell), (ns, e, o, m)) in expected {
        let (got, g) = stable(n, ell);
        assert_eq!((got, g.even.len(), g.odd.len(), g.edges.len()), (ns, e, o, m), "({n},{ell})");
        assert!(g.is_connected());
        assert!(g.edges.iter().all(|e| e.2 >= 1));
    }
}

#[test]
fn stabilisation_needs_room() {
    let err = stabilize(&ctx(4, 8), 2, 20).unwrap_err();
    assert!(matches!(err, Error::NonStabilization { n_cap: 20, .. }));
}

#[test]
fn index_golden_values() {
    let golden = [
        ((2, 8), 2.0 + 2f64.sqrt()),
        ((3, 7), 4.0 * (PI / 14.0).cos().powi(2)),
        ((4, 8), 4.0 + 2.0 * 2f64.sqrt()),
        ((-4, 8), 4.0 + 2.0 * 2f64.sqrt()),
        ((2, 10), 1.0 / (2.0 * (PI / 10.0).sin().powi(2))),
    ];
    for ((n, ell), v) in golden {
        let r = index_report(&ctx(n, ell)).unwrap();
        assert!(close(r.ratio, v, 1e-9), "({n},{ell}) ratio {}", r.ratio);
        assert!(close(r.closed_form, v, 1e-9), "({n},{ell}) closed form {}", r.closed_form);
    }
    for (n, ell) in [(2, 8), (2, 10), (3, 7), (3, 9), (4, 8), (-4, 8), (5, 9)] {
        let r = index_report(&ctx(n, ell)).unwrap();
        assert!(r.relative_difference < 1e-8, "({n},{ell}): {r:?}");
    }
}

#[test]
fn closed_form_matches_displayed_formulas() {
    for ell in [7u64, 9, 11, 13] {
        let l = ell as f64;
        let s = |m: f64| (m * PI / l).sin();
        let n3 = l / (16.0 * s(2.0).powi(2) * s(1.0).powi(2));
        assert!(close(index_closed_form(&ctx(3, ell)).unwrap(), n3, 1e-12));
    }
    for ell in [8u64, 10, 12] {
        let l = ell as f64;
        let s = |m: f64| (m * PI / l).sin();
        let o4 = 2.0 * l / (4.0 * s(3.0).powi(2) * 4.0 * s(2.0).powi(2) * 16.0 * s(1.0).powi(4));
        let sp4 = l / (4.0 * s(2.0).powi(2) * 4.0 * s(1.0).powi(2));
        assert!(close(index_closed_form(&ctx(4, ell)).unwrap(), o4, 1e-12));
        assert!(close(index_closed_form(&ctx(-4, ell)).unwrap(), sp4, 1e-12));
        let n2 = 1.0 / (2.0 * s(1.0).powi(2));
        assert!(close(index_closed_form(&ctx(2, ell)).unwrap(), n2, 1e-12));
    }
}

#[test]
fn pf_consistency_holds_and_detects_perturbation() {
    for (n, ell) in [(2, 8), (2, 10), (3, 7), (3, 9), (4, 8), (-4, 8)] {
        let (_, g) = stable(n, ell);
        assert!(pf_consistency(&g) < 1e-8, "({n},{ell})");
        let mut bad = g.clone();
        bad.edges[0].2 += 1;
        assert!(pf_consistency(&bad) > 1e-3, "({n},{ell}) perturbed");
    }
    let toy = InclusionGraph {
        n: 2,
        ell: 8,
        level: 2,
        even: vec![Vertex { label: Partition::empty(), weight: 1.0 }],
        odd: vec![Vertex { label: Partition::empty(), weight: 0.25 }],
        edges: vec![(0, 0, 1)],
        index: 4.0,
    };
    assert_eq!(pf_consistency(&toy), 0.0);
}

#[test]
fn local_index_values() {
    let c = ctx(2, 8);
    let (_, g) = stable(2, 8);
    let idx = g.index;
    let locals = local_indices(&g);
    let empty = locals.iter().find(|(l, _)| l.is_empty()).unwrap().1;
    assert!(close(empty, idx, 1e-12));
    let one = local_index(&c, &partition![1], idx).unwrap();
    assert!(close(one, (2.0 * (PI / 8.0).cos()).powi(2) * (2.0 + 2f64.sqrt()), 1e-12));
    assert!(close(local_index(&c, &partition![1, 1], idx).unwrap(), idx, 1e-12));
}

// ---- principal graphs ----

#[test]
fn dynkin_references() {
    for n in 4..=9 {
        let h = (2 * n - 2) as f64;
        assert!(close(norm_squared(&dynkin_d(n)), 4.0 * (PI / h).cos().powi(2), 1e-9), "D{n}");
        assert_eq!(dynkin_d(n).edge_count(), n - 1);
    }
    for n in 1..=9 {
        let h = (n + 1) as f64;
        assert!(close(norm_squared(&dynkin_a(n)), 4.0 * (PI / h).cos().powi(2), 1e-9), "A{n}");
    }
}

#[test]
fn n3_l7_is_d8() {
    let (_, g) = stable(3, 7);
    let p = g.principal_graph().unwrap();
    assert!(isomorphic_to(&p, &dynkin_d(8)));
    assert!(!isomorphic_to(&p, &dynkin_a(8)));
}

#[test]
fn n2_graphs() {
    // Computed shapes: a path A_7 at ℓ = 8 (norm² 2 + √2, shared with D_5) and, at ℓ = 10,
    // a graph of norm² 1/(2 sin²(π/10)) > 4, which no Dynkin diagram has.
    let (_, g8) = stable(2, 8);
    let p8 = g8.principal_graph().unwrap();
    assert!(isomorphic_to(&p8, &dynkin_a(7)));
    assert!(!isomorphic_to(&p8, &dynkin_d(5)));
    let (_, g10) = stable(2, 10);
    let p10 = g10.principal_graph().unwrap();
    assert!(norm_squared(&unit_graph(&p10)) > 4.0);
    assert!(!isomorphic_to(&p10, &dynkin_d(6)));
}

#[test]
fn n3_l9_invertibles_and_double_edge() {
    let (_, g) = stable(3, 9);
    let inv: Vec<&Partition> = g.even.iter().filter(|v| close(v.weight, 1.0, 1e-9)).map(|v| &v.label).collect();
    assert_eq!(inv.len(), 3, "{inv:?}");
    let doubles: Vec<_> = g.edges.iter().filter(|e| e.2 == 2).collect();
    assert_eq!(doubles.len(), 1);
    let &&(i, j, _) = doubles.first().unwrap();
    assert_eq!(g.even[i].label, partition![6, 4, 2]);
    assert_eq!(g.odd[j].label, partition![2]);
    assert!(g.edges.iter().all(|e| e.2 <= 2));
}

fn neighbourhood(g: &InclusionGraph, mu: &Partition) -> BTreeSet<Partition> {
    let reduced = g.reduced_even_labels().unwrap();
    g.even_neighbours(g.odd_index(mu).unwrap()).into_iter().map(|(i, _)| reduced[i].clone()).collect()
}

#[test]
fn o4_at_level_12() {
    let (n, g) = stable(4, 8);
    assert_eq!(n, 12);
    let inv: BTreeSet<Partition> =
        g.even.iter().filter(|v| close(v.weight.abs(), 1.0, 1e-9)).map(|v| v.label.clone()).collect();
    let expect: BTreeSet<Partition> =
        [partition![3, 3, 3, 3], partition![4, 4, 4], partition![5, 5, 1, 1], partition![6, 2, 2, 2]].into();
    assert_eq!(inv, expect);
    // The ℤ/4-orbit {[2,1²], [3,1], [4,3,1], [3,3,2]} is the neighbourhood of [1,1]; [2] sees [2,2] instead.
    let orbit: BTreeSet<Partition> =
        [partition![2, 1, 1], partition![3, 1], partition![4, 3, 1], partition![3, 3, 2]].into();
    assert_eq!(neighbourhood(&g, &partition![1, 1]), orbit);
    let two: BTreeSet<Partition> = [partition![3, 1], partition![3, 3, 2], partition![2, 2]].into();
    assert_eq!(neighbourhood(&g, &partition![2]), two);
}

#[test]
fn o4_and_sp4_graphs_are_isomorphic() {
    let (_, a) = stable(4, 8);
    let (_, b) = stable(-4, 8);
    assert!(bipartite_isomorphic(&a, &b));
    let (_, c) = stable(3, 9);
    assert!(!bipartite_isomorphic(&a, &c));
}

// ---- exports ----

#[test]
fn json_round_trip_and_dot() {
    let (ns, g) = stable(3, 7);
    let text = g.to_json(Some(ns));
    let doc: JsonGraph = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.n_stable, Some(6));
    assert_eq!(doc.even.len(), 5);
    assert_eq!(doc.edges.len(), 7);
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap(), text);
    let dot = g.to_dot();
    assert_eq!(dot.matches(" -- ").count() as u64, g.edges.iter().map(|e| e.2).sum::<u64>());
    assert_eq!(dot.matches("shape=box").count(), 5);
    assert_eq!(dot.matches("shape=circle").count(), 3);
}

// ---- asymptotics ----

#[test]
fn dim_p_values() {
    assert_eq!(dim_p(&ctx(3, 7)).unwrap(), 5);
    assert_eq!(dim_p(&ctx(-4, 8)).unwrap(), 5);
    assert_eq!(dim_p(&ctx(2, 8)).unwrap(), 2);
    for n in [2i64, 3, 4, 5, 6, 7] {
        let expect = (n * (n + 1) / 2 - 1) as usize;
        assert_eq!(dim_p(&ctx(n, 20)).unwrap(), expect, "N = {n}");
    }
    for n in [-2i64, -4, -6] {
        let m = n.unsigned_abs() as usize;
        assert_eq!(dim_p(&ctx(n, 20)).unwrap(), m * (m - 1) / 2 - 1, "N = {n}");
    }
}

#[test]
fn asymptotics_converge() {
    let ells: Vec<u64> = (7..=31).step_by(2).collect();
    let probe = asymptotics_probe(3, &ells).unwrap();
    assert_eq!(probe.dim_p, 5);
    assert!(probe.converges(), "{probe:?}");
    let last = probe.rows.last().unwrap().scaled;
    assert!(close(last, probe.limit, 0.1));
    let ells: Vec<u64> = (8..=32).step_by(2).collect();
    assert!(asymptotics_probe(-4, &ells).unwrap().converges());
    assert!(asymptotics_probe(3, &[9, 7]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn isomorphism_ignores_vertex_order(
        pick in 0usize..3,
        seed_e in Just((0usize..10).collect::<Vec<_>>()).prop_shuffle(),
        seed_o in Just((0usize..6).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let (n, ell) = [(4, 8), (-4, 8), (3, 9)][pick];
        let (_, g) = stable(n, ell);
        let pe: Vec<usize> = seed_e.into_iter().filter(|&i| i < g.even.len()).collect();
        let po: Vec<usize> = seed_o.into_iter().filter(|&j| j < g.odd.len()).collect();
        let mut h = g.clone();
        h.even = pe.iter().map(|&i| g.even[i].clone()).collect();
        h.odd = po.iter().map(|&j| g.odd[j].clone()).collect();
        let inv_e: Vec<usize> = (0..pe.len()).map(|i| pe.iter().position(|&x| x == i).unwrap()).collect();
        let inv_o: Vec<usize> = (0..po.len()).map(|j| po.iter().position(|&x| x == j).unwrap()).collect();
        h.edges = g.edges.iter().map(|&(i, j, m)| (inv_e[i], inv_o[j], m)).collect();
        prop_assert!(bipartite_isomorphic(&g, &h));
        prop_assert!(pf_consistency(&h) < 1e-8);
    }

    #[test]
    fn path_counts_obey_recursion(n in prop::sample::select(vec![2i64, 3, 4, -4, 5]), gap in 2u64..6) {
        let c = ctx(n, n.unsigned_abs() + gap);
        for kind in [Kind::Hecke, Kind::Brauer] {
            let b = build_bratteli(&c, kind, 6).unwrap();
            for level in 1..=6 {
                for (j, &count) in b.path_counts[level].iter().enumerate() {
                    let sum: u128 = b.edges[level - 1].iter().filter(|e| e.1 == j).map(|e| b.path_counts[level - 1][e.0]).sum();
                    prop_assert_eq!(count, sum);
                }
            }
        }
    }
}
