use std::collections::BTreeSet;
use std::fmt::Write as _;

use fusym::branching::{require_branching_context, Brancher, BranchingTable};
use fusym::labels::{brauer_labels, hecke_labels};
use fusym::qarith::WeightTable;
use fusym::towers::{
    build_bratteli, inclusion_graph, index_closed_form, local_indices, stabilize, InclusionGraph,
};
use fusym::verify::{
    check_relation_reports, check_relations, check_square_sums, check_unitarity, default_factors, relation_reports, verify_context, Check,
    Status, VerifyReport,
};
use fusym::{Kind, LabelSet, Partition, RootOfUnity};
use serde::Serialize;

use crate::output::{csv, json, sig, table};
use crate::{Command, Failure, Format, MethodArg, Outcome, RunConfig, Target};

const TABULAR: &[Format] = &[Format::Text, Format::Json, Format::Csv];
const REPORT: &[Format] = &[Format::Text, Format::Json];

pub fn execute(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Labels { ctx, n, kind, format } => {
            labels(&RunConfig::new(ctx, *format, TABULAR, 1e-8)?, *n, (*kind).into()).map(Outcome::ok)
        }
        Command::Weights { ctx, n, kind, format } => {
            weights(&RunConfig::new(ctx, *format, TABULAR, 1e-8)?, *n, (*kind).into()).map(Outcome::ok)
        }
        Command::Branch { ctx, lambda, method, format } => {
            branch(&RunConfig::new(ctx, *format, TABULAR, 1e-8)?, lambda, *method)
        }
        Command::Graph { ctx, n, n_cap, format } => {
            let allowed = [Format::Text, Format::Json, Format::Dot];
            graph(&RunConfig::new(ctx, *format, &allowed, 1e-8)?, *n, *n_cap).map(Outcome::ok)
        }
        Command::Index { ctx, n_cap, format } => index(&RunConfig::new(ctx, *format, REPORT, 1e-8)?, *n_cap),
        Command::Bratteli { ctx, n_max, kind, format } => {
            bratteli(&RunConfig::new(ctx, *format, TABULAR, 1e-8)?, *n_max, (*kind).into()).map(Outcome::ok)
        }
        Command::Verify { target, ctx, n, tol, format } => {
            verify(&RunConfig::new(ctx, *format, REPORT, *tol)?, *target, *n)
        }
    }
}

fn label_set(ctx: &RootOfUnity, n: usize, kind: Kind) -> LabelSet {
    match kind {
        Kind::Hecke => hecke_labels(ctx, n),
        Kind::Brauer => brauer_labels(ctx, n),
    }
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Hecke => "hecke",
        Kind::Brauer => "brauer",
    }
}

fn bracket(p: &Partition) -> String {
    format!("[{p}]")
}

#[derive(Serialize)]
struct LabelRow {
    label: Partition,
    boundary: bool,
}

#[derive(Serialize)]
struct LabelsDoc {
    #[serde(rename = "N")]
    n_param: i64,
    ell: u64,
    kind: &'static str,
    n: usize,
    labels: Vec<LabelRow>,
}

fn labels(cfg: &RunConfig, n: usize, kind: Kind) -> Result<String, Failure> {
    let ctx = cfg.context;
    let set = label_set(&ctx, n, kind);
    let mut rows: Vec<LabelRow> = set.members.iter().map(|l| LabelRow { label: l.clone(), boundary: false }).collect();
    rows.extend(set.boundary.iter().map(|l| LabelRow { label: l.clone(), boundary: true }));
    rows.sort_by(|a, b| a.label.cmp(&b.label));
    let cells: Vec<Vec<String>> = rows.iter().map(|r| vec![r.label.to_string(), r.boundary.to_string()]).collect();
    match cfg.format {
        Format::Json => {
            json(&LabelsDoc { n_param: ctx.n(), ell: ctx.ell(), kind: kind_name(kind), n, labels: rows })
        }
        Format::Csv => csv(&["label", "boundary"], &cells),
        _ => {
            let text: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![bracket(&r.label), if r.boundary { "boundary".into() } else { String::new() }])
                .collect();
            Ok(format!(
                "{} labels with n = {n} for N = {}, ell = {}\n{}",
                kind_name(kind),
                ctx.n(),
                ctx.ell(),
                table(&["label", ""], &text)
            ))
        }
    }
}

#[derive(Serialize)]
struct WeightRow {
    label: Partition,
    kind: &'static str,
    value: f64,
}

fn weights(cfg: &RunConfig, n: usize, kind: Kind) -> Result<String, Failure> {
    let ctx = cfg.context;
    let table_ = WeightTable::for_labels(&label_set(&ctx, n, kind))?;
    let rows: Vec<WeightRow> =
        table_.entries.iter().map(|(l, v)| WeightRow { label: l.clone(), kind: kind_name(kind), value: *v }).collect();
    match cfg.format {
        Format::Json => json(&rows),
        Format::Csv => {
            let cells: Vec<Vec<String>> =
                rows.iter().map(|r| vec![r.label.to_string(), r.kind.into(), sig(r.value)]).collect();
            csv(&["label", "kind", "value"], &cells)
        }
        _ => {
            let name = if kind == Kind::Hecke { "d̃" } else { "d" };
            let cells: Vec<Vec<String>> = rows.iter().map(|r| vec![bracket(&r.label), sig(r.value)]).collect();
            Ok(format!(
                "{} weights with n = {n} for N = {}, ell = {}\n{}",
                kind_name(kind),
                ctx.n(),
                ctx.ell(),
                table(&["label", name], &cells)
            ))
        }
    }
}

#[derive(Serialize)]
struct BranchDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    direct: Option<BranchingTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    folded: Option<BranchingTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn branch(cfg: &RunConfig, lambda: &str, method: MethodArg) -> Result<Outcome, Failure> {
    let ctx = cfg.context;
    require_branching_context(&ctx)?;
    let lambda: Partition = lambda.parse()?;
    let brancher = Brancher::new();
    let direct = match method {
        MethodArg::Direct | MethodArg::Both => Some(brancher.direct(&ctx, &lambda)?),
        MethodArg::Folded => None,
    };
    let folded = match method {
        MethodArg::Folded | MethodArg::Both => Some(brancher.folded(&ctx, &lambda)?),
        MethodArg::Direct => None,
    };
    let agree = match (&direct, &folded) {
        (Some(d), Some(f)) => Some(d.same_entries(f)),
        _ => None,
    };
    let failure = (agree == Some(false)).then(|| format!("folding vs direct: tables for [{lambda}] differ"));
    let tables: Vec<(&str, &BranchingTable)> =
        [("direct", direct.as_ref()), ("folded", folded.as_ref())].into_iter().filter_map(|(n, t)| Some((n, t?))).collect();
    let targets: BTreeSet<Partition> = tables.iter().flat_map(|(_, t)| t.entries.iter().map(|e| e.label.clone())).collect();
    let cells = |label: fn(&Partition) -> String| -> Vec<Vec<String>> {
        targets
            .iter()
            .map(|mu| std::iter::once(label(mu)).chain(tables.iter().map(|(_, t)| t.get(mu).to_string())).collect())
            .collect()
    };
    let header: Vec<&str> = std::iter::once("label").chain(tables.iter().map(|(n, _)| *n)).collect();
    let stdout = match cfg.format {
        Format::Json => json(&BranchDoc { direct, folded, agree })?,
        Format::Csv => csv(&header, &cells(Partition::to_string))?,
        _ => format!("[{lambda}] at N = {}, ell = {}\n{}", ctx.n(), ctx.ell(), table(&header, &cells(bracket))),
    };
    Ok(Outcome { stdout, failure })
}

fn graph(cfg: &RunConfig, level: Option<usize>, n_cap: usize) -> Result<String, Failure> {
    let ctx = cfg.context;
    let (g, n_stable) = match level {
        Some(n) => (inclusion_graph(&ctx, n)?, None),
        None => {
            let (n, g) = stabilize(&ctx, 2, n_cap)?;
            (g.principal_graph()?, Some(n))
        }
    };
    match cfg.format {
        Format::Dot => Ok(g.to_dot()),
        Format::Json => {
            let doc: serde_json::Value =
                serde_json::from_str(&g.to_json(n_stable)).map_err(|e| Failure::Compute(e.to_string()))?;
            json(&doc)
        }
        _ => Ok(graph_text(&ctx, &g, n_stable)),
    }
}

fn graph_text(ctx: &RootOfUnity, g: &InclusionGraph, n_stable: Option<usize>) -> String {
    let mut s = String::new();
    let level = match n_stable {
        Some(n) => format!("n_stable = {n}"),
        None => format!("n = {}", g.level),
    };
    let _ = writeln!(s, "N = {}, ell = {}, {level}, index = {}", ctx.n(), ctx.ell(), sig(g.index));
    let even: Vec<Vec<String>> = g.even.iter().map(|v| vec![bracket(&v.label), sig(v.weight)]).collect();
    s.push_str(&table(&["even", "d̃"], &even));
    let odd: Vec<Vec<String>> = g
        .odd
        .iter()
        .zip(local_indices(g))
        .map(|(v, (_, li))| vec![bracket(&v.label), sig(v.weight), sig(li)])
        .collect();
    s.push_str(&table(&["odd", "d", "local index"], &odd));
    let edges: Vec<Vec<String>> = g
        .edges
        .iter()
        .map(|&(i, j, m)| vec![bracket(&g.even[i].label), bracket(&g.odd[j].label), m.to_string()])
        .collect();
    s.push_str(&table(&["even", "odd", "multiplicity"], &edges));
    s
}

#[derive(Serialize)]
struct IndexDoc {
    #[serde(rename = "N")]
    n_param: i64,
    ell: u64,
    n_stable: usize,
    ratio: f64,
    closed_form: f64,
    difference: f64,
    relative_difference: f64,
}

fn index(cfg: &RunConfig, n_cap: usize) -> Result<Outcome, Failure> {
    let ctx = cfg.context;
    let (n_stable, g) = stabilize(&ctx, 2, n_cap)?;
    let closed_form = index_closed_form(&ctx)?;
    let difference = (g.index - closed_form).abs();
    let doc = IndexDoc {
        n_param: ctx.n(),
        ell: ctx.ell(),
        n_stable,
        ratio: g.index,
        closed_form,
        difference,
        relative_difference: difference / closed_form.abs(),
    };
    let failure = (doc.relative_difference >= fusym::tolerances::INDEX)
        .then(|| format!("index agreement: relative difference {}", sig(doc.relative_difference)));
    let stdout = match cfg.format {
        Format::Json => json(&doc)?,
        _ => {
            let rows = vec![
                vec!["ratio".to_string(), sig(doc.ratio)],
                vec!["closed form".to_string(), sig(doc.closed_form)],
                vec!["difference".to_string(), sig(doc.difference)],
                vec!["relative difference".to_string(), sig(doc.relative_difference)],
            ];
            let mut s = format!("N = {}, ell = {}, n_stable = {n_stable}\n", ctx.n(), ctx.ell());
            s.push_str(&table(&["", ""], &rows)[1..]);
            s
        }
    };
    Ok(Outcome { stdout, failure })
}

#[derive(Serialize)]
struct Vertex {
    label: Partition,
    paths: u128,
}

#[derive(Serialize)]
struct Level {
    n: usize,
    dimension: u128,
    vertices: Vec<Vertex>,
    /// Edges to the next level, as (index here, index there).
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct BratteliDoc {
    #[serde(rename = "N")]
    n_param: i64,
    ell: u64,
    kind: &'static str,
    levels: Vec<Level>,
}

fn bratteli(cfg: &RunConfig, n_max: usize, kind: Kind) -> Result<String, Failure> {
    let ctx = cfg.context;
    let b = build_bratteli(&ctx, kind, n_max)?;
    let levels: Vec<Level> = (0..=n_max)
        .map(|n| Level {
            n,
            dimension: b.algebra_dimension(n),
            vertices: b.levels[n]
                .iter()
                .zip(&b.path_counts[n])
                .map(|(l, &p)| Vertex { label: l.clone(), paths: p })
                .collect(),
            edges: b.edges.get(n).cloned().unwrap_or_default(),
        })
        .collect();
    match cfg.format {
        Format::Json => json(&BratteliDoc { n_param: ctx.n(), ell: ctx.ell(), kind: kind_name(kind), levels }),
        Format::Csv => {
            let cells: Vec<Vec<String>> = levels
                .iter()
                .flat_map(|lv| lv.vertices.iter().map(move |v| vec![lv.n.to_string(), v.label.to_string(), v.paths.to_string()]))
                .collect();
            csv(&["n", "label", "paths"], &cells)
        }
        _ => {
            let mut s = format!("{} tower for N = {}, ell = {}\n", kind_name(kind), ctx.n(), ctx.ell());
            for lv in &levels {
                let vs: Vec<String> = lv.vertices.iter().map(|v| format!("{}:{}", bracket(&v.label), v.paths)).collect();
                let _ = writeln!(s, "n = {}  dim = {}  {}", lv.n, lv.dimension, vs.join(" "));
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct MolevDoc {
    #[serde(rename = "N")]
    n_param: i64,
    ell: u64,
    factors: usize,
    reports: Vec<MolevRow>,
    check: Check,
}

#[derive(Serialize)]
struct MolevRow {
    q: &'static str,
    residuals: Vec<fusym::molev::Residual>,
}

fn report_text(report: &VerifyReport) -> String {
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            vec![status.to_string(), c.name.to_string(), c.detail.clone()]
        })
        .collect();
    let mut s = format!("N = {}, ell = {}\n", report.n, report.ell);
    s.push_str(&table(&["", "", ""], &rows)[1..]);
    s
}

fn verify(cfg: &RunConfig, target: Target, factors: Option<usize>) -> Result<Outcome, Failure> {
    let ctx = cfg.context;
    if factors.is_some() && target != Target::Molev {
        return Err(Failure::Usage("--n applies only to the molev target".into()));
    }
    let single = |check: Check| VerifyReport { n: ctx.n(), ell: ctx.ell(), checks: vec![check] };
    let molev_factors = factors.unwrap_or_else(|| default_factors(&ctx));
    let residuals = match target {
        Target::Molev if ctx.is_orthogonal() => Some(relation_reports(&ctx, molev_factors)?),
        _ => None,
    };
    let report = match target {
        Target::All => verify_context(&ctx, cfg.tol),
        Target::Molev => single(match &residuals {
            Some(r) => check_relation_reports(r, fusym::tolerances::RELATION * cfg.tol / 1e-8),
            None => check_relations(&ctx, Some(molev_factors), cfg.tol),
        }),
        Target::Smatrix => single(check_unitarity(&ctx, cfg.tol)),
        Target::Squaresum => single(check_square_sums(&ctx, cfg.tol)),
    };
    let failure = report.failures().next().map(|c| format!("{}: {}", c.name, c.detail));
    let stdout = match (cfg.format, target) {
        (Format::Json, Target::Molev) => {
            let reports = residuals
                .map(|[quantum, classical]| {
                    vec![
                        MolevRow { q: "exp(iπ/ℓ)", residuals: quantum.residuals },
                        MolevRow { q: "1", residuals: classical.residuals },
                    ]
                })
                .unwrap_or_default();
            let check = report.checks[0].clone();
            json(&MolevDoc { n_param: ctx.n(), ell: ctx.ell(), factors: molev_factors, reports, check })?
        }
        (Format::Json, _) => json(&report)?,
        _ => report_text(&report),
    };
    Ok(Outcome { stdout, failure })
}
