//! The truncated label sets Λ̃(N, ℓ) (Hecke) and Λ(N, ℓ) (Brauer).
//!
//! For `N < 0` diagrams are stored exactly as they are constrained, without
//! transposing; transposition only happens when evaluating characters.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::qarith::RootOfUnity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Hecke,
    Brauer,
}

/// The four defining cases of Λ(N, ℓ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrauerCase {
    /// `N > 0`, `ℓ − N` even.
    A,
    /// `N > 0`, `ℓ − N` odd.
    B,
    /// `N < 0` even.
    C,
    /// `N < 0` odd.
    D,
}

pub fn brauer_case(ctx: &RootOfUnity) -> BrauerCase {
    let even_gap = (ctx.ell() as i64 - ctx.n()).rem_euclid(2) == 0;
    match (ctx.n() > 0, even_gap, ctx.n() % 2 == 0) {
        (true, true, _) => BrauerCase::A,
        (true, false, _) => BrauerCase::B,
        (false, _, true) => BrauerCase::C,
        (false, _, false) => BrauerCase::D,
    }
}

/// The active inequalities as `(lhs, rhs)` pairs, each required to satisfy `lhs ≤ rhs`.
fn brauer_inequalities(ctx: &RootOfUnity, l: &Partition) -> [(i64, i64); 2] {
    let n = ctx.abs_n() as i64;
    let ell = ctx.ell() as i64;
    let cols = (l.col(1) + l.col(2)) as i64;
    let r1 = l.row(1) as i64;
    let r12 = (l.row(1) + l.row(2)) as i64;
    match brauer_case(ctx) {
        BrauerCase::A => [(cols, n), (r1, (ell - n) / 2)],
        BrauerCase::B => [(cols, n), (r12, ell - n)],
        BrauerCase::C => [(r1, n / 2), (cols, ell - n)],
        BrauerCase::D => [(r12, n), (cols, ell - n)],
    }
}

pub fn in_hecke(ctx: &RootOfUnity, l: &Partition) -> bool {
    let n = ctx.abs_n();
    let gap = ctx.ell() as usize - n;
    if ctx.n() > 0 {
        l.num_rows() <= n && l.row(1) - l.row(n) <= gap
    } else {
        l.row(1) <= n && l.col(1) - l.col(n) <= gap
    }
}

pub fn in_brauer(ctx: &RootOfUnity, l: &Partition) -> bool {
    brauer_inequalities(ctx, l).iter().all(|(a, b)| a <= b)
}

/// Misses exactly one of the defining inequalities, by exactly one.
pub fn is_brauer_boundary(ctx: &RootOfUnity, l: &Partition) -> bool {
    let ineq = brauer_inequalities(ctx, l);
    let misses: Vec<i64> = ineq.iter().map(|(a, b)| a - b).filter(|&d| d > 0).collect();
    misses == [1]
}

/// Label-set membership as a `Result`.
pub fn require(ctx: &RootOfUnity, kind: Kind, l: &Partition) -> Result<()> {
    let ok = match kind {
        Kind::Hecke => in_hecke(ctx, l),
        Kind::Brauer => in_brauer(ctx, l),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Label { label: l.clone(), set: set_name(ctx, kind) })
    }
}

fn set_name(ctx: &RootOfUnity, kind: Kind) -> String {
    let sym = match kind {
        Kind::Hecke => "Λ̃",
        Kind::Brauer => "Λ",
    };
    format!("{sym}({}, {})", ctx.n(), ctx.ell())
}

/// Row and part bounds that contain every member and boundary diagram.
fn brauer_box(ctx: &RootOfUnity) -> (usize, usize) {
    let n = ctx.abs_n();
    let gap = ctx.ell() as usize - n;
    match brauer_case(ctx) {
        BrauerCase::A => (n + 1, gap / 2 + 1),
        BrauerCase::B => (n + 1, gap + 1),
        BrauerCase::C => (gap + 1, n / 2 + 1),
        BrauerCase::D => (gap + 1, n + 1),
    }
}

/// A slice of one of the label sets.
#[derive(Debug, Clone, Serialize)]
pub struct LabelSet {
    pub context: RootOfUnity,
    pub kind: Kind,
    pub box_count: usize,
    pub members: Vec<Partition>,
    /// Boundary diagrams with `n, n − 2, …` boxes (Brauer kind only).
    pub boundary: Vec<Partition>,
}

impl LabelSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, l: &Partition) -> bool {
        self.members.binary_search(l).is_ok()
    }

    pub fn is_boundary(&self, l: &Partition) -> bool {
        self.boundary.binary_search(l).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Partition> {
        self.members.iter()
    }
}

/// Members of Λ̃(N, ℓ) with exactly `n` boxes.
pub fn hecke_labels(ctx: &RootOfUnity, n: usize) -> LabelSet {
    let candidates = if ctx.n() > 0 {
        Partition::bounded(n, ctx.abs_n(), n)
    } else {
        Partition::bounded(n, n, ctx.abs_n())
    };
    let mut members: Vec<Partition> = candidates.into_iter().filter(|l| in_hecke(ctx, l)).collect();
    members.sort();
    LabelSet { context: *ctx, kind: Kind::Hecke, box_count: n, members, boundary: Vec::new() }
}

/// Members of Λ(N, ℓ) with `n, n − 2, …` boxes, with the boundary diagrams of the same sizes.
pub fn brauer_labels(ctx: &RootOfUnity, n: usize) -> LabelSet {
    let (rows, part) = brauer_box(ctx);
    let mut members = Vec::new();
    let mut boundary = Vec::new();
    for m in (0..=n).rev().step_by(2) {
        for l in Partition::bounded(m, rows, part) {
            if in_brauer(ctx, &l) {
                members.push(l);
            } else if is_brauer_boundary(ctx, &l) {
                boundary.push(l);
            }
        }
    }
    members.sort();
    boundary.sort();
    LabelSet { context: *ctx, kind: Kind::Brauer, box_count: n, members, boundary }
}

/// The whole (finite) set Λ(N, ℓ), in canonical order.
pub fn all_brauer_labels(ctx: &RootOfUnity) -> Vec<Partition> {
    let (rows, part) = brauer_box(ctx);
    let mut out: Vec<Partition> = (0..=rows * part)
        .flat_map(|m| Partition::bounded(m, rows, part))
        .filter(|l| in_brauer(ctx, l))
        .collect();
    out.sort();
    out
}

/// The associated diagram λ†: first column replaced by `N − λ′₁`.
pub fn associated_diagram(l: &Partition, n: usize) -> Result<Partition> {
    let mut cols = l.conjugate().rows().to_vec();
    let c1 = cols.first().copied().unwrap_or(0);
    if c1 > n {
        return Err(Error::Domain(format!("{l} has more than {n} rows")));
    }
    let second = cols.get(1).copied().unwrap_or(0);
    if n - c1 < second {
        return Err(Error::Domain(format!("{l}† is not a diagram for N = {n}")));
    }
    if cols.is_empty() {
        cols.push(n);
    } else {
        cols[0] = n - c1;
    }
    Partition::from_columns(cols)
}

/// Periodicity map: adds one full column of `N` boxes (Hecke, `N > 0`),
/// one full row of `|N|` boxes (Hecke, `N < 0`), or the identity (Brauer).
pub fn periodicity_map(kind: Kind, ctx: &RootOfUnity, l: &Partition) -> Result<Partition> {
    require(ctx, kind, l)?;
    let image = match kind {
        Kind::Brauer => l.clone(),
        Kind::Hecke if ctx.n() > 0 => {
            Partition::new(l.padded(ctx.abs_n()).into_iter().map(|r| r + 1).collect())?
        }
        Kind::Hecke => {
            let mut rows = vec![ctx.abs_n()];
            rows.extend_from_slice(l.rows());
            Partition::new(rows)?
        }
    };
    require(ctx, kind, &image)?;
    Ok(image)
}

/// Inverse of [`periodicity_map`] on its image.
pub fn periodicity_inverse(kind: Kind, ctx: &RootOfUnity, l: &Partition) -> Result<Partition> {
    let n = ctx.abs_n();
    let pre = match kind {
        Kind::Brauer => l.clone(),
        Kind::Hecke if ctx.n() > 0 => {
            if l.num_rows() < n {
                return Err(Error::Domain(format!("{l} has no full column of {n} boxes")));
            }
            Partition::new(l.rows().iter().map(|r| r - 1).collect())?
        }
        Kind::Hecke => {
            if l.row(1) < n {
                return Err(Error::Domain(format!("{l} has no full row of {n} boxes")));
            }
            Partition::new(l.rows()[1..].to_vec())?
        }
    };
    require(ctx, kind, &pre)?;
    Ok(pre)
}

/// Strips every full column (`N > 0`) or full row (`N < 0`) of a Hecke label.
pub fn hecke_reduce(ctx: &RootOfUnity, l: &Partition) -> Partition {
    let n = ctx.abs_n();
    if ctx.n() > 0 {
        let m = l.row(n);
        Partition::new(l.rows().iter().map(|r| r - m).collect()).expect("column removal keeps the shape")
    } else {
        Partition::new(l.rows().iter().copied().filter(|&r| r != n).collect())
            .expect("row removal keeps the shape")
    }
}
