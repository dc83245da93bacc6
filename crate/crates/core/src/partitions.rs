//! Young diagrams and the combinatorics built on them.
//!
//! Rows and columns are 1-based in every public method, matching the usual
//! `(i, j)` box notation. Out-of-range rows and columns read as length 0.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored as its weakly decreasing positive row lengths.
///
/// The derived order is the canonical one used to index every matrix:
/// by size, then lexicographically descending rows.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
}

/// Builds a [`Partition`] from literal row lengths.
///
/// Panics if the rows are not weakly decreasing; meant for literals.
///
/// ```
/// use fusym_core::partition;
/// assert_eq!(partition![4, 2, 1].size(), 7);
/// assert!(partition![].is_empty());
/// ```
#[macro_export]
macro_rules! partition {
    () => { $crate::partitions::Partition::empty() };
    ($($r:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($r),+]).expect("rows must be weakly decreasing")
    };
}

impl Partition {
    /// Validates and normalises row lengths; trailing zeros are dropped.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("rows {rows:?} are not weakly decreasing")));
        }
        if rows.contains(&0) {
            return Err(Error::Domain(format!("rows {rows:?} contain an interior zero")));
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    /// The partition whose conjugate has the given (weakly decreasing) column lengths.
    pub fn from_columns(cols: Vec<usize>) -> Result<Self> {
        Ok(Self::new(cols)?.conjugate())
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of boxes |λ|.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Number of nonzero rows, i.e. λ′₁.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// λ_i (1-based), zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    /// λ′_j (1-based), zero beyond the first row.
    pub fn col(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.rows.iter().take_while(|&&r| r >= j).count()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.row(1);
        Self { rows: (1..=width).map(|j| self.col(j)).collect() }
    }

    /// Row lengths padded with zeros (or truncated) to length `k`.
    pub fn padded(&self, k: usize) -> Vec<usize> {
        (1..=k).map(|i| self.row(i)).collect()
    }

    pub fn has_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.row(i)
    }

    /// Boxes `(i, j)` in reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, &r)| (1..=r).map(move |j| (i + 1, j)))
    }

    /// Whether the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.num_rows() <= self.num_rows() && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    fn check_box(&self, i: usize, j: usize) -> Result<()> {
        if self.has_box(i, j) {
            Ok(())
        } else {
            Err(Error::Domain(format!("({i},{j}) is not a box of {self}")))
        }
    }

    /// Hook length λ_i − j + λ′_j − i + 1.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize> {
        self.check_box(i, j)?;
        Ok(self.row(i) - j + self.col(j) - i + 1)
    }

    /// The content-like quantity d(i, j) entering the Brauer weights.
    ///
    /// `λ_i + λ_j − i − j` when `i ≤ j`, else `−λ′_i − λ′_j + i + j − 2`.
    pub fn brauer_content(&self, i: usize, j: usize) -> Result<i64> {
        self.check_box(i, j)?;
        let (i_, j_) = (i as i64, j as i64);
        Ok(if i <= j {
            self.row(i) as i64 + self.row(j) as i64 - i_ - j_
        } else {
            -(self.col(i) as i64) - self.col(j) as i64 + i_ + j_ - 2
        })
    }

    /// All partitions with one more box, in canonical order.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.rows.len() {
            let current = self.rows.get(i).copied().unwrap_or(0);
            if i == 0 || self.rows[i - 1] > current {
                let mut rows = self.rows.clone();
                if i == rows.len() {
                    rows.push(1);
                } else {
                    rows[i] += 1;
                }
                out.push(Partition { rows });
            }
        }
        out.sort();
        out
    }

    /// All partitions with one box fewer, in canonical order.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.rows.len() {
            let below = self.rows.get(i + 1).copied().unwrap_or(0);
            if self.rows[i] > below {
                let mut rows = self.rows.clone();
                rows[i] -= 1;
                out.push(Partition::new(rows).expect("removing a corner keeps the shape"));
            }
        }
        out.sort();
        out
    }

    /// Every partition of `n`, in canonical order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        Self::bounded(n, usize::MAX, usize::MAX)
    }

    /// Partitions of `n` with at most `max_rows` rows and parts at most `max_part`.
    pub fn bounded(n: usize, max_rows: usize, max_part: usize) -> Vec<Partition> {
        fn rec(
            left: usize,
            max_part: usize,
            rows_left: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if left == 0 {
                out.push(Partition { rows: cur.clone() });
                return;
            }
            if rows_left == 0 {
                return;
            }
            for p in (1..=left.min(max_part)).rev() {
                cur.push(p);
                rec(left - p, p, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.rows.cmp(&self.rows))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.rows
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.rows.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Accepts `"4 3 1"`, `"4,3,1"`, `"[4,3,1]"`, and `""`, `"∅"` or `"[]"` for the empty diagram.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if trimmed.is_empty() || trimmed == "∅" {
            return Ok(Partition::empty());
        }
        let rows = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::Domain(format!("bad row {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

/// Littlewood–Richardson coefficient c^λ_{μβ}, by enumerating LR tableaux
/// of shape λ/μ and content β.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, beta: &Partition) -> u64 {
    if mu.size() + beta.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(beta) {
        return 0;
    }
    // Cells of λ/μ in reverse reading order: rows top to bottom, right to left.
    let cells: Vec<(usize, usize)> = (1..=lambda.num_rows())
        .flat_map(|i| ((mu.row(i) + 1)..=lambda.row(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut grid = vec![vec![0usize; lambda.row(1) + 1]; lambda.num_rows() + 1];
    let mut counts = vec![0usize; beta.num_rows() + 1];
    lr_fill(&cells, 0, mu, beta, &mut grid, &mut counts)
}

fn lr_fill(
    cells: &[(usize, usize)],
    pos: usize,
    mu: &Partition,
    beta: &Partition,
    grid: &mut [Vec<usize>],
    counts: &mut [usize],
) -> u64 {
    let Some(&(i, j)) = cells.get(pos) else {
        return 1;
    };
    // Weakly increasing along the row: bounded above by the right neighbour.
    let upper = if j < grid[i].len() - 1 && grid[i][j + 1] != 0 { grid[i][j + 1] } else { beta.num_rows() };
    // Strictly increasing down the column, when the cell above is in the skew shape.
    let lower = if i > 1 && j > mu.row(i - 1) { grid[i - 1][j] + 1 } else { 1 };
    let mut total = 0;
    for v in lower..=upper {
        if counts[v] + 1 > beta.row(v) || (v > 1 && counts[v] + 1 > counts[v - 1]) {
            continue;
        }
        counts[v] += 1;
        grid[i][j] = v;
        total += lr_fill(cells, pos + 1, mu, beta, grid, counts);
        grid[i][j] = 0;
        counts[v] -= 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_examples() {
        assert_eq!(partition![1].hook_length(1, 1).unwrap(), 1);
        assert_eq!(partition![2, 1].hook_length(1, 1).unwrap(), 3);
        assert_eq!(partition![4, 2, 1].hook_length(1, 2).unwrap(), 4);
        assert!(partition![2, 1].hook_length(2, 2).is_err());
    }

    #[test]
    fn content_examples() {
        assert_eq!(partition![1, 1].brauer_content(1, 1).unwrap(), 0);
        assert_eq!(partition![1, 1].brauer_content(2, 1).unwrap(), -1);
        assert_eq!(partition![2].brauer_content(1, 2).unwrap(), -1);
        assert!(partition![2].brauer_content(2, 1).is_err());
    }

    #[test]
    fn box_moves() {
        assert_eq!(Partition::empty().add_box(), vec![partition![1]]);
        assert_eq!(partition![2, 1].add_box(), vec![partition![3, 1], partition![2, 2], partition![2, 1, 1]]);
        assert_eq!(partition![2, 2].remove_box(), vec![partition![2, 1]]);
        assert!(Partition::empty().remove_box().is_empty());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&partition![2, 1], &partition![1], &partition![1, 1]), 1);
        assert_eq!(lr_coefficient(&partition![4, 2, 1], &partition![4, 2, 1], &Partition::empty()), 1);
        assert_eq!(lr_coefficient(&partition![2], &partition![1], &partition![2]), 0);
        assert_eq!(lr_coefficient(&partition![3, 2, 1], &partition![2, 1], &partition![2, 1]), 2);
    }

    #[test]
    fn canonical_order() {
        let mut v = Partition::all_of_size(3);
        v.push(partition![1]);
        v.sort();
        assert_eq!(v, vec![partition![1], partition![3], partition![2, 1], partition![1, 1, 1]]);
    }

    #[test]
    fn text_forms() {
        assert_eq!("4 3 1".parse::<Partition>().unwrap(), partition![4, 3, 1]);
        assert_eq!("[4,3,1]".parse::<Partition>().unwrap(), partition![4, 3, 1]);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1 2".parse::<Partition>().is_err());
        assert_eq!(partition![4, 3, 1].to_string(), "4 3 1");
    }
}
