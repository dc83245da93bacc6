use std::collections::BTreeMap;

use fusym_core::{Error, Partition, Result, RootOfUnity};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DirectSolve,
    Folded,
    Littlewood,
}

/// Where a table lives: a root of unity, a classical group, or the N-independent stable range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableContext {
    Fusion { n: i64, ell: u64 },
    Classical { n: i64 },
    Stable { family: StableFamily },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StableFamily {
    O,
    Sp,
}

impl From<&RootOfUnity> for TableContext {
    fn from(ctx: &RootOfUnity) -> Self {
        TableContext::Fusion { n: ctx.n(), ell: ctx.ell() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub label: Partition,
    pub multiplicity: u64,
}

/// Multiplicities `b^λ_μ`, zero entries omitted, sorted by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingTable {
    pub context: TableContext,
    pub source: Partition,
    pub entries: Vec<Entry>,
    pub method: Method,
}

impl BranchingTable {
    /// Builds a table, rejecting negative values and entries of the wrong parity.
    pub fn from_signed(
        context: TableContext,
        source: Partition,
        values: BTreeMap<Partition, i64>,
        method: Method,
    ) -> Result<Self> {
        let mut entries = Vec::new();
        for (label, v) in values {
            if v == 0 {
                continue;
            }
            if v < 0 {
                return Err(Error::Solve { label: source, detail: format!("negative multiplicity {v} at {label}") });
            }
            if label.size() > source.size() || (source.size() - label.size()) % 2 == 1 {
                return Err(Error::Solve { label: source, detail: format!("entry {label} has the wrong size") });
            }
            entries.push(Entry { label, multiplicity: v as u64 });
        }
        Ok(Self { context, source, entries, method })
    }

    pub fn get(&self, mu: &Partition) -> u64 {
        self.entries.iter().find(|e| &e.label == mu).map_or(0, |e| e.multiplicity)
    }

    pub fn as_map(&self) -> BTreeMap<Partition, u64> {
        self.entries.iter().map(|e| (e.label.clone(), e.multiplicity)).collect()
    }

    pub fn same_entries(&self, other: &Self) -> bool {
        self.entries == other.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
