use thiserror::Error;

use crate::partitions::Partition;

/// Errors shared by every crate in the workspace.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid context: {0}")]
    Context(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("label {label} is not in {set}")]
    Label { label: Partition, set: String },

    #[error("size {dim} exceeds the cap {cap}")]
    Size { dim: usize, cap: usize },

    #[error("degenerate evaluation point: denominator {0:e}")]
    Degenerate(f64),

    #[error("branching solve failed for {label}: {detail}")]
    Solve { label: Partition, detail: String },

    #[error("relation {name} fails with residual {residual:e}")]
    Relation { name: String, residual: f64 },

    #[error("no stabilisation up to n = {n_cap}: {detail}")]
    NonStabilization { n_cap: usize, detail: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
