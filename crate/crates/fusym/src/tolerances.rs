//! Thresholds shared by the verification suite, the CLI and the acceptance target.

/// Matrix relations of the tensor-space representation; entries are O(1) sums of roots of unity.
pub const RELATION: f64 = 1e-10;

/// Hook products against Weyl-character evaluations.
pub const WEIGHT: f64 = 1e-9;

/// Relative error of square sums against the sine-product closed form.
pub const SQUARE_SUM: f64 = 1e-9;

/// `max |S*S − I|` for the lattice S-matrices.
pub const UNITARITY: f64 = 1e-10;

/// Relative difference between the two index computations.
pub const INDEX: f64 = 1e-8;

/// Relative Perron–Frobenius residual of a stable graph.
pub const PF: f64 = 1e-8;

/// `ω_λ ≤ POSITIVITY` counts as non-positive.
pub const POSITIVITY: f64 = 1e-9;

/// Largest box count used when comparing branching methods.
pub const BRANCHING_BOXES: usize = 8;
