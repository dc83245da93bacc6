//! Fusion categories of type BCD and their symmetric-space subfactors.
//!
//! The facade re-exports the component crates and adds the verification suite.
//! The `guide` module holds the user guide, whose examples are compiled as doc-tests.

pub use fusym_core::{labels, partition, partitions, qarith, qint, Error, Kind, LabelSet, Partition, Result, RootOfUnity};
pub use fusym_branching as branching;
pub use fusym_lattice as lattice;
pub use fusym_molev as molev;
pub use fusym_towers as towers;

pub mod tolerances;
pub mod verify;

/// The user guide.
pub mod guide {
    #[doc = include_str!("../../../README.md")]
    pub mod overview {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/conventions.md")]
    pub mod conventions {}
    #[doc = include_str!("../../../book/src/labels-and-weights.md")]
    pub mod labels_and_weights {}
    #[doc = include_str!("../../../book/src/characters.md")]
    pub mod characters {}
    #[doc = include_str!("../../../book/src/branching.md")]
    pub mod branching {}
    #[doc = include_str!("../../../book/src/principal-graphs.md")]
    pub mod principal_graphs {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod verification {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    pub mod command_line {}
}
