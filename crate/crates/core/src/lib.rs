//! Young-diagram combinatorics, q-numbers at roots of unity and the label
//! sets of the truncated Hecke and q-Brauer towers.

pub mod error;
pub mod labels;
pub mod partitions;
pub mod qarith;

pub use error::{Error, Result};
pub use labels::{Kind, LabelSet};
pub use partitions::{lr_coefficient, Partition};
pub use qarith::{qint, RootOfUnity};
