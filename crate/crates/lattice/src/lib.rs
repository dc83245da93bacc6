//! Weyl group of type B, characters of the classical groups, Weyl denominators,
//! square-sum identities and S-matrices of finite lattice quotients.

pub mod characters;
pub mod roots;
pub mod smatrix;
pub mod squaresum;
pub mod weyl;

pub use characters::{
    hecke_character, o_character, schur, sp_character, weight_character, weyl_character, Det, Family,
};
pub use roots::{weyl_denominator, RootSystem};
pub use smatrix::{coset_representatives, s_matrix, Lattice, LatticePair, SMatrix, Setup, Standard};
pub use squaresum::{verify_square_sums, SquareSumReport};
pub use weyl::{Sign, SignedPermutation, WeylGroupBk};
