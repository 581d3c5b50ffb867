//! Exact Galois-lattice algebra for algebraic tori.
//!
//! A torus is represented by its cocharacter lattice: a free finite-rank
//! `Z`-module with an action of a finite (splitting) group. On top of an
//! exact integer linear-algebra kernel the crate provides Tate cohomology,
//! classification of lattices (permutation, flasque, coflasque, invertible),
//! coflasque and flasque resolutions, iterated resolutions, and the homology
//! of the resulting complex of tori evaluated over field models.

pub mod abelian;
pub mod cli;
pub mod cohomology;
pub mod doc;
pub mod error;
pub mod group;
pub mod lattice;
pub mod linalg;
pub mod matrix;
pub mod motivic;
pub mod num;
pub mod oracle;
pub mod resolve;

pub use abelian::AbelianGroupInvariants;
pub use error::{Error, Result};
pub use group::{FiniteGroup, Subgroup};
pub use lattice::{GLattice, LatticeMap};
pub use matrix::Matrix;
pub use num::{ExactInt, Overflow};

/// Scalar used for stored lattice data.
pub type Int = i64;
/// Arbitrary-precision scalar used when machine arithmetic overflows.
pub type BigInt = num_bigint::BigInt;
pub type IntMatrix = Matrix<Int>;
pub type BigMatrix = Matrix<BigInt>;
pub type Rational = num_rational::Ratio<BigInt>;
