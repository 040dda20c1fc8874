//! Schur transform over the symmetric group, built from explicit matrices.
//!
//! The crate enumerates the combinatorial labels (partitions, standard and
//! semistandard tableaux, Gelfand-Tsetlin patterns), builds the Young
//! orthogonal representation of `S_n`, and composes the Fourier transform over
//! `S_n`, the Fourier transform over permutation modules and the dual Schur
//! transform as dense unitaries that can be checked numerically.

pub mod combinatorics;
pub mod error;
pub mod fourier;
pub mod linalg;
pub mod rsk;
pub mod schur;
pub mod suite;
pub mod symgroup;

pub use combinatorics::{Composition, GtPattern, Partition, SemistandardTableau, SkewStrip, StandardTableau};
pub use error::{Error, Result};
