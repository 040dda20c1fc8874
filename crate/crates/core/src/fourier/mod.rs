//! Fourier transforms over `S_n`, Young subgroups and permutation modules.
//!
//! All matrices are dense and use the Young orthogonal basis, so the
//! transforms over `S_n` are real. Block layouts are described by
//! [`BlockStructure`].

mod gpe;
mod labels;
mod permmod;
mod qft;

pub use gpe::{irrep_key, Gpe};
pub use labels::{Block, BlockOrder, BlockStructure, Label, LabeledUnitary, MultLabel};
pub use permmod::{multiplicity_basis, qft_permmod, trivial_vector, PermBlock, PermModule};
pub use qft::{induced_qft, qft_sn, qft_sn_real, qft_young, FourierLayout};
