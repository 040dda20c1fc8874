//! The dual Schur transform on `(ℂ^d)^{⊗n}` and the `U(d)` side of
//! Schur-Weyl duality.
//!
//! Rows of the transform are `|λ, q, p⟩` with `q` a semistandard tableau over
//! `[d]` (the Gelfand-Tsetlin basis of the `U(d)` irrep) and `p` a standard
//! tableau (Young's orthogonal basis of the `S_n` irrep).

mod basis;
mod gt;
mod transform;
mod verify;

pub use basis::{schur_basis, SchurBasisLabel, SchurLayout};
pub use gt::{gt_generator, gt_generator_real, matrix_units, unitary_irrep, GtKind, GtOperator};
pub use transform::{
    dual_schur, hilbert_dim, index_to_tuple, nominal_label, pipeline_trace, tuple_to_index, ClassBlock, DualSchur,
    PipelineTrace, DEFAULT_BUDGET,
};
pub use verify::{
    tensor_matrix_unit, tensor_permutation, tensor_power, verify_gt_basis, verify_schur_weyl_perm,
    verify_schur_weyl_unitary, verify_weights, weak_schur_distribution, StateVector,
};
