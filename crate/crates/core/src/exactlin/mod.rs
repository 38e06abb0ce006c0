//! Exact scalars over ℚ and GF(p) and the row-reduction substrate used by
//! every other module.

pub(crate) mod matrix;
mod scalar;
mod subspace;

pub use matrix::{general_linear_group, general_linear_order, Mat, Vector};
pub use scalar::{FieldSpec, Scalar};
pub use subspace::{all_subspaces, subspace_count, Subspace};
