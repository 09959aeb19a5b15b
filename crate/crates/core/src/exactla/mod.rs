//! Exact scalars over ℚ and 𝔽ₚ, tensor-space signatures and dense linear maps.
//!
//! Every tensor product uses the same row-major flattening: the basis vector
//! `v_i ⊗ w_j` of `V ⊗ W` lives at flat index `i * dim(W) + j`, with the first
//! factor outermost. Structure constants, Kronecker products and the local
//! application used by the diagram evaluator all rely on this.

mod field;
mod linmap;
mod scalar;
mod solve;
mod space;

pub use field::{FieldSpec, Prime};
pub use linmap::LinMap;
pub use scalar::{ArithOp, Scalar};
pub use solve::solve_linear;
pub use space::{Factor, SpaceSig};
