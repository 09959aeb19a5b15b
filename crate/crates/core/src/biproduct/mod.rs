//! Smash product, smash coproduct, the biproduct `B⋆H` with its antipode,
//! and bosonization from a quasitriangular structure.
//!
//! Structure constants here are assembled by explicit sums over basis
//! indices. The diagram evaluator builds the same maps from generators, so
//! the two routes cross-check each other.
//!
//! Conventions (the forms used when proving the biproduct is a bialgebra):
//!
//! * product: `(a⋆g)(b⋆h) = Σ a(g₁·b) ⋆ g₂h`
//! * coproduct: `Δ(b⋆h) = Σ b₁ ⋆ (b₂)₋₁h₁ ⊗ (b₂)₀ ⋆ h₂`
//! * antipode: `S(b⋆h) = Σ (1 ⋆ S_H(b₋₁h))(S_B(b₀) ⋆ 1)`
//!
//! The basis vector `bᵢ⋆hⱼ` sits at index `i·dim H + j`.

mod bosonize;
mod smash;

pub use bosonize::{
    bosonize, bosonize_coaction, check_quasitriangular, ModuleBialgebraData, RMatrix,
};
pub use smash::{biproduct_space, build_biproduct, smash_coproduct, smash_product, BiproductData};
