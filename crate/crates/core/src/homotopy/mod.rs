//! Homotopy and homology of simplicial sets with Γ-set coefficients.
//!
//! `H_n(X, F)(k_+) = π^comb_n(F ∘ (X ∧ k_+))`, assembled over `k` into a
//! finite table of a Γ-set.

pub mod compose;
pub mod engine;
pub mod table;

pub use compose::{
  compose_coeffs, gamma_two_set, induced_by_coefficients, induced_by_map, natural_comparison, smash_of_map, GammaTwoSet,
};
pub use engine::{enumeration_limit, loop_classes, LoopClasses, DEFAULT_ENUM_LIMIT};
pub use table::{all_morphisms, homology, homology_classes, homology_gamma, homology_gamma_levelwise, GammaSetTable, HomologyTable};
