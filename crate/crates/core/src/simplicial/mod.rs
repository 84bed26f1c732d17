//! Finite pointed simplicial sets up to a dimension cap.
//!
//! [`TruncatedSimplicialSet`] stores nondegenerate generators with a face
//! table and is the input format. [`LevelwiseSimplicialSet`] lists every
//! simplex of every degree and is what Ω, products and `F ∘ X` operate on.

pub mod construct;
pub mod levelwise;
pub mod monotone;
pub mod omega;
pub mod truncated;

pub use construct::{minimal_torus, point, sphere, standard_simplex, wedge_of_circles};
pub use levelwise::{LevelwiseMap, LevelwiseSimplicialSet};
pub use omega::{omega, omega_n, omega_n_levels, pi_comb_0, pi_comb_n, OmegaLevels};
pub use truncated::{Simplex, SimplexRef, TruncatedSimplicialSet, TruncatedSpec};

/// `to_levelwise(X ∧ k_+)`, computed on either representation.
pub fn smash_levelwise(x: &TruncatedSimplicialSet, k: usize) -> LevelwiseSimplicialSet { x.to_levelwise().smash_with_k(k) }
