//! Combinatorial homotopy and homology of finite pointed simplicial sets with
//! coefficients in Γ-sets, together with the ℓ¹ machinery (Moore
//! normalization, exact LP seminorms) and the genus-g surface model.
//!
//! The crate is organised bottom-up:
//!
//! - [`gamma`]: finite pointed sets, morphisms of Γ^op, the built-in Γ-sets.
//! - [`simplicial`]: truncated and levelwise simplicial sets, Ω, π^comb.
//! - [`two_sets`]: the topos of 2-sets and its subobject classifier.
//! - [`homotopy`]: `F ∘ X` and the homology Γ-set `H_n(X, F)`.
//! - [`chains`]: rational chains, normalization, LP seminorms.
//! - [`surfaces`]: the surface model Σ(g) and its normalized cycle.

pub mod chains;
pub mod error;
pub mod gamma;
pub mod homotopy;
pub mod rational;
pub mod simplicial;
pub mod surfaces;
pub mod two_sets;
pub mod union_find;

pub use error::{Error, Result};
pub use rational::Q;
