//! Twisted cohomology of finite simplicial complexes with integer 1-cocycles,
//! jump loci of the rank-one deformation `s ↦ s^θ`, equivariant Novikov
//! numbers for finite group actions, and decision procedures for Novikov-type
//! inequalities `M(λ) - N(λ) = (1 + λ) Q(λ)`.

pub mod algebra;
pub mod complex;
pub mod doubling;
pub mod error;
pub mod group;
pub mod local_system;
pub mod morse;

pub use error::{Error, Result};
