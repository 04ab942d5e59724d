//! Exact computer algebra for finite-dimensional Hom-Leibniz algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: exact rational matrices, ranks, kernels and subspaces.
//! * [`algebra`]: structure-constant algebras, axiom checkers, constructions
//!   and the fixture corpus.
//! * [`shuffles`]: shuffle permutations, signed permutation sums and the
//!   operators used by the cup product.
//! * [`complexes`]: the twisted boundary map, homology, equivariant cochains,
//!   the coboundary and cohomology.
//! * [`cup`]: the cup product and checks of its algebraic properties.
//!
//! All inner loops accept an [`Exec`] strategy; with the `parallel` feature
//! they run on rayon, otherwise sequentially. Results never depend on the
//! strategy.

pub mod algebra;
pub mod complexes;
pub mod cup;
mod error;
mod exec;
pub mod linalg;
pub mod shuffles;

pub use error::{Error, Result};
pub use exec::Exec;
