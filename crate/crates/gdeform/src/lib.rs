//! Exact-arithmetic toolkit for equivariant deformations of graded algebras.
//!
//! The crate computes, over cyclotomic fields and their rational-function
//! extensions, the degree-by-degree structure of graded algebras `T(V)/(R)`
//! carrying a group action: multiplicity ledgers and Grassmannian parameter
//! spaces of relation subspaces, Hilbert functions and graded characters,
//! twists by graded automorphisms, Ore extensions with equivariant
//! `σ`-derivations, and point schemes of quadratic algebras via
//! multilinearization.
//!
//! Everything is exact: scalars are elements of `ℚ(ζ_m)` or univariate
//! rational functions over them, and all linear algebra is fraction-exact
//! with deterministic pivoting. No floating point is used anywhere.

pub mod algebra;
pub mod casestudy;
pub mod deform;
pub mod error;
pub mod exact;
pub mod io;
pub mod pointscheme;
pub mod rng;
pub mod symmetry;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
