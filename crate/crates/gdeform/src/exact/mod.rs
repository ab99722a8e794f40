//! Exact scalar arithmetic and linear/polynomial algebra over cyclotomic
//! fields and their rational-function extensions.

pub mod cyclotomic;
pub mod matrix;
pub mod multipoly;
pub mod parametric;
pub mod poly;
pub mod scalar;
pub mod tensor;

pub use cyclotomic::{CycScalar, Rat};
pub use matrix::{matrix_rank_kernel, solve_linear, ExactMatrix, RowSpace, SparseVec};
pub use multipoly::{poly_det_and_minors, MultiPoly};
pub use parametric::{parametric_rank, ParametricRankReport};
pub use poly::{FracScalar, UniPoly};
pub use scalar::Field;
