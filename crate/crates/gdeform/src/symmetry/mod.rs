//! Finite matrix groups and diagonalizable weight groups, their
//! representations, characters, and equivariant Hom spaces.

pub mod builtin;
pub mod group;
pub mod hom;
pub mod rep;

pub use builtin::{
    builtin_reps, dihedral, heisenberg, symmetric_group, symmetric_group_irreps, BuiltinFamily,
    BuiltinReps,
};
pub use group::{enumerate_group, permutation_matrix, FiniteGroupData, DEFAULT_ELEMENT_CAP};
pub use hom::{hom_space, intertwiner_basis, multiplicity, multiplicity_of_character};
pub use rep::{character_inner_product, Character, MatrixRep, Representation, WeightRep};
