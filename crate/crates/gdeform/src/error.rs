//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("group enumeration exceeded the element cap of {cap}")]
    GroupCapExceeded { cap: usize },

    #[error("representation backends do not match (matrix vs weight)")]
    BackendMismatch,

    #[error("representations belong to different groups")]
    GroupMismatch,

    #[error("generator image count {got} does not match the group's generator count {want}")]
    GeneratorCountMismatch { got: usize, want: usize },

    #[error("generator images do not define a homomorphism of the enumerated group")]
    NotHomomorphism,

    #[error("representation is not absolutely irreducible over the session field (End dimension {end_dim}); consider enlarging the conductor")]
    NotIrreducible { end_dim: usize },

    #[error("supplied irrep list is incomplete: sum of squared dimensions {got} != group order {want}")]
    IrrepListIncomplete { got: usize, want: usize },

    #[error("degree {degree} exceeds the cutoff {cutoff}")]
    DegreeBeyondCutoff { degree: usize, cutoff: usize },

    #[error("tensor space of dimension {cols} exceeds the column cap {cap}")]
    ColumnCapExceeded { cols: usize, cap: usize },

    #[error("presentation is not G-stable: generator {generator} moves relation {relation} of degree {degree} out of the relation span")]
    NotGStable {
        generator: usize,
        degree: usize,
        relation: usize,
    },

    #[error("presentation has no group attached")]
    NoGroupAttached,

    #[error("operation requires a quadratic presentation, found a relation of degree {degree}")]
    NotQuadratic { degree: usize },

    #[error("relation vector has wrong length {got}, expected {want}")]
    RelationLength { got: usize, want: usize },

    #[error("simples do not exhaust the tensor space at degree {degree}: dimensions sum to {got}, expected {want}")]
    SimplesIncomplete {
        degree: usize,
        got: usize,
        want: usize,
    },

    #[error("coefficient matrix is rank deficient (rank {rank}, expected {want})")]
    RankDeficient { rank: usize, want: usize },

    #[error("relation space does not match the ledger profile at degree {degree} for {label}: multiplicity {got}, expected {want}")]
    ProfileMismatch {
        degree: usize,
        label: String,
        got: usize,
        want: usize,
    },

    #[error("map does not normalize the symmetry group")]
    NotNormalizing,

    #[error("map is not an automorphism of the presentation")]
    NotAutomorphism,

    #[error("map is not equivariant")]
    NotEquivariant,

    #[error("sigma-derivation data fails the identity: {identity}")]
    OreIdentity { identity: String },

    #[error("Ore construction requires a commutative polynomial base presentation")]
    OreBaseNotPolynomial,

    #[error("point does not lie on the point variety")]
    NotOnVariety,

    #[error("successor is undefined: rank of the evaluated matrix is {rank}, expected {want}")]
    SuccessorUndefined { rank: usize, want: usize },

    #[error("parameter n = {n} outside the supported range {min}..={max}")]
    UnsupportedRange { n: usize, min: usize, max: usize },

    #[error("minor size {k} exceeds matrix dimensions {rows}x{cols}")]
    MinorTooLarge { k: usize, rows: usize, cols: usize },

    #[error("schema error in {context}: {message}")]
    Schema { context: String, message: String },

    #[error("report shapes differ: {0}")]
    ReportShape(String),

    #[error("invalid scalar literal {literal:?}: {message}")]
    ScalarParse { literal: String, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
