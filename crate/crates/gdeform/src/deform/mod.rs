//! Deformation machinery: multiplicity ledgers and Grassmannian embedding
//! spaces, deformation points and their presentations, Hom-space families,
//! twists, normalizer symmetries, and Ore extensions.

pub mod family;
pub mod ledger;
pub mod ore;
pub mod twist;

pub use family::{hom_family, FamilyShape, HomFamily};
pub use ledger::{
    build_ledger, canonical_point, embedding_space, point_to_presentation, vk_membership,
    DeformPoint, EmbeddingSpace, GrassFactor, Ledger, LedgerRow, PointBlock, VkReport,
    VkViolation,
};
pub use ore::{ore_extension, sigma_derivation_solve, sym2_monomials, OreData};
pub use twist::{
    normalizer_action, normalizer_action_point, twist, twist_family_check, TwistFamilyReport,
};
