//! Abstract finite groups: multiplication tables, isomorphism testing,
//! recognition of finite rotation groups, torsion in GL(2, ℤ) and signed
//! permutation groups.

mod finite_group;
mod gl2;
mod signed_perm;
mod so3;

pub use finite_group::{group_from_maps, is_isomorphic, FiniteGroup, ISOMORPHISM_GUARD};
pub use gl2::{
    generated_order, gl2_torsion_search, torsion_elements, FiniteSubgroup, Gl2Report, Mat2,
};
pub use signed_perm::{signed_permutation_group, SignedPermutationGroup};
pub use so3::{
    attachment_bound, classify_so3, theorem1_verdict, AttachmentBound, SO3Class, Theorem1Verdict,
};
