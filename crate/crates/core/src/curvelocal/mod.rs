//! Rational plane curves, local branches and the classification of their
//! singular points.

pub mod audit;
pub mod branch;
pub mod flex;
pub mod germ;
pub mod param;
pub mod tag;

pub use audit::{audit_components, singularity_audit, AuditReport, BranchRecord, Component, Coords, Descriptor, DescriptorEntry, SingRecord};
pub use branch::{branch_at, pair_intersection_multiplicity, Branch};
pub use flex::{flex_count, flex_parameters, Flex, FlexParam};
pub use param::{ParamCurve, ParamPoint};
pub use tag::{classify_germ, delta_of_type, BranchSet, BranchType, Decoration, SingTypeTag};
