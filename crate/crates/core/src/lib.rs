//! Exact computation in small finite permutation groups.
//!
//! Groups are enumerated completely: every element, every subgroup, every
//! chief factor. On that foundation sit the Π-property and Π-normality
//! predicates and the structural classifiers (p-nilpotent, p-soluble,
//! supersoluble, quaternion-free, ...) consumed by the verification harness.
//!
//! Determinism is a contract throughout: elements are kept in lexicographic
//! order, subgroups in a canonical (order, element-set) order, and every
//! search that reports a witness walks candidates in that order.

pub mod elemset;
pub mod error;
pub mod group;
pub mod invariants;
pub mod iso;
pub mod lattice;
pub mod perm;
pub mod pitheory;
pub mod quotient;
pub mod structure;
pub mod subgroup;

pub use elemset::ElemSet;
pub use error::GroupError;
pub use group::{
    build_group, direct_product, semidirect_product, Action, BuildLimits, DirectProduct,
    FiniteGroup, SemidirectProduct,
};
pub use lattice::{ChiefPair, SubgroupLattice};
pub use perm::Perm;
pub use quotient::QuotientView;
pub use subgroup::Subgroup;

/// Shared-ownership handle to a group; subgroups and lattices hold one.
pub type Group = std::sync::Arc<FiniteGroup>;
