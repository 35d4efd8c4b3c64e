use thiserror::Error;

/// Everything that can go wrong while building or interrogating a group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    /// An image table or cycle list does not describe a bijection.
    #[error("not a permutation of 0..{degree}: offending value {value}")]
    MalformedPermutation { degree: usize, value: usize },

    /// Two permutations of different degrees were combined.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// Generating closure grew past the configured order bound.
    #[error("group closure exceeds the configured bound of {bound} elements")]
    ClosureExceedsBound { bound: usize },

    /// A permutation or index that is not in the group was used as if it were.
    #[error("not an element of the group")]
    NotAnElement,

    /// A subgroup was used with a group other than its parent.
    #[error("subgroup belongs to a different parent group")]
    WrongParent,

    /// A quotient was requested by a non-normal kernel.
    #[error("kernel is not normal in the group")]
    NotNormal,

    /// A map of a group onto itself fails to be a bijective homomorphism.
    #[error("map is not an automorphism")]
    NotAnAutomorphism,

    /// An action assignment fails to respect the acting group's multiplication.
    #[error("action is not a homomorphism into the automorphism group")]
    NotAHomomorphism,

    /// Subgroup enumeration grew past the configured budget.
    #[error("subgroup lattice exceeds the budget of {cap} subgroups")]
    LatticeBudgetExceeded { cap: usize },

    /// The join of all normal subgroups satisfying a closed predicate failed
    /// the predicate itself; indicates an engine defect, never user error.
    #[error("join of qualifying normal subgroups fails the defining predicate")]
    JoinPredicateFailure,
}
