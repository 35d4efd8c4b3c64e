//! Subgroups as index sets inside a fixed parent group.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::perm::Perm;

/// A subgroup of a specific parent group, stored as a bitset of element
/// indices plus a small generating set of indices.
///
/// Equality and ordering ignore the generators: two subgroups are equal when
/// they have the same parent and the same element set. The ordering used
/// everywhere for canonicity is (order, element-set lex).
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    set: ElemSet,
    gens: Vec<u16>,
}

impl Subgroup {
    pub(crate) fn from_parts(parent: Arc<FiniteGroup>, set: ElemSet, gens: Vec<u16>) -> Subgroup {
        debug_assert!(set.contains(0));
        Subgroup { parent, set, gens }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn order(&self) -> u32 {
        self.set.count()
    }

    pub fn index_in_parent(&self) -> u32 {
        self.parent.order() as u32 / self.order()
    }

    pub fn gen_indices(&self) -> &[u16] {
        &self.gens
    }

    pub fn generators(&self) -> Vec<Perm> {
        self.gens.iter().map(|&i| self.parent.elem(i).clone()).collect()
    }

    pub fn contains_index(&self, index: u16) -> bool {
        self.set.contains(index)
    }

    pub fn contains_perm(&self, p: &Perm) -> bool {
        self.parent.index_of(p).is_some_and(|i| self.set.contains(i))
    }

    /// Member element indices, ascending.
    pub fn element_indices(&self) -> impl Iterator<Item = u16> + '_ {
        self.set.iter()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_full(&self) -> bool {
        self.order() as usize == self.parent.order()
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        self.parent.id() == other.parent.id()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> Result<bool, GroupError> {
        if !self.same_parent(other) {
            return Err(GroupError::WrongParent);
        }
        Ok(self.set.is_subset_of(&other.set))
    }

    /// Multiset of member element orders, ascending. Cheap structural
    /// fingerprint for reporting and tests.
    pub fn element_order_profile(&self) -> Vec<u32> {
        let mut orders: Vec<u32> = self.set.iter().map(|i| self.parent.order_of(i)).collect();
        orders.sort_unstable();
        orders
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| self.parent.mul(a, b) == self.parent.mul(b, a)))
    }

    /// Whether some member has order equal to the subgroup order.
    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.set.iter().any(|i| self.parent.order_of(i) == n)
    }

    /// Standalone group on the same points with exactly these elements.
    /// Element order (and hence indexing) is preserved up to the subset map.
    pub fn to_group(&self) -> Arc<FiniteGroup> {
        let members: Vec<u16> = self.set.iter().collect();
        let elements: Vec<Perm> = members.iter().map(|&i| self.parent.elem(i).clone()).collect();
        let mut g = FiniteGroup::from_sorted_elements(self.parent.degree(), elements);
        let gens: Vec<u16> = self
            .gens
            .iter()
            .map(|gi| members.binary_search(gi).expect("generators are members") as u16)
            .collect();
        g.set_gens(gens);
        Arc::new(g)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Subgroup) -> bool {
        self.parent.id() == other.parent.id() && self.set == other.set
    }
}

impl Eq for Subgroup {}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, gens", self.order())?;
        for g in &self.gens {
            write!(f, " {}", self.parent.elem(*g))?;
        }
        write!(f, ")")
    }
}

/// Subgroup generated by the elements at `seed` indices.
pub fn subgroup_from_indices(parent: &Arc<FiniteGroup>, seed: &[u16]) -> Subgroup {
    let set = parent.close_indices(seed);
    let mut gens: Vec<u16> = seed.iter().copied().filter(|&i| i != 0).collect();
    gens.sort_unstable();
    gens.dedup();
    Subgroup::from_parts(parent.clone(), set, gens)
}

/// Subgroup generated by the given permutations, which must be members.
pub fn subgroup_from_perms(parent: &Arc<FiniteGroup>, gens: &[Perm]) -> Result<Subgroup, GroupError> {
    let seed: Result<Vec<u16>, GroupError> = gens
        .iter()
        .map(|p| parent.index_of(p).ok_or(GroupError::NotAnElement))
        .collect();
    Ok(subgroup_from_indices(parent, &seed?))
}

/// Subgroup from an already-closed element set with known generators.
pub fn subgroup_from_set(parent: &Arc<FiniteGroup>, set: ElemSet, gens: Vec<u16>) -> Subgroup {
    debug_assert_eq!(set.universe(), parent.order());
    Subgroup::from_parts(parent.clone(), set, gens)
}

/// The one-element subgroup.
pub fn trivial_subgroup(parent: &Arc<FiniteGroup>) -> Subgroup {
    Subgroup::from_parts(parent.clone(), ElemSet::singleton(parent.order(), 0), Vec::new())
}

/// The whole group as a subgroup of itself.
pub fn full_subgroup(parent: &Arc<FiniteGroup>) -> Subgroup {
    Subgroup::from_parts(
        parent.clone(),
        parent.full_set(),
        parent.gen_indices().to_vec(),
    )
}
