//! Per-group evaluation context.
//!
//! One `GroupCtx` wraps one group's subgroup lattice for the duration of all
//! checks on that group, memoizing the classifiers that several checks share:
//! p-nilpotency of the group, of subgroup entries and of quotients, and
//! normalizer entries of Sylow subgroups.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use pinilot_core::invariants::{
    entry_p_nilpotent, is_p_nilpotent, is_p_soluble, is_p_supersoluble, pi_of,
    quotient_p_nilpotent,
};
use pinilot_core::pitheory::{entry_p_nilpotent_supplement, entry_pi_normal};
use pinilot_core::{structure, ElemSet, FiniteGroup, SubgroupLattice};

use crate::verdict::{SubgroupDesc, Witness};

pub struct GroupCtx<'a> {
    pub name: &'a str,
    pub lat: &'a SubgroupLattice,
    p_nilpotent: RefCell<HashMap<u32, bool>>,
    p_soluble: RefCell<HashMap<u32, bool>>,
    p_supersoluble: RefCell<HashMap<u32, bool>>,
    quotient_nilp: RefCell<HashMap<(u32, u32), bool>>,
    normalizer: RefCell<HashMap<u32, u32>>,
    entry_nilp: RefCell<HashMap<(u32, u32), bool>>,
}

impl<'a> GroupCtx<'a> {
    pub fn new(name: &'a str, lat: &'a SubgroupLattice) -> Self {
        GroupCtx {
            name,
            lat,
            p_nilpotent: RefCell::new(HashMap::new()),
            p_soluble: RefCell::new(HashMap::new()),
            p_supersoluble: RefCell::new(HashMap::new()),
            quotient_nilp: RefCell::new(HashMap::new()),
            normalizer: RefCell::new(HashMap::new()),
            entry_nilp: RefCell::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.lat.group()
    }

    pub fn order(&self) -> u64 {
        self.group().order() as u64
    }

    /// Prime divisors of the group order, ascending.
    pub fn primes(&self) -> Vec<u32> {
        pi_of(self.order()).primes().to_vec()
    }

    pub fn is_p_nilpotent(&self, p: u32) -> bool {
        *self
            .p_nilpotent
            .borrow_mut()
            .entry(p)
            .or_insert_with(|| is_p_nilpotent(self.lat, p))
    }

    pub fn is_p_soluble(&self, p: u32) -> bool {
        *self
            .p_soluble
            .borrow_mut()
            .entry(p)
            .or_insert_with(|| is_p_soluble(self.lat, p))
    }

    pub fn is_p_supersoluble(&self, p: u32) -> bool {
        *self
            .p_supersoluble
            .borrow_mut()
            .entry(p)
            .or_insert_with(|| is_p_supersoluble(self.lat, p))
    }

    /// Whether G/N is p-nilpotent, for a normal entry.
    pub fn quotient_p_nilpotent(&self, n_idx: u32, p: u32) -> bool {
        *self
            .quotient_nilp
            .borrow_mut()
            .entry((n_idx, p))
            .or_insert_with(|| quotient_p_nilpotent(self.lat, n_idx, p))
    }

    /// Lattice entry of the normalizer of an entry.
    pub fn normalizer_of(&self, idx: u32) -> u32 {
        if let Some(&n) = self.normalizer.borrow().get(&idx) {
            return n;
        }
        let sub = self.lat.subgroup(idx);
        let norm = structure::normalizer(self.group(), &sub)
            .expect("subgroup belongs to its parent");
        let n = self
            .lat
            .index_of(&norm)
            .expect("normalizer is a subgroup of the same group");
        self.normalizer.borrow_mut().insert(idx, n);
        n
    }

    /// Whether a lattice entry is p-nilpotent as a group in its own right.
    pub fn entry_p_nilpotent(&self, idx: u32, p: u32) -> bool {
        *self
            .entry_nilp
            .borrow_mut()
            .entry((idx, p))
            .or_insert_with(|| entry_p_nilpotent(self.lat, idx, p))
    }
}

/// Result of sweeping one subgroup-quantified hypothesis clause.
#[derive(Debug, Clone, Copy)]
pub struct ClauseOutcome {
    pub holds: bool,
    /// Subgroups inspected, including a failing one.
    pub checked: u64,
    /// First lattice entry violating the clause, in canonical order.
    pub failing: Option<u32>,
}

impl ClauseOutcome {
    pub fn vacuous() -> Self {
        ClauseOutcome {
            holds: true,
            checked: 0,
            failing: None,
        }
    }
}

/// Does every subgroup of the given order inside `within` either have a
/// p-nilpotent supplement in G or satisfy pi-normality? With `cyclic_only`
/// the quantifier runs over cyclic subgroups of that order.
pub fn supplement_or_pi_normal_clause(
    lat: &SubgroupLattice,
    within: &ElemSet,
    order: u32,
    p: u32,
    cyclic_only: bool,
) -> ClauseOutcome {
    let mut checked = 0u64;
    for h in lat.of_order_within(order, within) {
        if cyclic_only && !entry_has_element_of_order(lat, h, order) {
            continue;
        }
        checked += 1;
        let ok = entry_p_nilpotent_supplement(lat, h, p).is_some()
            || entry_pi_normal(lat, h).is_some();
        if !ok {
            return ClauseOutcome {
                holds: false,
                checked,
                failing: Some(h),
            };
        }
    }
    ClauseOutcome {
        holds: true,
        checked,
        failing: None,
    }
}

pub fn entry_has_element_of_order(lat: &SubgroupLattice, idx: u32, ord: u32) -> bool {
    let group = lat.group();
    lat.set_of(idx).iter().any(|e| group.order_of(e) == ord)
}

/// Witness for a failing subgroup-quantified clause.
pub fn clause_witness(lat: &SubgroupLattice, clause: &str, failing: u32, p: u32) -> Witness {
    let desc = SubgroupDesc::of_entry(lat, failing);
    let detail = format!(
        "subgroup of order {} has no {p}-nilpotent supplement and is not pi-normal",
        desc.order
    );
    Witness::clause(clause).with_subgroup(desc).with_detail(detail)
}
