//! The Π-property, Π-supplementation and Π-normality of subgroups.
//!
//! H has the Π-property in G when for every chief pair (K, L) the index of
//! the normalizer of HK/K ∩ L/K in G/K is a π(HK/K ∩ L/K)-number. H is
//! Π-supplemented when some T ≤ G satisfies HT = G together with an
//! intermediate subgroup H ∩ T ≤ I ≤ H having the Π-property; Π-normality
//! additionally requires T to be subnormal in G.
//!
//! Witness searches walk the lattice in canonical order, so the reported
//! (T, I) pair is the canonically least witness.

use crate::elemset::ElemSet;
use crate::error::GroupError;
use crate::invariants::{self, PrimeSet};
use crate::lattice::SubgroupLattice;
use crate::structure;
use crate::subgroup::Subgroup;

/// One chief pair at which a subgroup misses the Π-property.
#[derive(Clone, Debug)]
pub struct PiPropertyFailure {
    /// |K| for the chief pair (K, L).
    pub kernel_order: u32,
    /// |L| for the chief pair (K, L).
    pub above_order: u32,
    /// |HK/K ∩ L/K|.
    pub intersection_order: u32,
    /// Index of the normalizer of that intersection in G/K.
    pub normalizer_index: u64,
    /// Primes dividing the normalizer index that do not divide the
    /// intersection order.
    pub offending_primes: PrimeSet,
}

/// A Π-supplementation witness: HT = G with H ∩ T ≤ I ≤ H and I having the
/// Π-property.
#[derive(Clone, Debug)]
pub struct PiWitness {
    pub supplement: Subgroup,
    pub intermediate: Subgroup,
}

fn pair_failure(lat: &SubgroupLattice, h_set: &ElemSet, k: u32, l: u32) -> Option<PiPropertyFailure> {
    if h_set.is_subset_of(lat.set_of(k)) {
        // HK/K is trivial, so the intersection is trivial and the
        // normalizer is everything.
        return None;
    }
    let qv = lat.quotient_view(k).expect("chief pair kernels are normal");
    let q = qv.group();
    let mut x = qv.project_set(h_set);
    x.intersect_with(&qv.project_set(lat.set_of(l)));
    let x_count = x.count();
    if x_count == 1 {
        return None;
    }
    let x_gens = structure::reduce_generators(q, &x);
    let normalizer = structure::normalizer_set(q, &x, &x_gens);
    let index = q.order() as u64 / normalizer.count() as u64;
    let pi = invariants::pi_of(x_count as u64);
    let offending: Vec<u32> = invariants::pi_of(index)
        .primes()
        .iter()
        .copied()
        .filter(|&p| !pi.contains(p))
        .collect();
    if offending.is_empty() {
        return None;
    }
    Some(PiPropertyFailure {
        kernel_order: lat.order_of(k),
        above_order: lat.order_of(l),
        intersection_order: x_count,
        normalizer_index: index,
        offending_primes: PrimeSet::from_sorted_primes(offending),
    })
}

/// Π-property of the entry, memoized. Normal subgroups short-circuit to
/// true: HK/K ∩ L/K is then normal in G/K, so its normalizer is everything
/// and every chief pair passes.
pub fn entry_pi_property(lat: &SubgroupLattice, idx: u32) -> bool {
    if let Some(&v) = lat.caches.pi_property.borrow().get(&idx) {
        return v;
    }
    let result = if lat.is_normal_entry(idx) {
        true
    } else {
        entry_pi_property_unshortcut(lat, idx)
    };
    lat.caches.pi_property.borrow_mut().insert(idx, result);
    result
}

/// Π-property by checking every chief pair, with no normality shortcut.
/// Exists so the shortcut is testable against the definition.
pub fn entry_pi_property_unshortcut(lat: &SubgroupLattice, idx: u32) -> bool {
    let h_set = lat.set_of(idx);
    lat.chief_pairs_compact()
        .iter()
        .all(|&(k, l, _)| pair_failure(lat, h_set, k, l).is_none())
}

pub fn has_pi_property(lat: &SubgroupLattice, h: &Subgroup) -> Result<bool, GroupError> {
    Ok(entry_pi_property(lat, lat.index_of(h)?))
}

/// Every chief pair at which H misses the Π-property, in chief pair order.
/// Always evaluates the definition directly.
pub fn pi_property_failures(
    lat: &SubgroupLattice,
    h: &Subgroup,
) -> Result<Vec<PiPropertyFailure>, GroupError> {
    let idx = lat.index_of(h)?;
    let h_set = lat.set_of(idx);
    Ok(lat
        .chief_pairs_compact()
        .iter()
        .filter_map(|&(k, l, _)| pair_failure(lat, h_set, k, l))
        .collect())
}

fn pi_witness_search(
    lat: &SubgroupLattice,
    h_idx: u32,
    need_subnormal: bool,
) -> Option<(u32, u32)> {
    let g_order = lat.group().order() as u64;
    let h_set = lat.set_of(h_idx);
    let h_ord = lat.order_of(h_idx) as u64;
    for t in 0..lat.len() as u32 {
        let t_ord = lat.order_of(t) as u64;
        if h_ord * t_ord < g_order {
            continue;
        }
        let cap = h_set.intersection_count(lat.set_of(t)) as u64;
        if h_ord * t_ord != g_order * cap {
            continue;
        }
        if need_subnormal && !lat.is_subnormal_entry(t) {
            continue;
        }
        let cap_set = h_set.intersection(lat.set_of(t));
        for i in 0..lat.len() as u32 {
            let i_ord = lat.order_of(i) as u64;
            if i_ord < cap || h_ord % i_ord != 0 {
                continue;
            }
            if i_ord > h_ord {
                break;
            }
            let i_set = lat.set_of(i);
            if cap_set.is_subset_of(i_set)
                && i_set.is_subset_of(h_set)
                && entry_pi_property(lat, i)
            {
                return Some((t, i));
            }
        }
    }
    None
}

/// Least (T, I) witness that the entry is Π-supplemented, if any.
pub fn entry_pi_supplemented(lat: &SubgroupLattice, h_idx: u32) -> Option<(u32, u32)> {
    if let Some(v) = lat.caches.pi_supplemented.borrow().get(&h_idx) {
        return *v;
    }
    let result = pi_witness_search(lat, h_idx, false);
    lat.caches
        .pi_supplemented
        .borrow_mut()
        .insert(h_idx, result);
    result
}

/// Least (T, I) witness that the entry is Π-normal, if any: as for
/// Π-supplementation but with T subnormal.
pub fn entry_pi_normal(lat: &SubgroupLattice, h_idx: u32) -> Option<(u32, u32)> {
    if let Some(v) = lat.caches.pi_normal.borrow().get(&h_idx) {
        return *v;
    }
    let result = pi_witness_search(lat, h_idx, true);
    lat.caches.pi_normal.borrow_mut().insert(h_idx, result);
    result
}

pub fn is_pi_supplemented(
    lat: &SubgroupLattice,
    h: &Subgroup,
) -> Result<Option<PiWitness>, GroupError> {
    let idx = lat.index_of(h)?;
    Ok(entry_pi_supplemented(lat, idx).map(|(t, i)| PiWitness {
        supplement: lat.subgroup(t),
        intermediate: lat.subgroup(i),
    }))
}

pub fn is_pi_normal(lat: &SubgroupLattice, h: &Subgroup) -> Result<Option<PiWitness>, GroupError> {
    let idx = lat.index_of(h)?;
    Ok(entry_pi_normal(lat, idx).map(|(t, i)| PiWitness {
        supplement: lat.subgroup(t),
        intermediate: lat.subgroup(i),
    }))
}

/// Least T with HT = G and T p-nilpotent, if any. Memoized.
pub fn entry_p_nilpotent_supplement(lat: &SubgroupLattice, h_idx: u32, p: u32) -> Option<u32> {
    let key = (h_idx, p);
    if let Some(v) = lat.caches.pnilp_supplement.borrow().get(&key) {
        return *v;
    }
    let g_order = lat.group().order() as u64;
    let h_set = lat.set_of(h_idx);
    let h_ord = lat.order_of(h_idx) as u64;
    let mut result = None;
    for t in 0..lat.len() as u32 {
        let t_ord = lat.order_of(t) as u64;
        if h_ord * t_ord < g_order {
            continue;
        }
        let cap = h_set.intersection_count(lat.set_of(t)) as u64;
        if h_ord * t_ord != g_order * cap {
            continue;
        }
        if invariants::entry_p_nilpotent(lat, t, p) {
            result = Some(t);
            break;
        }
    }
    lat.caches
        .pnilp_supplement
        .borrow_mut()
        .insert(key, result);
    result
}

pub fn p_nilpotent_supplement(
    lat: &SubgroupLattice,
    h: &Subgroup,
    p: u32,
) -> Result<Option<Subgroup>, GroupError> {
    let idx = lat.index_of(h)?;
    Ok(entry_p_nilpotent_supplement(lat, idx, p).map(|t| lat.subgroup(t)))
}
