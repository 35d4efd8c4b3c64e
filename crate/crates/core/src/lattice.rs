//! Complete subgroup enumeration, normal structure, and chief factors.

use std::cell::{OnceCell, RefCell};
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::quotient::{self, QuotientView};
use crate::structure;
use crate::subgroup::{self, Subgroup};

/// Default budget on the number of subgroups enumerated for one group.
pub const DEFAULT_LATTICE_CAP: usize = 100_000;

/// A chief pair (K, L): both normal in G, with L/K minimal normal in G/K.
#[derive(Clone, Debug)]
pub struct ChiefPair {
    pub kernel: Subgroup,
    pub above: Subgroup,
    pub factor_order: u32,
}

pub(crate) struct Entry {
    pub(crate) set: ElemSet,
    pub(crate) gens: Vec<u16>,
    pub(crate) order: u32,
}

/// Memo tables shared by the predicate layers. Everything here is interior
/// mutability over deterministic computations, so a lattice is cheap to query
/// repeatedly but deliberately not Sync; parallelism happens across groups.
#[derive(Default)]
pub(crate) struct Caches {
    pub(crate) subnormal: RefCell<HashMap<u32, bool>>,
    pub(crate) derived: RefCell<HashMap<u32, u32>>,
    pub(crate) pi_property: RefCell<HashMap<u32, bool>>,
    pub(crate) pi_normal: RefCell<HashMap<u32, Option<(u32, u32)>>>,
    pub(crate) pi_supplemented: RefCell<HashMap<u32, Option<(u32, u32)>>>,
    pub(crate) pnilp_supplement: RefCell<HashMap<(u32, u32), Option<u32>>>,
    pub(crate) sub_pnilp: RefCell<HashMap<(u32, u32), bool>>,
    pub(crate) sub_soluble: RefCell<HashMap<u32, bool>>,
    pub(crate) sub_nilpotent: RefCell<HashMap<u32, bool>>,
    pub(crate) quotient_pnilp: RefCell<HashMap<(u32, u32), bool>>,
    pub(crate) group_pnilp: RefCell<HashMap<u32, bool>>,
    pub(crate) as_group: RefCell<HashMap<u32, Arc<FiniteGroup>>>,
    pub(crate) quotients: RefCell<HashMap<u32, Rc<QuotientView>>>,
    pub(crate) gen_fitting: RefCell<HashMap<u32, ElemSet>>,
    pub(crate) quaternion_free: RefCell<HashMap<u32, bool>>,
    pub(crate) hypercenter: OnceCell<u32>,
    pub(crate) u_hypercenter: OnceCell<Result<u32, GroupError>>,
    pub(crate) a4_free: OnceCell<bool>,
}

/// The full subgroup lattice of one group, in canonical order.
///
/// Entry i precedes entry j when (order, element set) of i is smaller; the
/// trivial subgroup is entry 0 and the whole group is the last entry. All
/// witness searches in the predicate layers walk entries in this order.
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    entries: Vec<Entry>,
    index: HashMap<ElemSet, u32>,
    by_order: BTreeMap<u32, Vec<u32>>,
    normal_flags: Vec<bool>,
    normals: Vec<u32>,
    chief: Vec<(u32, u32, u32)>,
    pub(crate) caches: Caches,
}

impl SubgroupLattice {
    /// Enumerates every subgroup by cyclic extension: seed with all cyclic
    /// subgroups, then repeatedly extend each known subgroup by each outside
    /// element until no new subgroup appears.
    pub fn build(group: &Arc<FiniteGroup>, cap: usize) -> Result<SubgroupLattice, GroupError> {
        let n = group.order();
        let mut sets: Vec<(ElemSet, Vec<u16>)> = Vec::new();
        let mut index: HashMap<ElemSet, u32> = HashMap::new();
        let trivial = ElemSet::singleton(n, 0);
        index.insert(trivial.clone(), 0);
        sets.push((trivial, Vec::new()));
        for x in 1..n as u16 {
            let set = group.close_indices(&[x]);
            if !index.contains_key(&set) {
                index.insert(set.clone(), sets.len() as u32);
                sets.push((set, vec![x]));
            }
        }
        let mut head = 0;
        while head < sets.len() {
            let (current_set, current_gens) = {
                let (s, g) = &sets[head];
                (s.clone(), g.clone())
            };
            head += 1;
            let mut seed = current_gens.clone();
            for x in 1..n as u16 {
                if current_set.contains(x) {
                    continue;
                }
                seed.push(x);
                let bigger = group.close_indices(&seed);
                seed.pop();
                if !index.contains_key(&bigger) {
                    if sets.len() >= cap {
                        return Err(GroupError::LatticeBudgetExceeded { cap });
                    }
                    let mut gens = current_gens.clone();
                    gens.push(x);
                    index.insert(bigger.clone(), sets.len() as u32);
                    sets.push((bigger, gens));
                }
            }
        }
        // Canonical order: ascending subgroup order, then element-set order.
        sets.sort_by(|a, b| (a.0.count(), &a.0).cmp(&(b.0.count(), &b.0)));
        let entries: Vec<Entry> = sets
            .into_iter()
            .map(|(set, gens)| {
                let order = set.count();
                Entry { set, gens, order }
            })
            .collect();
        let index: HashMap<ElemSet, u32> = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.set.clone(), i as u32))
            .collect();
        let mut by_order: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            by_order.entry(e.order).or_default().push(i as u32);
        }
        let normal_flags: Vec<bool> = entries
            .iter()
            .map(|e| structure::is_normal_set(group, &e.set, &e.gens))
            .collect();
        let normals: Vec<u32> = (0..entries.len() as u32)
            .filter(|&i| normal_flags[i as usize])
            .collect();
        let chief = chief_pairs_of(group, &entries, &normals);
        Ok(SubgroupLattice {
            group: group.clone(),
            entries,
            index,
            by_order,
            normal_flags,
            normals,
            chief,
            caches: Caches::default(),
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn order_of(&self, idx: u32) -> u32 {
        self.entries[idx as usize].order
    }

    pub fn set_of(&self, idx: u32) -> &ElemSet {
        &self.entries[idx as usize].set
    }

    pub fn gens_of(&self, idx: u32) -> &[u16] {
        &self.entries[idx as usize].gens
    }

    /// Materializes entry `idx` as a Subgroup value.
    pub fn subgroup(&self, idx: u32) -> Subgroup {
        let e = &self.entries[idx as usize];
        subgroup::subgroup_from_set(&self.group, e.set.clone(), e.gens.clone())
    }

    pub fn trivial_index(&self) -> u32 {
        0
    }

    pub fn full_index(&self) -> u32 {
        self.entries.len() as u32 - 1
    }

    pub fn index_of_set(&self, set: &ElemSet) -> Option<u32> {
        self.index.get(set).copied()
    }

    /// Lattice position of a subgroup of the same parent. The lattice is
    /// complete, so membership can only fail on a foreign parent.
    pub fn index_of(&self, h: &Subgroup) -> Result<u32, GroupError> {
        if h.parent().id() != self.group.id() {
            return Err(GroupError::WrongParent);
        }
        Ok(self
            .index_of_set(h.set())
            .expect("every subgroup of the parent is enumerated"))
    }

    /// Entry indices with the given order, ascending; empty when none.
    pub fn of_order(&self, order: u32) -> &[u32] {
        self.by_order.get(&order).map_or(&[], |v| v.as_slice())
    }

    /// Entry indices of the given order contained in `within`, ascending.
    pub fn of_order_within(&self, order: u32, within: &ElemSet) -> Vec<u32> {
        self.of_order(order)
            .iter()
            .copied()
            .filter(|&i| self.entries[i as usize].set.is_subset_of(within))
            .collect()
    }

    pub fn orders(&self) -> impl Iterator<Item = u32> + '_ {
        self.by_order.keys().copied()
    }

    pub fn is_normal_entry(&self, idx: u32) -> bool {
        self.normal_flags[idx as usize]
    }

    /// Entry indices of the normal subgroups, ascending in canonical order.
    pub fn normal_entries(&self) -> &[u32] {
        &self.normals
    }

    /// Chief pairs as (kernel entry, above entry, factor order), sorted by
    /// kernel then above in canonical order.
    pub fn chief_pairs_compact(&self) -> &[(u32, u32, u32)] {
        &self.chief
    }

    pub fn chief_pairs(&self) -> Vec<ChiefPair> {
        self.chief
            .iter()
            .map(|&(k, l, f)| ChiefPair {
                kernel: self.subgroup(k),
                above: self.subgroup(l),
                factor_order: f,
            })
            .collect()
    }

    /// Minimal normal subgroups: the chief factors over the trivial kernel.
    pub fn minimal_normals(&self) -> Vec<u32> {
        self.chief
            .iter()
            .take_while(|&&(k, _, _)| k == 0)
            .map(|&(_, l, _)| l)
            .collect()
    }

    /// One chief series, chosen greedily: at each step the canonically least
    /// minimal normal subgroup above the current term. Returns entry indices
    /// from the trivial subgroup up to the whole group.
    pub fn chief_series(&self) -> Vec<u32> {
        let mut series = vec![self.trivial_index()];
        let mut current = self.trivial_index();
        while current != self.full_index() {
            let at = self.chief.partition_point(|&(k, _, _)| k < current);
            debug_assert!(at < self.chief.len() && self.chief[at].0 == current);
            let next = self.chief[at].1;
            series.push(next);
            current = next;
        }
        series
    }

    /// Orders of the factors of the canonical chief series, bottom up.
    pub fn chief_factor_orders(&self) -> Vec<u32> {
        let series = self.chief_series();
        series
            .windows(2)
            .map(|w| self.order_of(w[1]) / self.order_of(w[0]))
            .collect()
    }

    /// Maximal proper subgroups of entry `idx`, ascending.
    ///
    /// For subgroups of prime power order every maximal subgroup has index p,
    /// which turns the scan into a single order bucket.
    pub fn maximal_subgroups_of(&self, idx: u32) -> Vec<u32> {
        let target = &self.entries[idx as usize];
        if target.order == 1 {
            return Vec::new();
        }
        if let Some(p) = prime_power_base(target.order) {
            return self.of_order_within(target.order / p, &target.set);
        }
        let mut kept: Vec<u32> = Vec::new();
        for (&ord, bucket) in self.by_order.range(..target.order).rev() {
            if target.order % ord != 0 {
                continue;
            }
            for &c in bucket {
                if !self.entries[c as usize].set.is_subset_of(&target.set) {
                    continue;
                }
                let covered = kept
                    .iter()
                    .any(|&m| self.entries[c as usize].set.is_subset_of(&self.entries[m as usize].set));
                if !covered {
                    kept.push(c);
                }
            }
        }
        kept.sort_unstable();
        kept
    }

    /// Maximal proper subgroups of the whole group.
    pub fn maximal_subgroups(&self) -> Vec<u32> {
        self.maximal_subgroups_of(self.full_index())
    }

    /// Whether entry `idx` is subnormal: the chain of iterated normal
    /// closures G ⊵ H^G ⊵ H^{H^G} ⊵ ... descends all the way to H.
    pub fn is_subnormal_entry(&self, idx: u32) -> bool {
        if let Some(&v) = self.caches.subnormal.borrow().get(&idx) {
            return v;
        }
        let h = &self.entries[idx as usize];
        let mut ambient = self.full_index();
        let result = loop {
            if ambient == idx {
                break true;
            }
            let ncl = structure::normal_closure_set(
                &self.group,
                &h.gens,
                &self.entries[ambient as usize].gens,
            );
            let next = self
                .index_of_set(&ncl)
                .expect("normal closure is a subgroup");
            if next == ambient {
                break false;
            }
            ambient = next;
        };
        self.caches.subnormal.borrow_mut().insert(idx, result);
        result
    }

    /// Quotient by a normal entry, memoized.
    pub fn quotient_view(&self, kernel_idx: u32) -> Result<Rc<QuotientView>, GroupError> {
        if !self.normal_flags[kernel_idx as usize] {
            return Err(GroupError::NotNormal);
        }
        if let Some(q) = self.caches.quotients.borrow().get(&kernel_idx) {
            return Ok(q.clone());
        }
        let view = Rc::new(quotient::quotient(&self.group, &self.subgroup(kernel_idx))?);
        self.caches
            .quotients
            .borrow_mut()
            .insert(kernel_idx, view.clone());
        Ok(view)
    }

    /// Entry `idx` as a standalone group, memoized.
    pub fn subgroup_group(&self, idx: u32) -> Arc<FiniteGroup> {
        if let Some(g) = self.caches.as_group.borrow().get(&idx) {
            return g.clone();
        }
        let g = self.subgroup(idx).to_group();
        self.caches.as_group.borrow_mut().insert(idx, g.clone());
        g
    }
}

/// Largest prime p with `n` a power of p, if any (n ≥ 2).
fn prime_power_base(n: u32) -> Option<u32> {
    if n < 2 {
        return None;
    }
    let mut m = n;
    let mut p = 0;
    for d in 2..=n {
        if d * d > m {
            break;
        }
        if m % d == 0 {
            p = d;
            while m % d == 0 {
                m /= d;
            }
            break;
        }
    }
    if p == 0 {
        // n itself is prime.
        return Some(n);
    }
    if m == 1 {
        Some(p)
    } else {
        None
    }
}

/// All chief pairs: for each normal K, the normals L above K with nothing
/// normal strictly between. Prime factor order short-circuits the scan.
fn chief_pairs_of(
    group: &Arc<FiniteGroup>,
    entries: &[Entry],
    normals: &[u32],
) -> Vec<(u32, u32, u32)> {
    let _ = group;
    let mut pairs = Vec::new();
    for &k in normals {
        let k_entry = &entries[k as usize];
        let above: Vec<u32> = normals
            .iter()
            .copied()
            .filter(|&j| j != k && k_entry.set.is_subset_of(&entries[j as usize].set))
            .collect();
        for &l in &above {
            let l_entry = &entries[l as usize];
            let factor = l_entry.order / k_entry.order;
            let minimal = if is_prime(factor) {
                true
            } else {
                !above.iter().any(|&m| {
                    m != l
                        && entries[m as usize].order < l_entry.order
                        && entries[m as usize].set.is_subset_of(&l_entry.set)
                })
            };
            if minimal {
                pairs.push((k, l, factor));
            }
        }
    }
    pairs
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
