//! Prime arithmetic, characteristic subgroups, and group classifiers.
//!
//! Everything here is lattice-backed: the caller builds a `SubgroupLattice`
//! once and these functions answer from it, memoizing per entry where a
//! predicate is likely to be asked many times during a sweep.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::lattice::SubgroupLattice;
use crate::structure;
use crate::subgroup::Subgroup;

/// Sorted set of distinct primes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PrimeSet(Vec<u32>);

impl PrimeSet {
    /// Wraps an ascending list of distinct primes.
    pub fn from_sorted_primes(primes: Vec<u32>) -> PrimeSet {
        debug_assert!(primes.windows(2).all(|w| w[0] < w[1]));
        PrimeSet(primes)
    }

    pub fn contains(&self, p: u32) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn primes(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn is_prime(n: u64) -> bool {
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

/// π(n): the primes dividing n.
pub fn pi_of(n: u64) -> PrimeSet {
    let mut primes = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d as u32);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m as u32);
    }
    PrimeSet(primes)
}

/// Whether every prime divisor of n lies in π. 1 is a π-number for every π.
pub fn is_pi_number(n: u64, pi: &PrimeSet) -> bool {
    pi_of(n).0.iter().all(|p| pi.contains(*p))
}

/// Largest power of p dividing n.
pub fn p_part(n: u64, p: u32) -> u64 {
    let p = p as u64;
    let mut out = 1;
    let mut m = n;
    while m % p == 0 {
        out *= p;
        m /= p;
    }
    out
}

pub fn p_prime_part(n: u64, p: u32) -> u64 {
    n / p_part(n, p)
}

/// Exponent a with p^a exactly dividing n.
pub fn p_valuation(n: u64, p: u32) -> u32 {
    let p = p as u64;
    let mut a = 0;
    let mut m = n;
    while m % p == 0 {
        a += 1;
        m /= p;
    }
    a
}

fn group_order(lat: &SubgroupLattice) -> u64 {
    lat.group().order() as u64
}

/// The canonically first Sylow p-subgroup.
pub fn sylow_subgroup(lat: &SubgroupLattice, p: u32) -> Subgroup {
    lat.subgroup(sylow_entry(lat, p))
}

pub fn sylow_entry(lat: &SubgroupLattice, p: u32) -> u32 {
    let order = p_part(group_order(lat), p) as u32;
    lat.of_order(order)[0]
}

/// All Sylow p-subgroups, as lattice entries.
pub fn sylow_entries(lat: &SubgroupLattice, p: u32) -> &[u32] {
    let order = p_part(group_order(lat), p) as u32;
    lat.of_order(order)
}

/// Canonically first Sylow p-subgroup of the subgroup at `n_idx`.
pub fn sylow_entry_in(lat: &SubgroupLattice, n_idx: u32, p: u32) -> u32 {
    let order = p_part(lat.order_of(n_idx) as u64, p) as u32;
    lat.of_order_within(order, lat.set_of(n_idx))[0]
}

/// Hall p′-subgroups: subgroups whose order is the full p′-part of |G|.
/// May be empty; existence is not guaranteed outside soluble groups.
pub fn hall_p_prime_entries(lat: &SubgroupLattice, p: u32) -> Vec<u32> {
    let order = p_prime_part(group_order(lat), p) as u32;
    lat.of_order(order).to_vec()
}

/// O_p(G): the largest normal p-subgroup.
pub fn o_p_entry(lat: &SubgroupLattice, p: u32) -> u32 {
    let mut best = lat.trivial_index();
    for &n in lat.normal_entries() {
        let ord = lat.order_of(n) as u64;
        if ord > lat.order_of(best) as u64 && ord == p_part(ord, p) {
            best = n;
        }
    }
    best
}

pub fn o_p(lat: &SubgroupLattice, p: u32) -> Subgroup {
    lat.subgroup(o_p_entry(lat, p))
}

/// O_{p′}(G): the largest normal subgroup of order coprime to p.
pub fn o_p_prime_entry(lat: &SubgroupLattice, p: u32) -> u32 {
    let mut best = lat.trivial_index();
    for &n in lat.normal_entries() {
        let ord = lat.order_of(n) as u64;
        if ord > lat.order_of(best) as u64 && ord % p as u64 != 0 {
            best = n;
        }
    }
    best
}

pub fn o_p_prime(lat: &SubgroupLattice, p: u32) -> Subgroup {
    lat.subgroup(o_p_prime_entry(lat, p))
}

/// O^p(G): the subgroup generated by all elements of order coprime to p.
/// It is the smallest normal subgroup with p-group quotient.
pub fn p_residual(group: &Arc<FiniteGroup>, p: u32) -> Subgroup {
    let set = p_residual_set_within(group, &group.full_set(), p);
    let gens = structure::reduce_generators(group, &set);
    crate::subgroup::subgroup_from_set(group, set, gens)
}

fn p_residual_set_within(group: &FiniteGroup, within: &ElemSet, p: u32) -> ElemSet {
    let seeds: Vec<u16> = within
        .iter()
        .filter(|&x| group.order_of(x) % p != 0)
        .collect();
    group.close_indices(&seeds)
}

/// F(G): the Fitting subgroup, the product of all O_q(G).
pub fn fitting_entry(lat: &SubgroupLattice) -> u32 {
    let mut gens: Vec<u16> = Vec::new();
    for &q in pi_of(group_order(lat)).primes() {
        gens.extend_from_slice(lat.gens_of(o_p_entry(lat, q)));
    }
    let set = lat.group().close_indices(&gens);
    lat.index_of_set(&set).expect("product of normals is a subgroup")
}

pub fn fitting(lat: &SubgroupLattice) -> Subgroup {
    lat.subgroup(fitting_entry(lat))
}

/// Φ(G): intersection of the maximal subgroups.
pub fn frattini_entry(lat: &SubgroupLattice) -> u32 {
    let maxes = lat.maximal_subgroups();
    if maxes.is_empty() {
        return lat.full_index();
    }
    let mut acc = lat.set_of(maxes[0]).clone();
    for &m in &maxes[1..] {
        acc.intersect_with(lat.set_of(m));
    }
    lat.index_of_set(&acc)
        .expect("intersection of subgroups is a subgroup")
}

pub fn frattini(lat: &SubgroupLattice) -> Subgroup {
    lat.subgroup(frattini_entry(lat))
}

/// Z_∞(G): the hypercenter, the limit of the upper central series.
pub fn hypercenter_entry(lat: &SubgroupLattice) -> u32 {
    *lat.caches.hypercenter.get_or_init(|| {
        let mut z = lat.trivial_index();
        loop {
            let qv = lat.quotient_view(z).expect("series members are normal");
            let center = structure::center_set(qv.group());
            if center.count() == 1 {
                return z;
            }
            let preimage = qv.preimage_set(&center);
            let next = lat
                .index_of_set(&preimage)
                .expect("preimage of a subgroup is a subgroup");
            if next == z {
                return z;
            }
            z = next;
        }
    })
}

pub fn hypercenter(lat: &SubgroupLattice) -> Subgroup {
    lat.subgroup(hypercenter_entry(lat))
}

/// Derived subgroup of an entry, as an entry index. Memoized.
pub fn derived_entry(lat: &SubgroupLattice, idx: u32) -> u32 {
    if let Some(&d) = lat.caches.derived.borrow().get(&idx) {
        return d;
    }
    let sub = lat.subgroup(idx);
    let derived = structure::derived_of(&sub);
    let d = lat
        .index_of_set(derived.set())
        .expect("derived subgroup is a subgroup");
    lat.caches.derived.borrow_mut().insert(idx, d);
    d
}

/// Whether the derived series of the entry reaches the trivial subgroup.
pub fn entry_soluble(lat: &SubgroupLattice, idx: u32) -> bool {
    if let Some(&v) = lat.caches.sub_soluble.borrow().get(&idx) {
        return v;
    }
    let mut current = idx;
    let result = loop {
        let d = derived_entry(lat, current);
        if d == current {
            break current == lat.trivial_index();
        }
        current = d;
    };
    lat.caches.sub_soluble.borrow_mut().insert(idx, result);
    result
}

/// Whether the lower central series of the entry reaches the trivial
/// subgroup: L₁ = H, L_{k+1} = [L_k, H].
pub fn entry_nilpotent(lat: &SubgroupLattice, idx: u32) -> bool {
    if let Some(&v) = lat.caches.sub_nilpotent.borrow().get(&idx) {
        return v;
    }
    let group = lat.group();
    let h_members: Vec<u16> = lat.set_of(idx).iter().collect();
    let mut current = lat.set_of(idx).clone();
    let result = loop {
        let next = commutator_closure(group, &current, &h_members);
        if next.count() == 1 {
            break true;
        }
        if next == current {
            break false;
        }
        current = next;
    };
    lat.caches.sub_nilpotent.borrow_mut().insert(idx, result);
    result
}

fn commutator_closure(group: &FiniteGroup, a: &ElemSet, b: &[u16]) -> ElemSet {
    let mut comms: Vec<u16> = Vec::new();
    let mut seen = ElemSet::empty(group.order());
    for x in a.iter() {
        for &y in b {
            let c = group.mul(
                group.mul(group.inv(x), group.inv(y)),
                group.mul(x, y),
            );
            if seen.insert(c) {
                comms.push(c);
            }
        }
    }
    group.close_indices(&comms)
}

pub fn entry_abelian(lat: &SubgroupLattice, idx: u32) -> bool {
    let group = lat.group();
    let gens = lat.gens_of(idx);
    gens.iter()
        .all(|&a| gens.iter().all(|&b| group.mul(a, b) == group.mul(b, a)))
}

pub fn is_soluble(lat: &SubgroupLattice) -> bool {
    entry_soluble(lat, lat.full_index())
}

pub fn is_nilpotent(lat: &SubgroupLattice) -> bool {
    entry_nilpotent(lat, lat.full_index())
}

/// p-nilpotent: G has a normal p-complement, equivalently p does not divide
/// |O^p(G)|. Both characterizations are computed and must agree.
pub fn is_p_nilpotent(lat: &SubgroupLattice, p: u32) -> bool {
    if let Some(&v) = lat.caches.group_pnilp.borrow().get(&p) {
        return v;
    }
    let by_complement = {
        let target = p_prime_part(group_order(lat), p) as u32;
        lat.normal_entries().iter().any(|&n| lat.order_of(n) == target)
    };
    let by_residual = entry_p_nilpotent_uncached(lat, lat.full_index(), p);
    assert_eq!(
        by_complement, by_residual,
        "normal complement and residual characterizations of p-nilpotency disagree"
    );
    lat.caches.group_pnilp.borrow_mut().insert(p, by_residual);
    by_residual
}

/// p-nilpotency of the subgroup at `idx`, by the residual characterization:
/// p does not divide the order of the subgroup generated by the p′-elements.
pub fn entry_p_nilpotent(lat: &SubgroupLattice, idx: u32, p: u32) -> bool {
    if let Some(&v) = lat.caches.sub_pnilp.borrow().get(&(idx, p)) {
        return v;
    }
    let result = entry_p_nilpotent_uncached(lat, idx, p);
    lat.caches.sub_pnilp.borrow_mut().insert((idx, p), result);
    result
}

fn entry_p_nilpotent_uncached(lat: &SubgroupLattice, idx: u32, p: u32) -> bool {
    let residual = p_residual_set_within(lat.group(), lat.set_of(idx), p);
    residual.count() % p != 0
}

/// p-nilpotency of the quotient by the normal entry `n_idx`, decided inside
/// the parent: G/N is p-nilpotent exactly when some normal M ⊇ N has
/// |M : N| equal to the p′-part of |G : N|.
pub fn quotient_p_nilpotent(lat: &SubgroupLattice, n_idx: u32, p: u32) -> bool {
    let key = (n_idx, p);
    if let Some(&v) = lat.caches.quotient_pnilp.borrow().get(&key) {
        return v;
    }
    let n_ord = lat.order_of(n_idx) as u64;
    let quotient_pp = p_prime_part(group_order(lat) / n_ord, p);
    let result = if quotient_pp == 1 {
        true
    } else {
        let target = (n_ord * quotient_pp) as u32;
        let n_set = lat.set_of(n_idx);
        lat.normal_entries()
            .iter()
            .any(|&m| lat.order_of(m) == target && n_set.is_subset_of(lat.set_of(m)))
    };
    lat.caches.quotient_pnilp.borrow_mut().insert(key, result);
    result
}

/// p-soluble: every chief factor is a p-group or a p′-group.
pub fn is_p_soluble(lat: &SubgroupLattice, p: u32) -> bool {
    lat.chief_factor_orders()
        .iter()
        .all(|&f| f as u64 % p as u64 != 0 || f as u64 == p_part(f as u64, p))
}

/// Supersoluble: every chief factor has prime order.
pub fn is_supersoluble(lat: &SubgroupLattice) -> bool {
    lat.chief_factor_orders().iter().all(|&f| is_prime(f as u64))
}

/// p-supersoluble: chief factors divisible by p have order exactly p.
pub fn is_p_supersoluble(lat: &SubgroupLattice, p: u32) -> bool {
    lat.chief_factor_orders()
        .iter()
        .all(|&f| f % p != 0 || f == p)
}

/// F*(G): the generalized Fitting subgroup F(G)E(G), with E(G) generated by
/// the components (subnormal quasisimple subgroups).
pub fn generalized_fitting_entry(lat: &SubgroupLattice) -> u32 {
    generalized_fitting_entry_of(lat, lat.full_index())
}

pub fn generalized_fitting(lat: &SubgroupLattice) -> Subgroup {
    lat.subgroup(generalized_fitting_entry(lat))
}

/// F*(E) for the subgroup at `e_idx`, computed inside the parent's lattice.
pub fn generalized_fitting_entry_of(lat: &SubgroupLattice, e_idx: u32) -> u32 {
    if let Some(set) = lat.caches.gen_fitting.borrow().get(&e_idx) {
        return lat.index_of_set(set).expect("cached F* is a subgroup");
    }
    let result = if entry_nilpotent(lat, e_idx) {
        // F(E) = E for nilpotent E, and F* always contains F.
        e_idx
    } else {
        let group = lat.group();
        let e_set = lat.set_of(e_idx);
        let e_gens = lat.gens_of(e_idx);
        let e_ord = lat.order_of(e_idx) as u64;
        let mut gens: Vec<u16> = Vec::new();
        // Fitting part: the largest normal q-subgroup for each prime q.
        for &q in pi_of(e_ord).primes() {
            let mut best: Option<u32> = None;
            for ord in powers_of(q, e_ord) {
                for &c in lat.of_order(ord) {
                    let c_set = lat.set_of(c);
                    if c_set.is_subset_of(e_set)
                        && structure::is_normal_in_set(group, c_set, lat.gens_of(c), e_gens)
                    {
                        best = Some(c);
                    }
                }
            }
            if let Some(b) = best {
                gens.extend_from_slice(lat.gens_of(b));
            }
        }
        // Components: subnormal quasisimple subgroups. A quasisimple group
        // has nonabelian simple central quotient, so its order is at least
        // that of the smallest nonabelian simple group.
        for c in 0..lat.len() as u32 {
            let c_ord = lat.order_of(c) as u64;
            if c_ord < 60 || e_ord % c_ord != 0 || !lat.set_of(c).is_subset_of(e_set) {
                continue;
            }
            if derived_entry(lat, c) != c {
                continue;
            }
            if !is_subnormal_within(lat, c, e_idx) {
                continue;
            }
            if central_quotient_is_simple(lat, c) {
                gens.extend_from_slice(lat.gens_of(c));
            }
        }
        let set = group.close_indices(&gens);
        lat.index_of_set(&set)
            .expect("product of characteristic pieces is a subgroup")
    };
    lat.caches
        .gen_fitting
        .borrow_mut()
        .insert(e_idx, lat.set_of(result).clone());
    result
}

fn powers_of(q: u32, bound: u64) -> Vec<u32> {
    let mut out = Vec::new();
    let mut v = q as u64;
    while v <= bound {
        out.push(v as u32);
        v *= q as u64;
    }
    out
}

fn is_subnormal_within(lat: &SubgroupLattice, idx: u32, ambient_idx: u32) -> bool {
    let mut ambient = ambient_idx;
    loop {
        if ambient == idx {
            return true;
        }
        let ncl = structure::normal_closure_set(
            lat.group(),
            lat.gens_of(idx),
            lat.gens_of(ambient),
        );
        let next = lat.index_of_set(&ncl).expect("normal closure is a subgroup");
        if next == ambient {
            return false;
        }
        ambient = next;
    }
}

/// Whether H/Z(H) is simple, for the entry at `idx`.
fn central_quotient_is_simple(lat: &SubgroupLattice, idx: u32) -> bool {
    let h = lat.subgroup_group(idx);
    let z = structure::center(&h);
    let qv = match crate::quotient::quotient(&h, &z) {
        Ok(q) => q,
        Err(_) => return false,
    };
    let q = qv.group();
    if q.order() == 1 {
        return false;
    }
    // Simple: the normal closure of every nontrivial element is everything.
    (1..q.order() as u16).all(|x| {
        structure::normal_closure_set(q, &[x], q.gen_indices()).count() as usize == q.order()
    })
}

/// Largest normal subgroup N such that every chief pair (K, L) with L ≤ N
/// has prime factor order, computed as the join of all qualifying normals.
/// The join is re-verified; a failure would mean the predicate is not closed
/// under joins, which the caller treats as an engine defect.
pub fn u_hypercenter_entry(lat: &SubgroupLattice) -> Result<u32, GroupError> {
    lat.caches
        .u_hypercenter
        .get_or_init(|| {
            let bad: Vec<u32> = lat
                .chief_pairs_compact()
                .iter()
                .filter(|&&(_, _, f)| !is_prime(f as u64))
                .map(|&(_, l, _)| l)
                .collect();
            if bad.is_empty() {
                return Ok(lat.full_index());
            }
            let passes = |n: u32| -> bool {
                let n_set = lat.set_of(n);
                bad.iter().all(|&l| !lat.set_of(l).is_subset_of(n_set))
            };
            let mut gens: Vec<u16> = Vec::new();
            for &n in lat.normal_entries() {
                if passes(n) {
                    gens.extend_from_slice(lat.gens_of(n));
                }
            }
            let join_set = lat.group().close_indices(&gens);
            let join = lat
                .index_of_set(&join_set)
                .expect("join of normal subgroups is a subgroup");
            if passes(join) {
                Ok(join)
            } else {
                Err(GroupError::JoinPredicateFailure)
            }
        })
        .clone()
}

pub fn u_hypercenter(lat: &SubgroupLattice) -> Result<Subgroup, GroupError> {
    u_hypercenter_entry(lat).map(|i| lat.subgroup(i))
}

/// Whether no section of the entry at `p_idx` is quaternion of order 8.
/// An order 8 section is quaternion exactly when it is nonabelian with a
/// single involution.
pub fn entry_quaternion_free(lat: &SubgroupLattice, p_idx: u32) -> bool {
    if let Some(&v) = lat.caches.quaternion_free.borrow().get(&p_idx) {
        return v;
    }
    let result = quaternion_free_uncached(lat, p_idx);
    lat.caches
        .quaternion_free
        .borrow_mut()
        .insert(p_idx, result);
    result
}

fn quaternion_free_uncached(lat: &SubgroupLattice, p_idx: u32) -> bool {
    if entry_abelian(lat, p_idx) {
        return true;
    }
    let group = lat.group();
    let top_set = lat.set_of(p_idx);
    let top_ord = lat.order_of(p_idx);
    for h in 0..lat.len() as u32 {
        let h_ord = lat.order_of(h);
        if h_ord % 8 != 0 || top_ord % h_ord != 0 || !lat.set_of(h).is_subset_of(top_set) {
            continue;
        }
        let h_set = lat.set_of(h);
        let h_gens = lat.gens_of(h);
        for n in lat.of_order_within(h_ord / 8, h_set) {
            let n_set = lat.set_of(n);
            if !structure::is_normal_in_set(group, n_set, lat.gens_of(n), h_gens) {
                continue;
            }
            let nonabelian_section = h_gens.iter().any(|&a| {
                h_gens.iter().any(|&b| {
                    let comm = group.mul(
                        group.mul(group.inv(a), group.inv(b)),
                        group.mul(a, b),
                    );
                    !n_set.contains(comm)
                })
            });
            if !nonabelian_section {
                continue;
            }
            let involution_members = h_set
                .iter()
                .filter(|&x| !n_set.contains(x) && n_set.contains(group.mul(x, x)))
                .count() as u32;
            if involution_members == lat.order_of(n) {
                return false;
            }
        }
    }
    true
}

/// Whether no section of the group is Alt(4). Among groups of order 12,
/// Alt(4) is the only one without an element of order 6, so a section of
/// order 12 is Alt(4) exactly when no coset has order 6.
pub fn is_a4_free(lat: &SubgroupLattice) -> bool {
    *lat.caches.a4_free.get_or_init(|| {
        if is_nilpotent(lat) {
            // Sections of nilpotent groups are nilpotent; Alt(4) is not.
            return true;
        }
        let group = lat.group();
        for h in 0..lat.len() as u32 {
            let h_ord = lat.order_of(h);
            if h_ord % 12 != 0 {
                continue;
            }
            let h_set = lat.set_of(h);
            let h_gens = lat.gens_of(h);
            for n in lat.of_order_within(h_ord / 12, h_set) {
                let n_set = lat.set_of(n);
                if !structure::is_normal_in_set(group, n_set, lat.gens_of(n), h_gens) {
                    continue;
                }
                let has_order6_coset = h_set.iter().any(|x| {
                    let x2 = group.mul(x, x);
                    let x3 = group.mul(x2, x);
                    let x6 = group.mul(x3, x3);
                    n_set.contains(x6) && !n_set.contains(x2) && !n_set.contains(x3)
                });
                if !has_order6_coset {
                    return false;
                }
            }
        }
        true
    })
}
