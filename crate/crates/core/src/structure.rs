//! Subgroup arithmetic inside a fixed parent group: normalizers,
//! centralizers, commutators, closures, products.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::subgroup::{self, Subgroup};

fn ensure_parent(group: &Arc<FiniteGroup>, h: &Subgroup) -> Result<(), GroupError> {
    if h.parent().id() != group.id() {
        return Err(GroupError::WrongParent);
    }
    Ok(())
}

/// Generated subgroup ⟨seed⟩.
pub fn generated_subgroup(group: &Arc<FiniteGroup>, seed: &[u16]) -> Subgroup {
    subgroup::subgroup_from_indices(group, seed)
}

/// Whether conjugation by every group element fixes H setwise. Only the
/// generators on both sides need checking.
pub fn is_normal(group: &Arc<FiniteGroup>, h: &Subgroup) -> Result<bool, GroupError> {
    ensure_parent(group, h)?;
    Ok(is_normal_set(group, h.set(), h.gen_indices()))
}

/// Normality of a closed set given its generators, against the whole group.
pub(crate) fn is_normal_set(group: &FiniteGroup, set: &ElemSet, gens: &[u16]) -> bool {
    group
        .gen_indices()
        .iter()
        .all(|&x| gens.iter().all(|&s| set.contains(group.conj(s, x))))
}

/// Normality of H inside an ambient subgroup given the ambient generators.
pub(crate) fn is_normal_in_set(group: &FiniteGroup, h_set: &ElemSet, h_gens: &[u16], ambient_gens: &[u16]) -> bool {
    ambient_gens
        .iter()
        .all(|&x| h_gens.iter().all(|&s| h_set.contains(group.conj(s, x))))
}

/// Whether H is a normal subgroup of the ambient subgroup. False when H is
/// not contained in the ambient subgroup at all.
pub fn is_normal_in(group: &Arc<FiniteGroup>, h: &Subgroup, ambient: &Subgroup) -> Result<bool, GroupError> {
    ensure_parent(group, h)?;
    ensure_parent(group, ambient)?;
    if !h.set().is_subset_of(ambient.set()) {
        return Ok(false);
    }
    Ok(is_normal_in_set(group, h.set(), h.gen_indices(), ambient.gen_indices()))
}

/// Least normal subgroup of G containing H.
pub fn normal_closure(group: &Arc<FiniteGroup>, h: &Subgroup) -> Result<Subgroup, GroupError> {
    ensure_parent(group, h)?;
    let set = normal_closure_set(group, h.gen_indices(), group.gen_indices());
    let gens = reduce_generators(group, &set);
    Ok(subgroup::subgroup_from_set(group, set, gens))
}

/// Closure of ⟨seed⟩ under conjugation by the listed conjugators, as a set.
/// With the ambient group's generators as conjugators this is the normal
/// closure in the ambient group.
pub(crate) fn normal_closure_set(group: &FiniteGroup, seed: &[u16], conjugators: &[u16]) -> ElemSet {
    let mut gens: Vec<u16> = seed.to_vec();
    let mut set = group.close_indices(&gens);
    let mut head = 0;
    while head < gens.len() {
        let s = gens[head];
        head += 1;
        for &x in conjugators {
            let c = group.conj(s, x);
            if !set.contains(c) {
                gens.push(c);
                set = group.close_union(&set, &[c]);
            }
        }
    }
    set
}

/// N_G(H): all elements whose conjugation fixes H setwise.
pub fn normalizer(group: &Arc<FiniteGroup>, h: &Subgroup) -> Result<Subgroup, GroupError> {
    ensure_parent(group, h)?;
    let set = normalizer_set(group, h.set(), h.gen_indices());
    let gens = reduce_generators(group, &set);
    Ok(subgroup::subgroup_from_set(group, set, gens))
}

pub(crate) fn normalizer_set(group: &FiniteGroup, h_set: &ElemSet, h_gens: &[u16]) -> ElemSet {
    let mut out = ElemSet::empty(group.order());
    for x in 0..group.order() as u16 {
        if h_gens.iter().all(|&s| h_set.contains(group.conj(s, x))) {
            out.insert(x);
        }
    }
    out
}

/// C_G(H): all elements commuting with every member of H.
pub fn centralizer(group: &Arc<FiniteGroup>, h: &Subgroup) -> Result<Subgroup, GroupError> {
    ensure_parent(group, h)?;
    let mut out = ElemSet::empty(group.order());
    for x in 0..group.order() as u16 {
        if h.gen_indices().iter().all(|&s| group.mul(x, s) == group.mul(s, x)) {
            out.insert(x);
        }
    }
    let gens = reduce_generators(group, &out);
    Ok(subgroup::subgroup_from_set(group, out, gens))
}

/// Z(G) as a subgroup.
pub fn center(group: &Arc<FiniteGroup>) -> Subgroup {
    let set = center_set(group);
    let gens = reduce_generators(group, &set);
    subgroup::subgroup_from_set(group, set, gens)
}

pub(crate) fn center_set(group: &FiniteGroup) -> ElemSet {
    let mut out = ElemSet::empty(group.order());
    for x in 0..group.order() as u16 {
        if group
            .gen_indices()
            .iter()
            .all(|&s| group.mul(x, s) == group.mul(s, x))
        {
            out.insert(x);
        }
    }
    out
}

/// Center of a subgroup, as a subgroup of the same parent.
pub fn center_of(h: &Subgroup) -> Subgroup {
    let group = h.parent();
    let mut out = ElemSet::empty(group.order());
    for x in h.element_indices() {
        if h.gen_indices().iter().all(|&s| group.mul(x, s) == group.mul(s, x)) {
            out.insert(x);
        }
    }
    let gens = reduce_generators(group, &out);
    subgroup::subgroup_from_set(group, out, gens)
}

/// Commutator subgroup [H, H] of a subgroup, within the same parent.
pub fn derived_of(h: &Subgroup) -> Subgroup {
    let group = h.parent();
    let members: Vec<u16> = h.element_indices().collect();
    let mut comms: Vec<u16> = Vec::new();
    let mut seen = ElemSet::empty(group.order());
    for &a in &members {
        for &b in &members {
            // [a, b] = a⁻¹ b⁻¹ a b
            let c = group.mul(group.mul(group.inv(a), group.inv(b)), group.mul(a, b));
            if seen.insert(c) {
                comms.push(c);
            }
        }
    }
    let set = group.close_indices(&comms);
    let gens = reduce_generators(group, &set);
    subgroup::subgroup_from_set(group, set, gens)
}

/// [A, B]: subgroup generated by commutators across two subgroups.
pub fn commutator_subgroup(a: &Subgroup, b: &Subgroup) -> Result<Subgroup, GroupError> {
    if !a.same_parent(b) {
        return Err(GroupError::WrongParent);
    }
    let group = a.parent();
    let mut comms: Vec<u16> = Vec::new();
    let mut seen = ElemSet::empty(group.order());
    for x in a.element_indices() {
        for y in b.element_indices() {
            let c = group.mul(group.mul(group.inv(x), group.inv(y)), group.mul(x, y));
            if seen.insert(c) {
                comms.push(c);
            }
        }
    }
    let set = group.close_indices(&comms);
    let gens = reduce_generators(group, &set);
    Ok(subgroup::subgroup_from_set(group, set, gens))
}

/// The product set HT = {ht}. Not a subgroup in general.
pub fn product_set(h: &Subgroup, t: &Subgroup) -> Result<ElemSet, GroupError> {
    if !h.same_parent(t) {
        return Err(GroupError::WrongParent);
    }
    let group = h.parent();
    let mut out = ElemSet::empty(group.order());
    for a in h.element_indices() {
        for b in t.element_indices() {
            out.insert(group.mul(a, b));
        }
    }
    Ok(out)
}

/// |HT| without materializing the product: |H||T| / |H ∩ T|.
pub fn product_order(h: &Subgroup, t: &Subgroup) -> Result<u64, GroupError> {
    if !h.same_parent(t) {
        return Err(GroupError::WrongParent);
    }
    let cap = h.set().intersection_count(t.set()) as u64;
    Ok(h.order() as u64 * t.order() as u64 / cap)
}

/// Whether HT = G.
pub fn is_supplement(h: &Subgroup, t: &Subgroup) -> Result<bool, GroupError> {
    Ok(product_order(h, t)? == h.parent().order() as u64)
}

/// H conjugated by the element at index x.
pub fn conjugate_subgroup(group: &Arc<FiniteGroup>, h: &Subgroup, x: u16) -> Result<Subgroup, GroupError> {
    ensure_parent(group, h)?;
    if x as usize >= group.order() {
        return Err(GroupError::NotAnElement);
    }
    let mut set = ElemSet::empty(group.order());
    for i in h.element_indices() {
        set.insert(group.conj(i, x));
    }
    let gens: Vec<u16> = h.gen_indices().iter().map(|&s| group.conj(s, x)).collect();
    Ok(subgroup::subgroup_from_set(group, set, gens))
}

/// Greedy small generating set for a closed element set: repeatedly adjoin
/// the least element not yet generated. Deterministic.
pub fn reduce_generators(group: &FiniteGroup, set: &ElemSet) -> Vec<u16> {
    let mut gens: Vec<u16> = Vec::new();
    let mut have = ElemSet::singleton(group.order(), 0);
    for i in set.iter() {
        if !have.contains(i) {
            gens.push(i);
            have = group.close_union(&have, &[i]);
            if have.count() == set.count() {
                break;
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, BuildLimits};
    use crate::perm::Perm;
    use crate::subgroup::{full_subgroup, subgroup_from_perms, trivial_subgroup};

    fn s4() -> Arc<FiniteGroup> {
        build_group(
            4,
            &[
                Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
            ],
            BuildLimits::default(),
        )
        .unwrap()
    }

    fn sub(g: &Arc<FiniteGroup>, cycles: &[&[u16]]) -> Subgroup {
        let perms: Vec<Perm> = cycles
            .iter()
            .map(|c| Perm::from_cycles(g.degree(), &[c.to_vec()]).unwrap())
            .collect();
        subgroup_from_perms(g, &perms).unwrap()
    }

    #[test]
    fn normality_in_s4() {
        let g = s4();
        let a4 = sub(&g, &[&[0, 1, 2], &[1, 2, 3]]);
        let v4 = subgroup_from_perms(
            &g,
            &[
                Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let c2 = sub(&g, &[&[0, 1]]);
        assert!(is_normal(&g, &a4).unwrap());
        assert!(is_normal(&g, &v4).unwrap());
        assert!(!is_normal(&g, &c2).unwrap());
        assert!(is_normal(&g, &trivial_subgroup(&g)).unwrap());
        assert!(is_normal(&g, &full_subgroup(&g)).unwrap());
    }

    #[test]
    fn normal_closure_of_a_transposition_is_s4() {
        let g = s4();
        let c2 = sub(&g, &[&[0, 1]]);
        assert_eq!(normal_closure(&g, &c2).unwrap().order(), 24);
        let double = subgroup_from_perms(
            &g,
            &[Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap()],
        )
        .unwrap();
        // Double transpositions generate the Klein four group normally.
        assert_eq!(normal_closure(&g, &double).unwrap().order(), 4);
    }

    #[test]
    fn normalizer_and_centralizer() {
        let g = s4();
        let c2 = sub(&g, &[&[0, 1]]);
        let n = normalizer(&g, &c2).unwrap();
        assert_eq!(n.order(), 4);
        let c = centralizer(&g, &c2).unwrap();
        assert_eq!(c.order(), 4);
        let sylow3 = sub(&g, &[&[0, 1, 2]]);
        assert_eq!(normalizer(&g, &sylow3).unwrap().order(), 6);
        assert_eq!(centralizer(&g, &sylow3).unwrap().order(), 3);
    }

    #[test]
    fn center_of_s4_is_trivial() {
        let g = s4();
        assert!(center(&g).is_trivial());
        let v4 = subgroup_from_perms(
            &g,
            &[
                Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(center_of(&v4).order(), 4);
    }

    #[test]
    fn derived_series_of_s4() {
        let g = s4();
        let d1 = derived_of(&full_subgroup(&g));
        assert_eq!(d1.order(), 12);
        let d2 = derived_of(&d1);
        assert_eq!(d2.order(), 4);
        let d3 = derived_of(&d2);
        assert!(d3.is_trivial());
    }

    #[test]
    fn products_and_supplements() {
        let g = s4();
        let a4 = sub(&g, &[&[0, 1, 2], &[1, 2, 3]]);
        let c2 = sub(&g, &[&[0, 1]]);
        assert_eq!(product_order(&c2, &a4).unwrap(), 24);
        assert!(is_supplement(&c2, &a4).unwrap());
        assert_eq!(product_set(&c2, &a4).unwrap().count(), 24);
        let sylow3 = sub(&g, &[&[0, 1, 2]]);
        assert_eq!(product_order(&sylow3, &sylow3).unwrap(), 3);
        assert!(!is_supplement(&sylow3, &c2).unwrap());
        // HT need not be a subgroup: two distinct order 2 subgroups.
        let c2b = sub(&g, &[&[1, 2]]);
        let ht = product_set(&c2, &c2b).unwrap();
        assert_eq!(ht.count(), 4);
        let closed = g.close_indices(&ht.to_vec());
        assert_eq!(closed.count(), 6);
    }

    #[test]
    fn conjugates_partition_sylows() {
        let g = s4();
        let sylow3 = sub(&g, &[&[0, 1, 2]]);
        let mut distinct = vec![sylow3.set().clone()];
        for x in 0..24u16 {
            let c = conjugate_subgroup(&g, &sylow3, x).unwrap();
            if !distinct.contains(c.set()) {
                distinct.push(c.set().clone());
            }
        }
        assert_eq!(distinct.len(), 4);
    }

    #[test]
    fn reduced_generators_regenerate() {
        let g = s4();
        let a4 = sub(&g, &[&[0, 1, 2], &[1, 2, 3]]);
        let gens = reduce_generators(&g, a4.set());
        assert!(gens.len() <= 2);
        assert_eq!(g.close_indices(&gens), *a4.set());
    }
}
