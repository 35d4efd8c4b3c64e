//! Reference facts about small symmetric and alternating groups, each
//! cross-checked against an independent brute-force enumeration where the
//! value is not forced by definition.

use std::collections::HashSet;
use std::sync::Arc;

use pinilot_core::group::{build_group, BuildLimits};
use pinilot_core::invariants;
use pinilot_core::lattice::{SubgroupLattice, DEFAULT_LATTICE_CAP};
use pinilot_core::perm::Perm;
use pinilot_core::pitheory;
use pinilot_core::structure;
use pinilot_core::subgroup::subgroup_from_perms;
use pinilot_core::FiniteGroup;

fn sym(n: usize) -> Arc<FiniteGroup> {
    build_group(
        n,
        &[
            Perm::from_cycles(n, &[vec![0, 1]]).unwrap(),
            Perm::from_cycles(n, &[(0..n as u16).collect()]).unwrap(),
        ],
        BuildLimits::with_max_order(200),
    )
    .unwrap()
}

fn alt(n: usize) -> Arc<FiniteGroup> {
    let mut gens = vec![Perm::from_cycles(n, &[vec![0, 1, 2]]).unwrap()];
    if n > 3 {
        gens.push(if n % 2 == 1 {
            Perm::from_cycles(n, &[(0..n as u16).collect()]).unwrap()
        } else {
            Perm::from_cycles(n, &[(1..n as u16).collect()]).unwrap()
        });
    }
    build_group(n, &gens, BuildLimits::with_max_order(200)).unwrap()
}

fn lat(g: &Arc<FiniteGroup>) -> SubgroupLattice {
    SubgroupLattice::build(g, DEFAULT_LATTICE_CAP).unwrap()
}

/// Counts distinct subgroups generated by every pair and triple of elements.
/// Misses only subgroups needing four or more generators, which none of the
/// groups under test have.
fn generated_count_oracle(g: &Arc<FiniteGroup>) -> usize {
    let n = g.order() as u16;
    let mut seen = HashSet::new();
    for a in 0..n {
        for b in 0..n {
            seen.insert(g.close_indices(&[a, b]));
        }
    }
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                seen.insert(g.close_indices(&[a, b, c]));
            }
        }
    }
    seen.len()
}

#[test]
fn s3_subgroup_count_matches_oracle() {
    let g = sym(3);
    let l = lat(&g);
    assert_eq!(l.len(), 6);
    assert_eq!(generated_count_oracle(&g), 6);
}

#[test]
fn s4_subgroup_count_matches_oracle() {
    let g = sym(4);
    let l = lat(&g);
    assert_eq!(l.len(), 30);
    assert_eq!(generated_count_oracle(&g), 30);
}

#[test]
fn elementary_eight_subgroup_count_matches_oracle() {
    // Three commuting involutions on six points.
    let g = build_group(
        6,
        &[
            Perm::from_cycles(6, &[vec![0, 1]]).unwrap(),
            Perm::from_cycles(6, &[vec![2, 3]]).unwrap(),
            Perm::from_cycles(6, &[vec![4, 5]]).unwrap(),
        ],
        BuildLimits::with_max_order(200),
    )
    .unwrap();
    assert_eq!(g.order(), 8);
    let l = lat(&g);
    // 1 + 7 + 7 + 1 subspaces of a 3-dimensional space over two elements.
    assert_eq!(l.len(), 16);
    assert_eq!(generated_count_oracle(&g), 16);
}

#[test]
fn s4_normal_structure() {
    let g = sym(4);
    let l = lat(&g);
    let normal_orders: Vec<u32> = l.normal_entries().iter().map(|&i| l.order_of(i)).collect();
    assert_eq!(normal_orders, vec![1, 4, 12, 24]);
    let pair_orders: Vec<(u32, u32, u32)> = l
        .chief_pairs_compact()
        .iter()
        .map(|&(k, a, f)| (l.order_of(k), l.order_of(a), f))
        .collect();
    assert_eq!(pair_orders, vec![(1, 4, 4), (4, 12, 3), (12, 24, 2)]);
}

#[test]
fn double_transposition_fails_pi_property_at_the_bottom_pair() {
    let g = sym(4);
    let l = lat(&g);
    let h = subgroup_from_perms(&g, &[Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap()])
        .unwrap();
    assert!(!pitheory::has_pi_property(&l, &h).unwrap());
    let failures = pitheory::pi_property_failures(&l, &h).unwrap();
    assert_eq!(failures.len(), 1);
    let f = &failures[0];
    assert_eq!((f.kernel_order, f.above_order), (1, 4));
    assert_eq!(f.intersection_order, 2);
    assert_eq!(f.normalizer_index, 3);
    assert_eq!(f.offending_primes.primes(), &[3]);
}

#[test]
fn transposition_is_pi_normal_with_canonical_witness() {
    let g = sym(4);
    let l = lat(&g);
    let h = subgroup_from_perms(&g, &[Perm::from_cycles(4, &[vec![0, 1]]).unwrap()]).unwrap();
    let witness = pitheory::is_pi_normal(&l, &h).unwrap().expect("Π-normal");
    assert_eq!(witness.supplement.order(), 12);
    assert!(witness.intermediate.is_trivial());
    // The supplement really is the alternating group: all twelve members
    // are even permutations, checked through the normality flag.
    let t_idx = l.index_of(&witness.supplement).unwrap();
    assert!(l.is_normal_entry(t_idx));
}

#[test]
fn non_normal_klein_subgroup_is_not_pi_normal() {
    let g = sym(4);
    let l = lat(&g);
    let klein = subgroup_from_perms(
        &g,
        &[
            Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
            Perm::from_cycles(4, &[vec![2, 3]]).unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(klein.order(), 4);
    let idx = l.index_of(&klein).unwrap();
    assert!(!l.is_normal_entry(idx));
    assert!(pitheory::is_pi_normal(&l, &klein).unwrap().is_none());
    assert!(pitheory::is_pi_supplemented(&l, &klein).unwrap().is_none());
}

#[test]
fn s4_characteristic_subgroups() {
    let g = sym(4);
    let l = lat(&g);
    // O_2, Fitting and generalized Fitting all land on the Klein four group.
    let v4 = invariants::o_p(&l, 2);
    assert_eq!(v4.order(), 4);
    assert_eq!(v4.element_order_profile(), vec![1, 2, 2, 2]);
    assert_eq!(invariants::fitting(&l).set(), v4.set());
    assert_eq!(invariants::generalized_fitting(&l).set(), v4.set());
    assert!(invariants::o_p(&l, 3).is_trivial());
    assert!(invariants::o_p_prime(&l, 2).is_trivial());
    assert_eq!(invariants::o_p_prime(&l, 3).order(), 4);
    assert!(invariants::frattini(&l).is_trivial());
    assert!(invariants::hypercenter(&l).is_trivial());
    assert!(invariants::u_hypercenter(&l).unwrap().is_trivial());
}

#[test]
fn p_residuals_of_small_groups() {
    let s3 = sym(3);
    let r = invariants::p_residual(&s3, 2);
    assert_eq!(r.order(), 3);
    let a4 = alt(4);
    assert_eq!(invariants::p_residual(&a4, 2).order(), 12);
    assert_eq!(invariants::p_residual(&a4, 3).order(), 4);
}

#[test]
fn hall_subgroups_of_s4() {
    let g = sym(4);
    let l = lat(&g);
    let odd_halls = invariants::hall_p_prime_entries(&l, 2);
    assert_eq!(odd_halls.len(), 4);
    assert!(odd_halls.iter().all(|&i| l.order_of(i) == 3));
    // Hall 3′ subgroups are exactly the Sylow 2 subgroups here.
    assert_eq!(invariants::hall_p_prime_entries(&l, 3).len(), 3);
}

#[test]
fn a4_structure() {
    let g = alt(4);
    let l = lat(&g);
    assert_eq!(l.len(), 10);
    assert!(invariants::u_hypercenter(&l).unwrap().is_trivial());
    assert!(invariants::is_soluble(&l));
    assert!(!invariants::is_nilpotent(&l));
    assert!(!invariants::is_supersoluble(&l));
    assert!(invariants::is_p_soluble(&l, 2) && invariants::is_p_soluble(&l, 3));
    assert!(!invariants::is_p_nilpotent(&l, 2));
    assert!(invariants::is_p_nilpotent(&l, 3));
    assert!(!invariants::is_a4_free(&l));
}

#[test]
fn a5_structure() {
    let g = alt(5);
    assert_eq!(g.order(), 60);
    let l = lat(&g);
    assert_eq!(l.len(), 59);
    // No subgroups of index 2, 3 or 4: orders 30, 20, 15 are absent.
    assert!(l.of_order(15).is_empty());
    assert!(l.of_order(20).is_empty());
    assert!(l.of_order(30).is_empty());
    assert_eq!(l.of_order(10).len(), 6);
    assert_eq!(l.of_order(12).len(), 5);
    let fstar = invariants::generalized_fitting(&l);
    assert!(fstar.is_full());
    assert!(invariants::fitting(&l).is_trivial());
    assert!(!invariants::is_soluble(&l));
    assert_eq!(l.chief_factor_orders(), vec![60]);
    assert!(!invariants::is_p_soluble(&l, 2));
    assert!(!invariants::is_a4_free(&l));
    assert!(invariants::entry_quaternion_free(&l, l.full_index()));
}

#[test]
fn s4_quaternion_free_but_d8_sections_exist() {
    let g = sym(4);
    let l = lat(&g);
    // Sylow 2 of Sym(4) is dihedral; no quaternion sections anywhere.
    let sylow2 = invariants::sylow_entry(&l, 2);
    assert_eq!(l.order_of(sylow2), 8);
    assert!(invariants::entry_quaternion_free(&l, sylow2));
    assert!(invariants::entry_quaternion_free(&l, l.full_index()));
    assert!(!invariants::is_a4_free(&l));
}

#[test]
fn quaternion_group_is_detected() {
    // Quaternion group of order 8 acting regularly.
    let a = Perm::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 7, 6, 5]]).unwrap();
    let b = Perm::from_cycles(8, &[vec![0, 4, 2, 6], vec![1, 5, 3, 7]]).unwrap();
    let g = build_group(8, &[a, b], BuildLimits::with_max_order(200)).unwrap();
    assert_eq!(g.order(), 8);
    // Exactly one involution marks the quaternion group of order 8.
    let involutions = (0..8u16).filter(|&i| g.order_of(i) == 2).count();
    assert_eq!(involutions, 1);
    assert!(!g.is_abelian());
    let l = lat(&g);
    assert_eq!(l.len(), 6);
    assert!(!invariants::entry_quaternion_free(&l, l.full_index()));
    assert!(invariants::is_a4_free(&l));
}

#[test]
fn normalizer_of_sylow_in_s4() {
    let g = sym(4);
    let l = lat(&g);
    let sylow3 = invariants::sylow_subgroup(&l, 3);
    assert_eq!(sylow3.order(), 3);
    let n = structure::normalizer(&g, &sylow3).unwrap();
    assert_eq!(n.order(), 6);
    let sylow2 = invariants::sylow_subgroup(&l, 2);
    let n2 = structure::normalizer(&g, &sylow2).unwrap();
    assert_eq!(n2.order(), 8);
}
