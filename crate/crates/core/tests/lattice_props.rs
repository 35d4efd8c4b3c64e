//! Structural laws checked across a pool of groups of assorted shapes:
//! abelian, dihedral, quaternion, symmetric, alternating, and one mixed
//! direct product. Everything here must hold for any finite group, so a
//! failure points at the engine rather than at the pool.

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use pinilot_core::group::{build_group, direct_product, BuildLimits};
use pinilot_core::invariants;
use pinilot_core::lattice::{SubgroupLattice, DEFAULT_LATTICE_CAP};
use pinilot_core::perm::Perm;
use pinilot_core::pitheory;
use pinilot_core::structure;
use pinilot_core::FiniteGroup;

fn cyc(parts: &[Vec<u16>], degree: usize) -> Perm {
    Perm::from_cycles(degree, parts).unwrap()
}

fn pool() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    let limits = BuildLimits::with_max_order(200);
    let s4 = build_group(
        4,
        &[cyc(&[vec![0, 1]], 4), cyc(&[vec![0, 1, 2, 3]], 4)],
        limits,
    )
    .unwrap();
    let a4 = build_group(
        4,
        &[cyc(&[vec![0, 1, 2]], 4), cyc(&[vec![1, 2, 3]], 4)],
        limits,
    )
    .unwrap();
    let d12 = build_group(
        6,
        &[
            cyc(&[vec![0, 1, 2, 3, 4, 5]], 6),
            cyc(&[vec![1, 5], vec![2, 4]], 6),
        ],
        limits,
    )
    .unwrap();
    let q8 = build_group(
        8,
        &[
            cyc(&[vec![0, 1, 2, 3], vec![4, 7, 6, 5]], 8),
            cyc(&[vec![0, 4, 2, 6], vec![1, 5, 3, 7]], 8),
        ],
        limits,
    )
    .unwrap();
    let c12 = build_group(7, &[cyc(&[vec![0, 1, 2, 3]], 7), cyc(&[vec![4, 5, 6]], 7)], limits).unwrap();
    let e9 = build_group(6, &[cyc(&[vec![0, 1, 2]], 6), cyc(&[vec![3, 4, 5]], 6)], limits).unwrap();
    let s3 = build_group(3, &[cyc(&[vec![0, 1]], 3), cyc(&[vec![0, 1, 2]], 3)], limits).unwrap();
    let c4 = build_group(4, &[cyc(&[vec![0, 1, 2, 3]], 4)], limits).unwrap();
    let s3xc4 = direct_product(&s3, &c4, limits).unwrap().group;
    vec![
        ("S4", s4),
        ("A4", a4),
        ("D12", d12),
        ("Q8", q8),
        ("C12", c12),
        ("E9", e9),
        ("S3xC4", s3xc4),
    ]
}

fn lat(g: &Arc<FiniteGroup>) -> SubgroupLattice {
    SubgroupLattice::build(g, DEFAULT_LATTICE_CAP).unwrap()
}

#[test]
fn lagrange_and_bookkeeping() {
    for (name, g) in pool() {
        let l = lat(&g);
        assert_eq!(l.order_of(l.trivial_index()), 1, "{name}");
        assert_eq!(l.order_of(l.full_index()), g.order() as u32, "{name}");
        for idx in 0..l.len() as u32 {
            let h = l.subgroup(idx);
            assert_eq!(g.order() as u32 % h.order(), 0, "{name}: order divides");
            assert_eq!(h.set().count() as u32, h.order(), "{name}: set count");
            // Generators regenerate the stored element set.
            let closed = g.close_indices(h.gen_indices());
            assert_eq!(&closed, h.set(), "{name}: gens close to set");
        }
    }
}

#[test]
fn normal_entries_are_intersection_closed() {
    for (name, g) in pool() {
        let l = lat(&g);
        let normals = l.normal_entries();
        for &a in normals {
            for &b in normals {
                let meet = l.set_of(a).intersection(l.set_of(b));
                let idx = l.index_of_set(&meet).expect("intersection is a subgroup");
                assert!(l.is_normal_entry(idx), "{name}: meet of normals");
            }
        }
        let _ = g;
    }
}

#[test]
fn chief_factors_multiply_to_group_order() {
    for (name, g) in pool() {
        let l = lat(&g);
        let product: u64 = l.chief_factor_orders().iter().map(|&f| f as u64).product();
        assert_eq!(product, g.order() as u64, "{name}");
        // Each chief factor of a soluble group is a prime power.
        if invariants::is_soluble(&l) {
            for f in l.chief_factor_orders() {
                assert!(
                    invariants::pi_of(f as u64).primes().len() == 1,
                    "{name}: soluble chief factor {f}"
                );
            }
        }
    }
}

#[test]
fn quotient_views_are_homomorphic() {
    for (name, g) in pool() {
        let l = lat(&g);
        for &n in l.normal_entries() {
            let view = l.quotient_view(n).unwrap();
            let q = view.group();
            assert_eq!(q.order() as u64 * l.order_of(n) as u64, g.order() as u64, "{name}");
            for a in 0..g.order() as u16 {
                for b in 0..g.order() as u16 {
                    let lhs = view.project_index(g.mul(a, b));
                    let rhs = q.mul(view.project_index(a), view.project_index(b));
                    assert_eq!(lhs, rhs, "{name}: projection respects products");
                }
            }
        }
    }
}

#[test]
fn sylow_orders_and_conjugate_counts() {
    for (name, g) in pool() {
        let l = lat(&g);
        for &p in invariants::pi_of(g.order() as u64).primes() {
            let expected = invariants::p_part(g.order() as u64, p);
            let sylows = invariants::sylow_entries(&l, p);
            assert!(!sylows.is_empty(), "{name}");
            for &s in sylows {
                assert_eq!(l.order_of(s) as u64, expected, "{name}: p={p}");
            }
            // Sylow count is 1 mod p and divides the p′ part.
            let count = sylows.len() as u64;
            assert_eq!(count % p as u64, 1, "{name}: p={p}");
            assert_eq!(invariants::p_prime_part(g.order() as u64, p) % count, 0, "{name}: p={p}");
        }
    }
}

#[test]
fn pi_property_is_conjugation_invariant() {
    for (name, g) in pool() {
        let l = lat(&g);
        for idx in 0..l.len() as u32 {
            let verdict = pitheory::entry_pi_property(&l, idx);
            let full = pitheory::entry_pi_property_unshortcut(&l, idx);
            assert_eq!(verdict, full, "{name}: shortcut agrees with definition");
            let h = l.subgroup(idx);
            for x in 0..g.order() as u16 {
                let conj = structure::conjugate_subgroup(&g, &h, x).unwrap();
                let cidx = l.index_of(&conj).unwrap();
                assert_eq!(
                    pitheory::entry_pi_property(&l, cidx),
                    verdict,
                    "{name}: conjugate of entry {idx} by {x}"
                );
            }
        }
    }
}

#[test]
fn pi_normal_status_is_conjugation_invariant() {
    for (name, g) in pool() {
        let l = lat(&g);
        for idx in 0..l.len() as u32 {
            let verdict = pitheory::entry_pi_normal(&l, idx).is_some();
            let h = l.subgroup(idx);
            for x in 0..g.order() as u16 {
                let conj = structure::conjugate_subgroup(&g, &h, x).unwrap();
                let cidx = l.index_of(&conj).unwrap();
                assert_eq!(
                    pitheory::entry_pi_normal(&l, cidx).is_some(),
                    verdict,
                    "{name}: conjugate of entry {idx} by {x}"
                );
            }
        }
    }
}

#[test]
fn normal_subgroups_have_pi_property_and_are_pi_normal() {
    for (name, g) in pool() {
        let l = lat(&g);
        for &n in l.normal_entries() {
            assert!(pitheory::entry_pi_property_unshortcut(&l, n), "{name}");
            let witness = pitheory::entry_pi_normal(&l, n);
            assert!(witness.is_some(), "{name}");
        }
        let _ = g;
    }
}

#[test]
fn pi_normal_witnesses_check_out() {
    for (name, g) in pool() {
        let l = lat(&g);
        for idx in 0..l.len() as u32 {
            if let Some((t, i)) = pitheory::entry_pi_normal(&l, idx) {
                assert!(l.is_subnormal_entry(t), "{name}: supplement subnormal");
                let h = l.subgroup(idx);
                let tsub = l.subgroup(t);
                assert!(structure::is_supplement(&h, &tsub).unwrap(), "{name}");
                let cap = l.set_of(idx).intersection(l.set_of(t));
                assert!(cap.is_subset_of(l.set_of(i)), "{name}: H∩T inside I");
                assert!(l.set_of(i).is_subset_of(l.set_of(idx)), "{name}: I inside H");
                assert!(pitheory::entry_pi_property(&l, i), "{name}: I has the property");
            }
        }
        let _ = g;
    }
}

#[test]
fn p_nilpotency_oracles_agree() {
    // is_p_nilpotent internally cross-checks the normal-complement search
    // against the p-residual criterion; calling it for every prime forces
    // that comparison over the whole pool.
    for (name, g) in pool() {
        let l = lat(&g);
        for &p in invariants::pi_of(g.order() as u64).primes() {
            let verdict = invariants::is_p_nilpotent(&l, p);
            assert_eq!(
                verdict,
                invariants::entry_p_nilpotent(&l, l.full_index(), p),
                "{name}: p={p}"
            );
            if invariants::is_nilpotent(&l) {
                assert!(verdict, "{name}: nilpotent implies p-nilpotent for p={p}");
            }
        }
    }
}

#[test]
fn supplements_found_for_p_nilpotency_really_work() {
    for (name, g) in pool() {
        let l = lat(&g);
        for &p in invariants::pi_of(g.order() as u64).primes() {
            for idx in 0..l.len() as u32 {
                if let Some(t) = pitheory::entry_p_nilpotent_supplement(&l, idx, p) {
                    let h = l.subgroup(idx);
                    let tsub = l.subgroup(t);
                    assert!(structure::is_supplement(&h, &tsub).unwrap(), "{name}");
                    assert!(invariants::entry_p_nilpotent(&l, t, p), "{name}: p={p}");
                }
            }
        }
    }
}

#[test]
fn lattice_rebuild_is_byte_stable() {
    for (name, g) in pool() {
        let first = lat(&g);
        let second = lat(&g);
        assert_eq!(first.len(), second.len(), "{name}");
        for idx in 0..first.len() as u32 {
            assert_eq!(first.set_of(idx), second.set_of(idx), "{name}: entry {idx}");
            assert_eq!(first.gens_of(idx), second.gens_of(idx), "{name}: gens {idx}");
        }
        assert_eq!(first.chief_pairs_compact(), second.chief_pairs_compact(), "{name}");
    }
}

#[test]
fn sampled_checks_on_s5() {
    // S5 has 156 subgroups; sample conjugation invariance rather than
    // walking the full 156 x 120 grid.
    let s5 = build_group(
        5,
        &[cyc(&[vec![0, 1]], 5), cyc(&[vec![0, 1, 2, 3, 4]], 5)],
        BuildLimits::with_max_order(200),
    )
    .unwrap();
    let l = lat(&s5);
    assert_eq!(l.len(), 156);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_5eed);
    for _ in 0..60 {
        let idx = rng.random_range(0..l.len() as u32);
        let x = rng.random_range(0..s5.order() as u16);
        let h = l.subgroup(idx);
        let conj = structure::conjugate_subgroup(&s5, &h, x).unwrap();
        let cidx = l.index_of(&conj).unwrap();
        assert_eq!(
            pitheory::entry_pi_property(&l, idx),
            pitheory::entry_pi_property(&l, cidx)
        );
        assert_eq!(
            pitheory::entry_pi_normal(&l, idx).is_some(),
            pitheory::entry_pi_normal(&l, cidx).is_some()
        );
        assert_eq!(
            l.is_subnormal_entry(idx),
            l.is_subnormal_entry(cidx)
        );
    }
}
