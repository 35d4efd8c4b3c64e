//! Randomized algebra checks on permutations.

use proptest::prelude::*;

use pinilot_core::perm::Perm;

const DEGREE: usize = 9;

fn arb_perm() -> impl Strategy<Value = Perm> {
    Just(()).prop_perturb(|_, mut rng| {
        let mut images: Vec<u16> = (0..DEGREE as u16).collect();
        for i in (1..DEGREE).rev() {
            let j = (rng.next_u32() as usize) % (i + 1);
            images.swap(i, j);
        }
        Perm::from_images(images).unwrap()
    })
}

proptest! {
    #[test]
    fn composition_is_associative(a in arb_perm(), b in arb_perm(), c in arb_perm()) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
    }

    #[test]
    fn inverse_cancels(a in arb_perm()) {
        let id = Perm::identity(DEGREE);
        prop_assert_eq!(a.then(&a.inverse()), id.clone());
        prop_assert_eq!(a.inverse().then(&a), id);
    }

    #[test]
    fn order_is_minimal_and_annihilates(a in arb_perm()) {
        let k = a.order();
        prop_assert!(k >= 1);
        let mut acc = Perm::identity(DEGREE);
        for step in 1..=k {
            acc = acc.then(&a);
            if step < k {
                prop_assert!(!acc.is_identity(), "power {} of order-{} element", step, k);
            }
        }
        prop_assert!(acc.is_identity());
    }

    #[test]
    fn cycles_round_trip(a in arb_perm()) {
        let rebuilt = Perm::from_cycles(DEGREE, &a.cycles()).unwrap();
        prop_assert_eq!(rebuilt, a);
    }

    #[test]
    fn inverse_reverses_composition(a in arb_perm(), b in arb_perm()) {
        prop_assert_eq!(a.then(&b).inverse(), b.inverse().then(&a.inverse()));
    }

    #[test]
    fn display_is_one_indexed_and_stable(a in arb_perm()) {
        let s = a.to_string();
        if a.is_identity() {
            prop_assert_eq!(s, "()");
        } else {
            prop_assert!(!s.contains(" 0") && !s.starts_with("(0"));
        }
    }
}
