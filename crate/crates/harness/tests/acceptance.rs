//! Acceptance gate: one test per criterion, each printing a pass line.
//! Criteria 4, 5, 6, 9 and 10 share one full default verification run.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use pinilot_core::invariants::{is_p_nilpotent, is_p_soluble, p_valuation, pi_of, sylow_entries, sylow_entry};
use pinilot_core::pitheory::{
    entry_p_nilpotent_supplement, entry_pi_normal, entry_pi_property,
    entry_pi_property_unshortcut, pi_property_failures,
};
use pinilot_core::subgroup::subgroup_from_perms;
use pinilot_core::{direct_product, BuildLimits, Perm, SubgroupLattice};
use pinilot_harness::corpus::{alternating, builtin_corpus, cyclic, symmetric};
use pinilot_harness::format::parse_cycles;
use pinilot_harness::run::{run_corpus, RunConfig};
use pinilot_harness::{CorpusReport, Status, VerdictRecord};

static REPORT: OnceLock<(CorpusReport, Duration)> = OnceLock::new();

fn full_report() -> &'static (CorpusReport, Duration) {
    REPORT.get_or_init(|| {
        let start = Instant::now();
        let report = run_corpus(&RunConfig::default()).expect("default corpus run");
        (report, start.elapsed())
    })
}

fn lattice_cap() -> usize {
    100_000
}

#[test]
fn criterion_01_engine_sanity() {
    let start = Instant::now();
    let s3 = symmetric(3).unwrap();
    let s4 = symmetric(4).unwrap();
    let a5 = alternating(5).unwrap();
    assert_eq!(s3.order(), 6);
    assert_eq!(s4.order(), 24);
    assert_eq!(a5.order(), 60);

    let lat = SubgroupLattice::build(&s4, lattice_cap()).unwrap();
    assert_eq!(lat.len(), 30);
    let normal_orders: Vec<u32> = lat
        .normal_entries()
        .iter()
        .map(|&i| lat.order_of(i))
        .collect();
    assert_eq!(normal_orders, vec![1, 4, 12, 24]);
    let v4 = lat.normal_entries()[1];
    let quad = lat.subgroup(v4);
    assert_eq!(quad.element_order_profile(), vec![1, 2, 2, 2], "the order-4 normal is a Klein group");

    let pairs: Vec<(u32, u32)> = lat
        .chief_pairs_compact()
        .iter()
        .map(|&(k, l, _)| (lat.order_of(k), lat.order_of(l)))
        .collect();
    assert_eq!(pairs, vec![(1, 4), (4, 12), (12, 24)]);

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1 PASS: engine sanity on S3, S4, A5 in {elapsed:?}");
}

#[test]
fn criterion_02_dual_p_nilpotency_oracles_agree() {
    let start = Instant::now();
    let corpus = builtin_corpus(200).unwrap();
    let mut checks = 0u32;
    for member in &corpus.groups {
        let lat = SubgroupLattice::build(&member.group, lattice_cap()).unwrap();
        for &p in pi_of(member.group.order() as u64).primes() {
            // The group-level predicate runs both the normal-complement and
            // the residual characterizations and asserts they agree.
            is_p_nilpotent(&lat, p);
            checks += 1;
        }
    }
    assert!(checks > 100, "only {checks} oracle comparisons ran");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 2 PASS: dual p-nilpotency oracles agree on {} groups ({checks} prime instances) in {elapsed:?}",
        corpus.groups.len()
    );
}

#[test]
fn criterion_03_definition_level_checks() {
    let corpus = builtin_corpus(512).unwrap();
    let mut normal_checks = 0u64;
    let mut full_path_checks = 0u64;
    for member in &corpus.groups {
        let lat = SubgroupLattice::build(&member.group, lattice_cap()).unwrap();
        assert!(
            entry_pi_property(&lat, lat.trivial_index()),
            "{}: trivial subgroup must have the pi-property",
            member.name
        );
        let small = member.group.order() <= 60;
        for &n in lat.normal_entries() {
            assert!(
                entry_pi_property(&lat, n),
                "{}: normal entry {n} lacks the pi-property",
                member.name
            );
            normal_checks += 1;
            if small {
                assert!(
                    entry_pi_property_unshortcut(&lat, n),
                    "{}: normal entry {n} fails the definition-level pi-property",
                    member.name
                );
                full_path_checks += 1;
            }
        }
    }
    assert!(normal_checks > 30_000, "only {normal_checks} normal subgroups checked");
    assert!(full_path_checks > 100, "only {full_path_checks} full-path checks ran");

    let s4 = symmetric(4).unwrap();
    let lat = SubgroupLattice::build(&s4, lattice_cap()).unwrap();
    let h = subgroup_from_perms(&s4, &[Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap()])
        .unwrap();
    let failures = pi_property_failures(&lat, &h).unwrap();
    assert_eq!(failures.len(), 1);
    assert_eq!(failures[0].kernel_order, 1);
    assert_eq!(failures[0].above_order, 4);
    assert_eq!(failures[0].offending_primes.primes(), &[3]);
    println!(
        "criterion 3 PASS: pi-property definition checks ({normal_checks} normal subgroups, {full_path_checks} unshortcut)"
    );
}

fn records_for<'r>(report: &'r CorpusReport, check_prefix: &str) -> Vec<&'r VerdictRecord> {
    report
        .verdicts
        .iter()
        .filter(|v| v.check_id.starts_with(check_prefix))
        .collect()
}

#[test]
fn criterion_04_lemma_sweep_is_violation_free() {
    let (report, elapsed) = full_report();
    let lemmas = records_for(report, "lemma-");
    assert!(!lemmas.is_empty());
    for rec in &lemmas {
        assert_ne!(
            rec.status,
            Status::Counterexample,
            "{} violated on {}",
            rec.check_id,
            rec.group
        );
    }
    for id in pinilot_harness::lemmas::LEMMA_IDS {
        assert!(
            lemmas.iter().any(|r| r.check_id == id),
            "no records for {id}"
        );
    }
    assert!(*elapsed < Duration::from_secs(900), "took {elapsed:?}");
    println!(
        "criterion 4 PASS: {} lemma records, zero violations, full run in {elapsed:?}",
        lemmas.len()
    );
}

#[test]
fn criterion_05_theorem_a_sweep() {
    let (report, elapsed) = full_report();
    let recs = records_for(report, "thm-A");
    let mut confirmed = 0u32;
    for rec in &recs {
        assert_ne!(rec.status, Status::Counterexample, "thm-A fails on {}", rec.group);
        if rec.status == Status::Confirmed {
            assert_eq!(rec.hypothesis_holds, Some(true));
            assert_eq!(rec.conclusion_holds, Some(true));
            assert!(rec.instances.unwrap_or(0) >= 1, "vacuous confirmation on {}", rec.group);
            confirmed += 1;
        }
    }
    assert!(confirmed >= 20, "only {confirmed} confirmed instances");
    assert!(*elapsed < Duration::from_secs(1200), "took {elapsed:?}");
    println!(
        "criterion 5 PASS: theorem A sweep, {} records, {confirmed} confirmed, zero counterexamples",
        recs.len()
    );
}

#[test]
fn criterion_06_theorem_b_sweep() {
    let (report, elapsed) = full_report();
    let recs = records_for(report, "thm-B");
    let mut confirmed = 0u32;
    for rec in &recs {
        assert_ne!(rec.status, Status::Counterexample, "thm-B fails on {}", rec.group);
        if rec.status == Status::Confirmed && rec.instances.unwrap_or(0) >= 1 {
            confirmed += 1;
        }
    }
    assert!(confirmed >= 10, "only {confirmed} non-vacuous confirmations");

    let s4_instance = recs
        .iter()
        .find(|r| {
            r.group == "S4"
                && r.p == Some(2)
                && r.m == Some(2)
                && r.n_order == Some(24)
                && r.condition.as_deref() == Some("i")
        })
        .expect("the S4 p=2 m=2 condition-i record");
    assert_eq!(s4_instance.status, Status::HypothesisFails);
    let witness = s4_instance.witness.as_ref().unwrap();
    assert_eq!(witness.clause, "subgroups");
    let sub = witness.subgroup.as_ref().unwrap();
    assert_eq!(sub.order, 4);
    assert_eq!(sub.element_orders, vec![1, 2, 2, 2], "witness is a Klein group");
    assert!(!sub.normal);

    // The witness must live inside a Sylow 2-subgroup of S4.
    let s4 = symmetric(4).unwrap();
    let lat = SubgroupLattice::build(&s4, lattice_cap()).unwrap();
    let gens: Vec<Perm> = sub
        .generators
        .iter()
        .map(|w| parse_cycles(4, w).unwrap())
        .collect();
    let klein = subgroup_from_perms(&s4, &gens).unwrap();
    let klein_idx = lat.index_of(&klein).unwrap();
    assert_eq!(lat.order_of(klein_idx), 4);
    assert!(
        sylow_entries(&lat, 2)
            .iter()
            .any(|&s| lat.set_of(klein_idx).is_subset_of(lat.set_of(s))),
        "witness Klein group must lie in a Sylow 2-subgroup"
    );

    assert!(*elapsed < Duration::from_secs(1200), "took {elapsed:?}");
    println!(
        "criterion 6 PASS: theorem B sweep, {} records, {confirmed} non-vacuous confirmations, S4 witness reproduced",
        recs.len()
    );
}

#[test]
fn criterion_07_first_published_example() {
    let a5 = alternating(5).unwrap();
    let c5 = cyclic(5).unwrap();
    let product = direct_product(&a5, &c5, BuildLimits::with_max_order(512)).unwrap();
    let lat = SubgroupLattice::build(&product.group, lattice_cap()).unwrap();

    let unsupplemented: Vec<u32> = lat
        .of_order(5)
        .iter()
        .copied()
        .filter(|&h| entry_p_nilpotent_supplement(&lat, h, 5).is_none())
        .collect();
    let factor_idx = lat.index_of(&product.right).unwrap();
    assert_eq!(
        unsupplemented,
        vec![factor_idx],
        "exactly the C5 direct factor lacks a 5-nilpotent supplement"
    );
    assert!(lat.is_normal_entry(factor_idx));
    assert!(entry_pi_normal(&lat, factor_idx).is_some());
    assert!(!is_p_soluble(&lat, 5));
    println!("criterion 7 PASS: A5xC5 supplement uniqueness and non-5-solubility reproduced");
}

#[test]
fn criterion_08_second_published_example() {
    let corpus = builtin_corpus(100).unwrap();
    let member = corpus
        .groups
        .iter()
        .find(|g| g.name == "C5C5_rtimes_C3")
        .expect("order-75 group in corpus");
    let lat = SubgroupLattice::build(&member.group, lattice_cap()).unwrap();
    assert_eq!(member.group.order(), 75);
    assert!(!is_p_nilpotent(&lat, 5));

    let p_entry = sylow_entry(&lat, 5);
    let a = p_valuation(75, 5);
    assert_eq!(a, 2);
    // At a = 2 the "2-minimal" order is p^2 (P itself) and the "2-maximal"
    // order is p^0 (the trivial subgroup).
    assert_eq!(lat.of_order(25), vec![p_entry], "P is the unique order-p^2 subgroup");
    assert!(lat.is_normal_entry(p_entry));
    assert_eq!(lat.of_order(1), vec![lat.trivial_index()]);
    assert!(lat.is_normal_entry(lat.trivial_index()));
    println!("criterion 8 PASS: order-75 boundary example reproduced");
}

#[test]
fn criterion_09_weakened_hypothesis_counterexamples() {
    let (report, _) = full_report();
    for id in ["cor-CM1-weak", "cor-CM2-weak"] {
        for (group, p) in [("A4", 2), ("C5C5_rtimes_C3", 5)] {
            let rec = report
                .verdicts
                .iter()
                .find(|v| v.check_id == id && v.group == group && v.p == Some(p))
                .unwrap_or_else(|| panic!("missing {id} record for {group} at p={p}"));
            assert_eq!(
                rec.status,
                Status::ExpectedCounterexample,
                "{id} on {group} p={p}"
            );
        }
    }
    for rec in &report.verdicts {
        if rec.check_id == "cor-CM1" || rec.check_id == "cor-CM2" {
            assert_ne!(
                rec.status,
                Status::Counterexample,
                "{} on {} p={:?}",
                rec.check_id,
                rec.group,
                rec.p
            );
        }
    }
    assert!(report.counterexamples.is_empty(), "unexpected counterexamples present");
    println!("criterion 9 PASS: weakened corollaries fail exactly as published, strict ones hold");
}

#[test]
fn criterion_10_reports_are_deterministic() {
    let (report, _) = full_report();
    let mut first = Vec::new();
    report.write_json(&mut first).unwrap();

    let fresh = run_corpus(&RunConfig::default()).expect("second default corpus run");
    let mut second = Vec::new();
    fresh.write_json(&mut second).unwrap();

    assert_eq!(first.len(), second.len(), "report sizes differ");
    assert!(first == second, "reports differ between consecutive runs");
    println!(
        "criterion 10 PASS: consecutive full runs serialize to identical {} byte reports",
        first.len()
    );
}
