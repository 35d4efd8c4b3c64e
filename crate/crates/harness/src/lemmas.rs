//! Structural lemma checks, aggregated one record per (group, lemma, prime).
//!
//! Each check sweeps every instance of a lemma's hypotheses over the group:
//! a violation is a COUNTEREXAMPLE, a clean sweep with at least one
//! hypothesis-satisfying instance is CONFIRMED with the instance count, and a
//! sweep in which no instance ever satisfied the hypotheses reports
//! HYPOTHESIS_FAILS. The pair checks (2.4, 2.5, 2.8) quantify over all
//! subgroup/minimal-normal pairs and are restricted to small groups.

use std::collections::HashMap;

use pinilot_core::invariants::{
    entry_abelian, hypercenter_entry, p_prime_part, p_residual, sylow_entries, sylow_entry,
    sylow_entry_in, u_hypercenter_entry,
};
use pinilot_core::pitheory::{
    entry_p_nilpotent_supplement, entry_pi_normal, entry_pi_property,
};
use pinilot_core::{structure, SubgroupLattice};

use crate::ctx::{supplement_or_pi_normal_clause, GroupCtx};
use crate::verdict::{SubgroupDesc, VerdictRecord, Witness};

pub const LEMMA_IDS: [&str; 10] = [
    "lemma-2.1.1",
    "lemma-2.1.3",
    "lemma-2.2",
    "lemma-2.3",
    "lemma-2.4",
    "lemma-2.5",
    "lemma-2.6",
    "lemma-2.7",
    "lemma-2.8",
    "lemma-2.9",
];

/// Accumulates instance outcomes for one aggregated record.
struct Agg {
    held: u64,
    any: bool,
    first_fail: Option<Witness>,
    violation: Option<Witness>,
}

impl Agg {
    fn new() -> Agg {
        Agg {
            held: 0,
            any: false,
            first_fail: None,
            violation: None,
        }
    }

    fn hold(&mut self) {
        self.any = true;
        self.held += 1;
    }

    fn hold_many(&mut self, n: u64) {
        self.any = true;
        self.held += n;
    }

    fn fail(&mut self, w: impl FnOnce() -> Witness) {
        self.any = true;
        if self.first_fail.is_none() {
            self.first_fail = Some(w());
        }
    }

    fn violate(&mut self, w: impl FnOnce() -> Witness) -> bool {
        self.any = true;
        if self.violation.is_none() {
            self.violation = Some(w());
        }
        true
    }

    fn done(&self) -> bool {
        self.violation.is_some()
    }

    fn finish(self, mut rec: VerdictRecord, na_reason: &str) -> VerdictRecord {
        if let Some(v) = self.violation {
            rec.witness = Some(v);
            rec.instances = Some(self.held);
            rec.concluded(false, false)
        } else if self.held > 0 {
            rec.instances = Some(self.held);
            rec.concluded(true, false)
        } else if self.any {
            rec.hypothesis_fails(self.first_fail.expect("failing instance recorded"))
        } else {
            rec.not_applicable(na_reason.to_string())
        }
    }
}

fn record(ctx: &GroupCtx, id: &str, p: Option<u32>) -> VerdictRecord {
    let mut rec = VerdictRecord::new(id, ctx.name);
    rec.p = p;
    rec
}

/// Quotient lattices by normal entry index, built on demand.
struct QuotientCache<'a> {
    lat: &'a SubgroupLattice,
    built: HashMap<u32, SubgroupLattice>,
}

impl<'a> QuotientCache<'a> {
    fn new(lat: &'a SubgroupLattice) -> Self {
        QuotientCache {
            lat,
            built: HashMap::new(),
        }
    }

    fn entry(&mut self, n_idx: u32) -> &SubgroupLattice {
        self.built.entry(n_idx).or_insert_with(|| {
            let qv = self
                .lat
                .quotient_view(n_idx)
                .expect("normal entry has a quotient");
            SubgroupLattice::build(qv.group(), 1_000_000)
                .expect("quotient lattice is no larger than the group's")
        })
    }
}

/// Images of pi-property subgroups keep the pi-property in every quotient.
fn lemma_2_1_1(ctx: &GroupCtx, qcache: &mut QuotientCache) -> VerdictRecord {
    let lat = ctx.lat;
    let normals = lat.normal_entries().to_vec();
    let mut agg = Agg::new();
    for h in 0..lat.len() as u32 {
        if agg.done() {
            break;
        }
        if !entry_pi_property(lat, h) {
            continue;
        }
        if lat.is_normal_entry(h) {
            // Normal subgroups project to normal subgroups, which always
            // carry the property; counted without projecting.
            agg.hold_many(normals.len() as u64);
            continue;
        }
        for &n_idx in &normals {
            if n_idx == lat.trivial_index() || n_idx == lat.full_index() {
                agg.hold();
                continue;
            }
            let qv = lat.quotient_view(n_idx).expect("normal entry");
            let im_set = qv.project_set(lat.set_of(h));
            let qlat = qcache.entry(n_idx);
            let im = qlat
                .index_of_set(&im_set)
                .expect("projected subgroup is in the quotient lattice");
            if entry_pi_property(qlat, im) {
                agg.hold();
            } else {
                let n_ord = lat.order_of(n_idx);
                agg.violate(|| {
                    Witness::clause("quotient-pi-property")
                        .with_subgroup(SubgroupDesc::of_entry(lat, h))
                        .with_detail(format!(
                            "image of H in G/N loses the pi-property, |N| = {n_ord}"
                        ))
                });
                break;
            }
        }
    }
    agg.finish(record(ctx, "lemma-2.1.1", None), "no subgroup has the pi-property")
}

/// Pi-normality passes to G/N when N lies in H or has order coprime to H.
fn lemma_2_1_3(ctx: &GroupCtx, qcache: &mut QuotientCache) -> VerdictRecord {
    let lat = ctx.lat;
    let normals = lat.normal_entries().to_vec();
    let mut agg = Agg::new();
    for h in 0..lat.len() as u32 {
        if agg.done() {
            break;
        }
        if entry_pi_normal(lat, h).is_none() {
            continue;
        }
        let h_ord = lat.order_of(h) as u64;
        let h_normal = lat.is_normal_entry(h);
        for &n_idx in &normals {
            let n_ord = lat.order_of(n_idx) as u64;
            let qualifies = lat.set_of(n_idx).is_subset_of(lat.set_of(h))
                || num_integer::gcd(h_ord, n_ord) == 1;
            if !qualifies {
                continue;
            }
            if h_normal || n_idx == lat.trivial_index() || n_idx == lat.full_index() {
                agg.hold();
                continue;
            }
            let qv = lat.quotient_view(n_idx).expect("normal entry");
            let im_set = qv.project_set(lat.set_of(h));
            let qlat = qcache.entry(n_idx);
            let im = qlat
                .index_of_set(&im_set)
                .expect("projected subgroup is in the quotient lattice");
            if qlat.is_normal_entry(im) || entry_pi_normal(qlat, im).is_some() {
                agg.hold();
            } else {
                agg.violate(|| {
                    Witness::clause("quotient-pi-normal")
                        .with_subgroup(SubgroupDesc::of_entry(lat, h))
                        .with_detail(format!(
                            "image of H in G/N is not pi-normal, |N| = {n_ord}"
                        ))
                });
                break;
            }
        }
    }
    agg.finish(record(ctx, "lemma-2.1.3", None), "no subgroup is pi-normal")
}

/// A self-centralizing-normalizer Sylow subgroup of N forces p-nilpotency.
fn lemma_2_2(ctx: &GroupCtx, p: u32) -> VerdictRecord {
    let lat = ctx.lat;
    let mut agg = Agg::new();
    let conclusion = ctx.is_p_nilpotent(p);
    let abelian = ctx.group().is_abelian();
    for &n_idx in lat.normal_entries() {
        if agg.done() {
            break;
        }
        if !ctx.quotient_p_nilpotent(n_idx, p) {
            continue;
        }
        let holds = if abelian {
            true
        } else {
            let p_entry = sylow_entry_in(lat, n_idx, p);
            let norm_idx = ctx.normalizer_of(p_entry);
            let cent = structure::centralizer(ctx.group(), &lat.subgroup(p_entry))
                .expect("subgroup of its own parent");
            let cent_idx = lat
                .index_of_set(cent.set())
                .expect("centralizer is a subgroup");
            if norm_idx != cent_idx {
                let n_ord = lat.order_of(n_idx);
                let (no, co) = (lat.order_of(norm_idx), lat.order_of(cent_idx));
                agg.fail(|| {
                    Witness::clause("normalizer-equals-centralizer").with_detail(format!(
                        "N of order {n_ord}: N_G(P) has order {no}, C_G(P) has order {co}"
                    ))
                });
                false
            } else {
                true
            }
        };
        if holds {
            if conclusion {
                agg.hold();
            } else {
                let n_ord = lat.order_of(n_idx);
                agg.violate(|| {
                    Witness::clause("conclusion").with_detail(format!(
                        "N_G(P) = C_G(P) for N of order {n_ord} but G is not {p}-nilpotent"
                    ))
                });
            }
        }
    }
    agg.finish(
        record(ctx, "lemma-2.2", Some(p)),
        "no normal subgroup has a p-nilpotent quotient",
    )
}

/// Normal subgroups whose generalized Fitting subgroup lies in the
/// supersoluble hypercenter lie there themselves.
fn lemma_2_3(ctx: &GroupCtx) -> VerdictRecord {
    let lat = ctx.lat;
    let zu = match u_hypercenter_entry(lat) {
        Ok(z) => z,
        Err(e) => return record(ctx, "lemma-2.3", None).skipped(e.to_string()),
    };
    let z_set = lat.set_of(zu).clone();
    let mut agg = Agg::new();
    for &e_idx in lat.normal_entries() {
        if agg.done() {
            break;
        }
        let f_idx = pinilot_core::invariants::generalized_fitting_entry_of(lat, e_idx);
        if !lat.set_of(f_idx).is_subset_of(&z_set) {
            let (eo, fo) = (lat.order_of(e_idx), lat.order_of(f_idx));
            agg.fail(|| {
                Witness::clause("fstar-in-hypercenter").with_detail(format!(
                    "F*(E) of order {fo} is not in the supersoluble hypercenter, |E| = {eo}"
                ))
            });
            continue;
        }
        if lat.set_of(e_idx).is_subset_of(&z_set) {
            agg.hold();
        } else {
            agg.violate(|| {
                Witness::clause("conclusion")
                    .with_subgroup(SubgroupDesc::of_entry(lat, e_idx))
                    .with_detail(
                        "F*(E) lies in the supersoluble hypercenter but E does not",
                    )
            });
        }
    }
    agg.finish(record(ctx, "lemma-2.3", None), "no normal subgroup qualifies")
}

/// A pi-normal p-subgroup meets a minimal normal subgroup in 1 or the whole
/// minimal normal subgroup, provided the intersection is normal in a Sylow
/// p-subgroup.
fn lemma_2_4(ctx: &GroupCtx, p: u32) -> VerdictRecord {
    let lat = ctx.lat;
    let group = ctx.group();
    let minimals = lat.minimal_normals();
    let sylows = sylow_entries(lat, p).to_vec();
    let mut agg = Agg::new();
    for h in 0..lat.len() as u32 {
        if agg.done() {
            break;
        }
        let h_ord = lat.order_of(h);
        if h_ord == 1 || p_prime_part(h_ord as u64, p) != 1 {
            continue;
        }
        if entry_pi_normal(lat, h).is_none() {
            continue;
        }
        for &nm in &minimals {
            let cap = lat.set_of(h).intersection(lat.set_of(nm));
            if cap.count() == 1 {
                // The trivial intersection is normal in every Sylow subgroup
                // and already satisfies the conclusion.
                agg.hold();
                continue;
            }
            let gens = structure::reduce_generators(group, &cap);
            let cap_sub = pinilot_core::subgroup::subgroup_from_set(group, cap.clone(), gens);
            let anchored = sylows.iter().any(|&s| {
                cap.is_subset_of(lat.set_of(s))
                    && structure::is_normal_in(group, &cap_sub, &lat.subgroup(s))
                        .expect("same parent")
            });
            if !anchored {
                let nm_ord = lat.order_of(nm);
                agg.fail(|| {
                    Witness::clause("sylow-normal-intersection")
                        .with_subgroup(SubgroupDesc::of_entry(lat, h))
                        .with_detail(format!(
                            "H meets the minimal normal subgroup of order {nm_ord} in a \
                             subgroup normal in no Sylow {p}-subgroup"
                        ))
                });
                continue;
            }
            let whole = cap.count() == lat.set_of(nm).count();
            if whole {
                agg.hold();
            } else {
                let nm_ord = lat.order_of(nm);
                let cap_ord = cap.count();
                agg.violate(|| {
                    Witness::clause("conclusion")
                        .with_subgroup(SubgroupDesc::of_entry(lat, h))
                        .with_detail(format!(
                            "H meets the minimal normal subgroup of order {nm_ord} in a \
                             proper nontrivial subgroup of order {cap_ord}"
                        ))
                });
                break;
            }
        }
    }
    agg.finish(
        record(ctx, "lemma-2.4", Some(p)),
        "no pi-normal p-subgroup meets a minimal normal subgroup",
    )
}

/// A minimal normal subgroup meeting a pi-normal p-subgroup nontrivially is a
/// p-group.
fn lemma_2_5(ctx: &GroupCtx, p: u32) -> VerdictRecord {
    let lat = ctx.lat;
    let minimals = lat.minimal_normals();
    let mut agg = Agg::new();
    for h in 0..lat.len() as u32 {
        if agg.done() {
            break;
        }
        let h_ord = lat.order_of(h);
        if h_ord == 1 || p_prime_part(h_ord as u64, p) != 1 {
            continue;
        }
        if entry_pi_normal(lat, h).is_none() {
            continue;
        }
        for &nm in &minimals {
            let cap_count = lat.set_of(h).intersection_count(lat.set_of(nm));
            if cap_count == 1 {
                agg.fail(|| {
                    Witness::clause("intersection").with_detail(format!(
                        "no pi-normal {p}-subgroup meets a minimal normal subgroup nontrivially"
                    ))
                });
                continue;
            }
            let nm_ord = lat.order_of(nm);
            if p_prime_part(nm_ord as u64, p) == 1 {
                agg.hold();
            } else {
                agg.violate(|| {
                    Witness::clause("conclusion")
                        .with_subgroup(SubgroupDesc::of_entry(lat, h))
                        .with_detail(format!(
                            "H meets a minimal normal subgroup of order {nm_ord} that is \
                             not a {p}-group"
                        ))
                });
                break;
            }
        }
    }
    agg.finish(
        record(ctx, "lemma-2.5", Some(p)),
        "no pi-normal p-subgroup meets a minimal normal subgroup",
    )
}

/// Maximal subgroups of a Sylow p-subgroup with supplements or trivial
/// intersection with L force p-nilpotency (odd p with a p-nilpotent Sylow
/// normalizer; p = 2 without the normalizer hypothesis).
fn lemma_2_6_or_7(ctx: &GroupCtx, p: u32, with_normalizer: bool) -> VerdictRecord {
    let id = if with_normalizer { "lemma-2.6" } else { "lemma-2.7" };
    let lat = ctx.lat;
    let p_entry = sylow_entry(lat, p);
    let maximals = lat.maximal_subgroups_of(p_entry);
    let suppl_ok: Vec<bool> = maximals
        .iter()
        .map(|&m1| entry_p_nilpotent_supplement(lat, m1, p).is_some())
        .collect();
    let norm_ok = !with_normalizer || {
        let norm = ctx.normalizer_of(p_entry);
        ctx.entry_p_nilpotent(norm, p)
    };
    let conclusion = ctx.is_p_nilpotent(p);
    let mut agg = Agg::new();
    for &l_idx in lat.normal_entries() {
        if agg.done() {
            break;
        }
        let index = ctx.order() / lat.order_of(l_idx) as u64;
        if p_prime_part(index, p) != 1 {
            continue;
        }
        if !norm_ok {
            agg.fail(|| {
                Witness::clause("normalizer").with_detail(format!(
                    "the normalizer of the Sylow {p}-subgroup is not {p}-nilpotent"
                ))
            });
            continue;
        }
        let l_set = lat.set_of(l_idx);
        let bad = maximals
            .iter()
            .enumerate()
            .find(|&(i, &m1)| !suppl_ok[i] && lat.set_of(m1).intersection_count(l_set) != 1)
            .map(|(_, &m1)| m1);
        if let Some(m1) = bad {
            let l_ord = lat.order_of(l_idx);
            agg.fail(|| {
                Witness::clause("maximal-subgroups")
                    .with_subgroup(SubgroupDesc::of_entry(lat, m1))
                    .with_detail(format!(
                        "maximal subgroup of the Sylow {p}-subgroup has no {p}-nilpotent \
                         supplement and meets L of order {l_ord} nontrivially"
                    ))
            });
            continue;
        }
        if conclusion {
            agg.hold();
        } else {
            let l_ord = lat.order_of(l_idx);
            agg.violate(|| {
                Witness::clause("conclusion").with_detail(format!(
                    "hypotheses hold for L of order {l_ord} but G is not {p}-nilpotent"
                ))
            });
        }
    }
    agg.finish(
        record(ctx, id, Some(p)),
        "no normal subgroup has p-power index",
    )
}

/// Normal p-subgroups whose order-p (and order-4) subgroups are supplemented
/// or pi-normal lie in the supersoluble hypercenter.
fn lemma_2_8(ctx: &GroupCtx, p: u32, zu: u32) -> VerdictRecord {
    let lat = ctx.lat;
    let z_set = lat.set_of(zu).clone();
    let mut agg = Agg::new();
    for &p_idx in lat.normal_entries() {
        if agg.done() {
            break;
        }
        let ord = lat.order_of(p_idx);
        if ord == 1 || p_prime_part(ord as u64, p) != 1 {
            continue;
        }
        let within = lat.set_of(p_idx);
        let c1 = supplement_or_pi_normal_clause(lat, within, p, p, false);
        let c2 = if p == 2 && !entry_abelian(lat, p_idx) {
            supplement_or_pi_normal_clause(lat, within, 4, p, false)
        } else {
            crate::ctx::ClauseOutcome::vacuous()
        };
        if let Some(failing) = c1.failing.or(c2.failing) {
            let po = ord;
            agg.fail(|| {
                Witness::clause("small-subgroups")
                    .with_subgroup(SubgroupDesc::of_entry(lat, failing))
                    .with_detail(format!(
                        "subgroup of the normal {p}-subgroup of order {po} has no \
                         {p}-nilpotent supplement and is not pi-normal"
                    ))
            });
            continue;
        }
        if within.is_subset_of(&z_set) {
            agg.hold();
        } else {
            agg.violate(|| {
                Witness::clause("conclusion")
                    .with_subgroup(SubgroupDesc::of_entry(lat, p_idx))
                    .with_detail(
                        "the normal p-subgroup is not in the supersoluble hypercenter",
                    )
            });
        }
    }
    agg.finish(
        record(ctx, "lemma-2.8", Some(p)),
        "no nontrivial normal p-subgroup",
    )
}

/// Minimal subgroups of P meeting the p-residual either centrally (in the
/// hypercenter) or with supplements force p-nilpotency, for odd p with a
/// p-nilpotent Sylow normalizer.
fn lemma_2_9(ctx: &GroupCtx, p: u32) -> VerdictRecord {
    let lat = ctx.lat;
    let mut rec = record(ctx, "lemma-2.9", Some(p));
    let p_entry = sylow_entry(lat, p);
    let norm = ctx.normalizer_of(p_entry);
    if !ctx.entry_p_nilpotent(norm, p) {
        return rec.hypothesis_fails(Witness::clause("normalizer").with_detail(format!(
            "the normalizer of the Sylow {p}-subgroup is not {p}-nilpotent"
        )));
    }
    let residual = p_residual(ctx.group(), p);
    let cap = lat.set_of(p_entry).intersection(residual.set());
    let z_set = lat.set_of(hypercenter_entry(lat)).clone();
    let mut checked = 0u64;
    for h in lat.of_order_within(p, &cap) {
        checked += 1;
        let ok = lat.set_of(h).is_subset_of(&z_set)
            || entry_p_nilpotent_supplement(lat, h, p).is_some();
        if !ok {
            return rec.hypothesis_fails(
                Witness::clause("minimal-subgroups")
                    .with_subgroup(SubgroupDesc::of_entry(lat, h))
                    .with_detail(format!(
                        "minimal subgroup of P meeting the {p}-residual is outside the \
                         hypercenter and has no {p}-nilpotent supplement"
                    )),
            );
        }
    }
    rec.instances = Some(checked);
    rec.concluded(ctx.is_p_nilpotent(p), false)
}

/// Run every lemma check on one group. Pair checks only run when the group
/// order is at most `pair_bound`.
pub fn sweep_lemmas(ctx: &GroupCtx, pair_bound: u32) -> Vec<VerdictRecord> {
    let lat = ctx.lat;
    let primes = ctx.primes();
    let odd: Vec<u32> = primes.iter().copied().filter(|&p| p != 2).collect();
    let has_two = primes.contains(&2);
    let small = ctx.order() <= pair_bound as u64;
    let restriction = format!(
        "pair quantifiers restricted to groups of order at most {pair_bound}"
    );
    let mut out = Vec::new();

    let mut qcache = QuotientCache::new(lat);
    out.push(lemma_2_1_1(ctx, &mut qcache));
    out.push(lemma_2_1_3(ctx, &mut qcache));
    drop(qcache);

    if primes.is_empty() {
        out.push(record(ctx, "lemma-2.2", None).not_applicable("the group is trivial"));
    } else {
        for &p in &primes {
            out.push(lemma_2_2(ctx, p));
        }
    }

    out.push(lemma_2_3(ctx));

    for id in ["lemma-2.4", "lemma-2.5"] {
        if !small {
            out.push(record(ctx, id, None).not_applicable(restriction.clone()));
        } else if primes.is_empty() {
            out.push(record(ctx, id, None).not_applicable("the group is trivial"));
        }
    }
    if small {
        for &p in &primes {
            out.push(lemma_2_4(ctx, p));
        }
        for &p in &primes {
            out.push(lemma_2_5(ctx, p));
        }
    }

    if odd.is_empty() {
        out.push(record(ctx, "lemma-2.6", None).not_applicable("no odd prime divides |G|"));
    } else {
        for &p in &odd {
            out.push(lemma_2_6_or_7(ctx, p, true));
        }
    }

    if has_two {
        out.push(lemma_2_6_or_7(ctx, 2, false));
    } else {
        out.push(
            record(ctx, "lemma-2.7", Some(2)).not_applicable("2 does not divide |G|"),
        );
    }

    if !small {
        out.push(record(ctx, "lemma-2.8", None).not_applicable(restriction));
    } else if primes.is_empty() {
        out.push(record(ctx, "lemma-2.8", None).not_applicable("the group is trivial"));
    } else {
        match u_hypercenter_entry(lat) {
            Ok(zu) => {
                for &p in &primes {
                    out.push(lemma_2_8(ctx, p, zu));
                }
            }
            Err(e) => out.push(record(ctx, "lemma-2.8", None).skipped(e.to_string())),
        }
    }

    if odd.is_empty() {
        out.push(record(ctx, "lemma-2.9", None).not_applicable("no odd prime divides |G|"));
    } else {
        for &p in &odd {
            out.push(lemma_2_9(ctx, p));
        }
    }

    out
}
