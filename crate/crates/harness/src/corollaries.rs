//! Corollary checks: minimal/maximal subgroup criteria specializing the two
//! main checks, the coprime-order pair, and the smallest-prime criterion.
//!
//! Each check aggregates over every normal subgroup N with p-nilpotent
//! quotient into a single record per (group, check, p): CONFIRMED when at
//! least one instance's hypotheses held and the conclusion held, COUNTEREXAMPLE
//! when some instance's hypotheses held while the conclusion failed. The two
//! `-weak` checks drop the gcd(|G|, p^2-1) hypothesis to gcd(|G|, p-1) and are
//! documented to admit counterexamples.

use num_integer::Integer;
use pinilot_core::invariants::{
    entry_quaternion_free, entry_soluble, is_a4_free, is_prime, p_valuation, sylow_entry_in,
};

use crate::ctx::{supplement_or_pi_normal_clause, GroupCtx};
use crate::error::HarnessError;
use crate::verdict::{Status, SubgroupDesc, VerdictRecord, Witness};

/// The corollary catalog, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorollaryId {
    /// Odd p: maximal subgroups of P supplemented or pi-normal.
    AMax,
    /// Odd p: 2-maximal subgroups of P supplemented or pi-normal.
    A2Max,
    /// Odd p: minimal subgroups of P supplemented or pi-normal.
    AMin,
    /// Odd p: order-p^2 subgroups of P supplemented or pi-normal.
    A2Min,
    /// gcd(|G|, p-1) = 1: maximal subgroups of P.
    BMax,
    /// gcd(|G|, p-1) = 1: subgroups of order p, and of order 4 when P is a
    /// nonabelian 2-group.
    BMin4,
    /// p = 2, N soluble, P quaternion-free: subgroups of order 2.
    BQfree,
    /// gcd(|G|, p^2-1) = 1: 2-maximal subgroups of P.
    Cm1,
    /// gcd(|G|, p^2-1) = 1: order-p^2 subgroups of P.
    Cm2,
    /// Cm1 with the gcd weakened to gcd(|G|, p-1) = 1. Admits counterexamples.
    Cm1Weak,
    /// Cm2 with the gcd weakened. Admits counterexamples.
    Cm2Weak,
    /// p the smallest prime divisor: G Alt(4)-free and p^3 not dividing |L|.
    Lsk,
}

impl CorollaryId {
    pub const ALL: [CorollaryId; 12] = [
        CorollaryId::AMax,
        CorollaryId::A2Max,
        CorollaryId::AMin,
        CorollaryId::A2Min,
        CorollaryId::BMax,
        CorollaryId::BMin4,
        CorollaryId::BQfree,
        CorollaryId::Cm1,
        CorollaryId::Cm2,
        CorollaryId::Cm1Weak,
        CorollaryId::Cm2Weak,
        CorollaryId::Lsk,
    ];

    pub fn id(self) -> &'static str {
        match self {
            CorollaryId::AMax => "cor-A-max",
            CorollaryId::A2Max => "cor-A-2max",
            CorollaryId::AMin => "cor-A-min",
            CorollaryId::A2Min => "cor-A-2min",
            CorollaryId::BMax => "cor-B-max",
            CorollaryId::BMin4 => "cor-B-min4",
            CorollaryId::BQfree => "cor-B-qfree",
            CorollaryId::Cm1 => "cor-CM1",
            CorollaryId::Cm2 => "cor-CM2",
            CorollaryId::Cm1Weak => "cor-CM1-weak",
            CorollaryId::Cm2Weak => "cor-CM2-weak",
            CorollaryId::Lsk => "cor-LSK",
        }
    }

    pub fn parse(s: &str) -> Option<CorollaryId> {
        CorollaryId::ALL.into_iter().find(|c| c.id() == s)
    }

    /// Checks documented to admit counterexamples.
    pub fn admits_counterexamples(self) -> bool {
        matches!(self, CorollaryId::Cm1Weak | CorollaryId::Cm2Weak)
    }

    fn odd_only(self) -> bool {
        matches!(
            self,
            CorollaryId::AMax | CorollaryId::A2Max | CorollaryId::AMin | CorollaryId::A2Min
        )
    }

    /// Primes this check runs at for a given group.
    fn domain(self, primes: &[u32]) -> Vec<u32> {
        match self {
            _ if self.odd_only() => primes.iter().copied().filter(|&p| p != 2).collect(),
            CorollaryId::BQfree => primes.iter().copied().filter(|&p| p == 2).collect(),
            CorollaryId::Lsk => primes.first().map(|&p| vec![p]).unwrap_or_default(),
            _ => primes.to_vec(),
        }
    }
}

enum Instance {
    NotApplicable,
    Held,
    Failed(Witness),
}

fn prefix(n_ord: u32, w: Witness) -> Witness {
    let detail = match w.detail {
        Some(d) => format!("N of order {n_ord}: {d}"),
        None => format!("N of order {n_ord}"),
    };
    Witness {
        clause: w.clause,
        subgroup: w.subgroup,
        detail: Some(detail),
    }
}

fn gcd_witness(g: u64, square: bool) -> Witness {
    let what = if square { "p^2-1" } else { "p-1" };
    Witness::clause("gcd").with_detail(format!("gcd(|G|, {what}) = {g}"))
}

fn normalizer_failed(ctx: &GroupCtx, p_entry: u32, p: u32) -> Option<Witness> {
    let norm = ctx.normalizer_of(p_entry);
    if ctx.entry_p_nilpotent(norm, p) {
        None
    } else {
        Some(
            Witness::clause("normalizer").with_detail(format!(
                "the normalizer of the Sylow {p}-subgroup (order {}) is not {p}-nilpotent",
                ctx.lat.order_of(norm)
            )),
        )
    }
}

fn subgroup_clause(
    ctx: &GroupCtx,
    p_entry: u32,
    order: u32,
    p: u32,
    clause: &str,
) -> Option<Witness> {
    let out = supplement_or_pi_normal_clause(ctx.lat, ctx.lat.set_of(p_entry), order, p, false);
    out.failing.map(|failing| {
        Witness::clause(clause)
            .with_subgroup(SubgroupDesc::of_entry(ctx.lat, failing))
            .with_detail(format!(
                "subgroup of order {order} has no {p}-nilpotent supplement and is not pi-normal"
            ))
    })
}

/// Evaluate one (N, p) instance of a corollary; the quotient hypothesis is
/// already known to hold.
fn instance(ctx: &GroupCtx, id: CorollaryId, p: u32, n_idx: u32, a4_free: bool) -> Instance {
    let n_ord = ctx.lat.order_of(n_idx);
    let a = p_valuation(n_ord as u64, p);

    if id == CorollaryId::Lsk {
        if !a4_free {
            return Instance::Failed(prefix(
                n_ord,
                Witness::clause("a4-free")
                    .with_detail("G has a section isomorphic to Alt(4)"),
            ));
        }
        if a > 2 {
            return Instance::Failed(prefix(
                n_ord,
                Witness::clause("p-cubed").with_detail(format!("p^3 divides |L| = {n_ord}")),
            ));
        }
        return Instance::Held;
    }

    if a == 0 {
        return Instance::NotApplicable;
    }
    let p_entry = sylow_entry_in(ctx.lat, n_idx, p);

    let gcd_square = matches!(id, CorollaryId::Cm1 | CorollaryId::Cm2);
    let gcd_needed = !matches!(
        id,
        CorollaryId::AMax
            | CorollaryId::A2Max
            | CorollaryId::AMin
            | CorollaryId::A2Min
            | CorollaryId::BQfree
    );
    if gcd_needed {
        let target = if gcd_square {
            (p as u64) * (p as u64) - 1
        } else {
            (p - 1) as u64
        };
        let g = ctx.order().gcd(&target);
        if g != 1 {
            return Instance::Failed(prefix(n_ord, gcd_witness(g, gcd_square)));
        }
    }

    if id.odd_only() {
        if let Some(w) = normalizer_failed(ctx, p_entry, p) {
            return Instance::Failed(prefix(n_ord, w));
        }
    }

    if id == CorollaryId::BQfree {
        if !entry_soluble(ctx.lat, n_idx) {
            return Instance::Failed(prefix(
                n_ord,
                Witness::clause("soluble").with_detail("N is not soluble"),
            ));
        }
        if !entry_quaternion_free(ctx.lat, p_entry) {
            return Instance::Failed(prefix(
                n_ord,
                Witness::clause("quaternion-free")
                    .with_detail("the Sylow 2-subgroup of N is not quaternion-free"),
            ));
        }
    }

    let target_order: Option<u32> = match id {
        CorollaryId::AMax | CorollaryId::BMax => Some(p.pow(a - 1)),
        CorollaryId::A2Max | CorollaryId::Cm1 | CorollaryId::Cm1Weak => {
            if a >= 2 {
                Some(p.pow(a - 2))
            } else {
                None
            }
        }
        CorollaryId::AMin | CorollaryId::BMin4 | CorollaryId::BQfree => Some(p),
        CorollaryId::A2Min | CorollaryId::Cm2 | CorollaryId::Cm2Weak => Some(p * p),
        CorollaryId::Lsk => unreachable!("handled above"),
    };
    if let Some(order) = target_order {
        if let Some(w) = subgroup_clause(ctx, p_entry, order, p, "subgroups") {
            return Instance::Failed(prefix(n_ord, w));
        }
    }
    if id == CorollaryId::BMin4 && p == 2 && !pinilot_core::invariants::entry_abelian(ctx.lat, p_entry)
    {
        if let Some(w) = subgroup_clause(ctx, p_entry, 4, p, "order4-subgroups") {
            return Instance::Failed(prefix(n_ord, w));
        }
    }
    Instance::Held
}

/// Run one corollary at one prime, aggregated over all instances.
pub fn corollary_record(ctx: &GroupCtx, id: CorollaryId, p: u32) -> VerdictRecord {
    let mut rec = VerdictRecord::new(id.id(), ctx.name);
    rec.p = Some(p);

    let a4_free = if id == CorollaryId::Lsk {
        is_a4_free(ctx.lat)
    } else {
        true
    };
    let conclusion = ctx.is_p_nilpotent(p);

    let mut held = 0u64;
    let mut any = false;
    let mut first_fail: Option<Witness> = None;
    for &n_idx in ctx.lat.normal_entries() {
        if !ctx.quotient_p_nilpotent(n_idx, p) {
            continue;
        }
        match instance(ctx, id, p, n_idx, a4_free) {
            Instance::NotApplicable => {}
            Instance::Failed(w) => {
                any = true;
                if first_fail.is_none() {
                    first_fail = Some(w);
                }
            }
            Instance::Held => {
                any = true;
                if !conclusion {
                    let n_ord = ctx.lat.order_of(n_idx);
                    let witness = Witness::clause("conclusion")
                        .with_subgroup(SubgroupDesc::of_entry(ctx.lat, n_idx))
                        .with_detail(format!(
                            "hypotheses hold for N of order {n_ord} but G is not {p}-nilpotent"
                        ));
                    rec.witness = Some(witness);
                    return rec.concluded(false, id.admits_counterexamples());
                }
                held += 1;
            }
        }
    }

    if held > 0 {
        rec.instances = Some(held);
        rec.concluded(true, false)
    } else if any {
        rec.hypothesis_fails(first_fail.expect("a failing instance was recorded"))
    } else {
        rec.not_applicable("no applicable instance")
    }
}

/// Run one corollary by its check id at one prime.
pub fn check_corollary(ctx: &GroupCtx, id: &str, p: u32) -> Result<VerdictRecord, HarnessError> {
    let cor = CorollaryId::parse(id)
        .ok_or_else(|| HarnessError::UnknownCheck(id.to_string()))?;
    if !is_prime(p as u64) {
        return Err(HarnessError::PrimeRequired(p));
    }
    if cor.odd_only() && p == 2 {
        return Err(HarnessError::OddPrimeRequired(p));
    }
    let primes = ctx.primes();
    if !cor.domain(&primes).contains(&p) {
        let mut rec = VerdictRecord::new(cor.id(), ctx.name);
        rec.p = Some(p);
        let reason = match cor {
            CorollaryId::BQfree => "only defined at p = 2".to_string(),
            CorollaryId::Lsk => "p is not the smallest prime divisor of |G|".to_string(),
            _ => "p does not divide the order of G".to_string(),
        };
        return Ok(rec.not_applicable(reason));
    }
    Ok(corollary_record(ctx, cor, p))
}

/// All corollaries over their prime domains, in catalog order.
pub fn sweep_corollaries(ctx: &GroupCtx) -> Vec<VerdictRecord> {
    let primes = ctx.primes();
    let mut out = Vec::new();
    for id in CorollaryId::ALL {
        for p in id.domain(&primes) {
            out.push(corollary_record(ctx, id, p));
        }
    }
    out
}

/// True when the record carries a counterexample status.
pub fn is_counterexample(rec: &VerdictRecord) -> bool {
    matches!(
        rec.status,
        Status::Counterexample | Status::ExpectedCounterexample
    )
}
