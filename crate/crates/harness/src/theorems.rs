//! The two p-nilpotency criteria and the p-supersolubility remark.
//!
//! Both criteria quantify over a normal subgroup N with p-nilpotent quotient,
//! its Sylow p-subgroup P, and an exponent m with 1 <= p^m < |P|. The core
//! hypothesis clause asks that every subgroup of P of order p^m either has a
//! p-nilpotent supplement in G or satisfies pi-normality.
//!
//! Check A additionally assumes p odd and the normalizer of P p-nilpotent.
//! Check B instead assumes gcd(|G|, p-1) = 1 and concludes under one of four
//! conditions: (i) m >= 2, (ii) P abelian or p odd, (iii) the clause also
//! holding for cyclic subgroups of order 4, (iv) N soluble with P
//! quaternion-free. The remark drops the normalizer hypothesis and concludes
//! p-supersolubility for p-soluble groups.

use num_integer::Integer;
use pinilot_core::invariants::{
    entry_abelian, entry_quaternion_free, entry_soluble, is_prime, p_part, p_valuation,
    sylow_entry_in,
};

use crate::ctx::{clause_witness, supplement_or_pi_normal_clause, ClauseOutcome, GroupCtx};
use crate::error::HarnessError;
use crate::verdict::{SubgroupDesc, VerdictRecord, Witness};

pub const CHECK_THEOREM_A: &str = "thm-A";
pub const CHECK_THEOREM_B: &str = "thm-B";
pub const CHECK_REMARK_1: &str = "remark-1";

/// The four alternative conclusions of check B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BCondition {
    I,
    II,
    III,
    IV,
}

impl BCondition {
    pub const ALL: [BCondition; 4] = [BCondition::I, BCondition::II, BCondition::III, BCondition::IV];

    pub fn label(self) -> &'static str {
        match self {
            BCondition::I => "i",
            BCondition::II => "ii",
            BCondition::III => "iii",
            BCondition::IV => "iv",
        }
    }
}

fn base_record(ctx: &GroupCtx, check_id: &str, p: u32, n_idx: u32) -> VerdictRecord {
    let n_ord = ctx.lat.order_of(n_idx);
    let mut rec = VerdictRecord::new(check_id, ctx.name);
    rec.p = Some(p);
    rec.n_order = Some(n_ord);
    rec.n_index = Some((ctx.order() / n_ord as u64) as u32);
    rec
}

fn quotient_witness(ctx: &GroupCtx, n_idx: u32, p: u32) -> Witness {
    let index = ctx.order() / ctx.lat.order_of(n_idx) as u64;
    Witness::clause("quotient")
        .with_detail(format!("G/N of order {index} is not {p}-nilpotent"))
}

fn normalizer_witness(ctx: &GroupCtx, norm_idx: u32, p: u32) -> Witness {
    Witness::clause("normalizer")
        .with_subgroup(SubgroupDesc::of_entry(ctx.lat, norm_idx))
        .with_detail(format!(
            "the normalizer of the Sylow {p}-subgroup of N is not {p}-nilpotent"
        ))
}

fn reason_p_absent() -> String {
    "p does not divide the order of N".to_string()
}

fn reason_no_m() -> String {
    "the Sylow p-subgroup of N has order p, so no m satisfies 1 <= p^m < |P|".to_string()
}

/// Validate p and the normal entry, returning the p-valuation of |N|.
fn validate_instance(
    ctx: &GroupCtx,
    p: u32,
    n_idx: u32,
    odd_only: bool,
) -> Result<u32, HarnessError> {
    if !is_prime(p as u64) {
        return Err(HarnessError::PrimeRequired(p));
    }
    if odd_only && p == 2 {
        return Err(HarnessError::OddPrimeRequired(p));
    }
    if !ctx.lat.is_normal_entry(n_idx) {
        return Err(HarnessError::Group(pinilot_core::GroupError::NotNormal));
    }
    Ok(p_valuation(ctx.lat.order_of(n_idx) as u64, p))
}

fn canonical_sylow(ctx: &GroupCtx, n_idx: u32, p: u32) -> u32 {
    sylow_entry_in(ctx.lat, n_idx, p)
}

fn assert_sylow_of(ctx: &GroupCtx, n_idx: u32, p: u32, p_entry: u32) {
    let expect = p_part(ctx.lat.order_of(n_idx) as u64, p) as u32;
    assert_eq!(
        ctx.lat.order_of(p_entry),
        expect,
        "given entry is not a Sylow {p}-subgroup of N"
    );
    assert!(
        ctx.lat.set_of(p_entry).is_subset_of(ctx.lat.set_of(n_idx)),
        "given Sylow entry does not lie in N"
    );
}

fn theorem_a_record(ctx: &GroupCtx, p: u32, n_idx: u32, m: u32, p_entry: u32) -> VerdictRecord {
    let mut rec = base_record(ctx, CHECK_THEOREM_A, p, n_idx);
    rec.m = Some(m);
    if !ctx.quotient_p_nilpotent(n_idx, p) {
        return rec.hypothesis_fails(quotient_witness(ctx, n_idx, p));
    }
    let norm = ctx.normalizer_of(p_entry);
    if !ctx.entry_p_nilpotent(norm, p) {
        return rec.hypothesis_fails(normalizer_witness(ctx, norm, p));
    }
    let out = supplement_or_pi_normal_clause(ctx.lat, ctx.lat.set_of(p_entry), p.pow(m), p, false);
    if let Some(failing) = out.failing {
        return rec.hypothesis_fails(clause_witness(ctx.lat, "subgroups", failing, p));
    }
    rec.instances = Some(out.checked);
    rec.concluded(ctx.is_p_nilpotent(p), false)
}

/// Check A on one instance (p odd, N normal, 1 <= m with p^m < |P|).
pub fn check_theorem_a(
    ctx: &GroupCtx,
    p: u32,
    n_idx: u32,
    m: u32,
) -> Result<VerdictRecord, HarnessError> {
    let a = validate_instance(ctx, p, n_idx, true)?;
    let mut rec = base_record(ctx, CHECK_THEOREM_A, p, n_idx);
    rec.m = Some(m);
    if a == 0 {
        return Ok(rec.not_applicable(reason_p_absent()));
    }
    if m < 1 || m >= a {
        if a == 1 {
            return Ok(rec.not_applicable(reason_no_m()));
        }
        return Ok(rec.not_applicable(format!("m must satisfy 1 <= m < {a}")));
    }
    Ok(theorem_a_record(ctx, p, n_idx, m, canonical_sylow(ctx, n_idx, p)))
}

/// Check A with an explicitly chosen Sylow p-subgroup of N. The verdict must
/// not depend on the choice, only witness subgroups may differ.
pub fn check_theorem_a_with_sylow(
    ctx: &GroupCtx,
    p: u32,
    n_idx: u32,
    m: u32,
    p_entry: u32,
) -> Result<VerdictRecord, HarnessError> {
    let a = validate_instance(ctx, p, n_idx, true)?;
    assert_sylow_of(ctx, n_idx, p, p_entry);
    let mut rec = base_record(ctx, CHECK_THEOREM_A, p, n_idx);
    rec.m = Some(m);
    if a == 0 || m < 1 || m >= a {
        return Ok(rec.not_applicable("no valid m for this instance".to_string()));
    }
    Ok(theorem_a_record(ctx, p, n_idx, m, p_entry))
}

fn theorem_b_record(
    ctx: &GroupCtx,
    p: u32,
    n_idx: u32,
    m: u32,
    p_entry: u32,
    cond: BCondition,
    base_clause: &mut Option<ClauseOutcome>,
) -> VerdictRecord {
    let mut rec = base_record(ctx, CHECK_THEOREM_B, p, n_idx);
    rec.m = Some(m);
    rec.condition = Some(cond.label().to_string());
    if cond == BCondition::I && m < 2 {
        return rec.not_applicable("condition (i) requires m >= 2");
    }
    let g = ctx.order().gcd(&((p - 1) as u64));
    if g != 1 {
        return rec.hypothesis_fails(
            Witness::clause("gcd").with_detail(format!("gcd(|G|, p-1) = {g}")),
        );
    }
    if !ctx.quotient_p_nilpotent(n_idx, p) {
        return rec.hypothesis_fails(quotient_witness(ctx, n_idx, p));
    }
    let base = *base_clause.get_or_insert_with(|| {
        supplement_or_pi_normal_clause(ctx.lat, ctx.lat.set_of(p_entry), p.pow(m), p, false)
    });
    if let Some(failing) = base.failing {
        return rec.hypothesis_fails(clause_witness(ctx.lat, "subgroups", failing, p));
    }
    let mut checked = base.checked;
    match cond {
        BCondition::I => {}
        BCondition::II => {
            if p == 2 && !entry_abelian(ctx.lat, p_entry) {
                return rec.hypothesis_fails(
                    Witness::clause("sylow-abelian")
                        .with_detail("the Sylow 2-subgroup of N is nonabelian"),
                );
            }
        }
        BCondition::III => {
            let c4 =
                supplement_or_pi_normal_clause(ctx.lat, ctx.lat.set_of(p_entry), 4, p, true);
            checked += c4.checked;
            if let Some(failing) = c4.failing {
                return rec.hypothesis_fails(clause_witness(
                    ctx.lat,
                    "cyclic4-subgroups",
                    failing,
                    p,
                ));
            }
        }
        BCondition::IV => {
            if !entry_soluble(ctx.lat, n_idx) {
                return rec.hypothesis_fails(
                    Witness::clause("soluble-and-quaternion-free")
                        .with_detail("N is not soluble"),
                );
            }
            if !entry_quaternion_free(ctx.lat, p_entry) {
                return rec.hypothesis_fails(
                    Witness::clause("soluble-and-quaternion-free")
                        .with_detail("the Sylow 2-subgroup of N is not quaternion-free"),
                );
            }
        }
    }
    rec.instances = Some(checked);
    rec.concluded(ctx.is_p_nilpotent(p), false)
}

/// Check B on one instance, under one of its four conditions.
pub fn check_theorem_b(
    ctx: &GroupCtx,
    p: u32,
    n_idx: u32,
    m: u32,
    cond: BCondition,
) -> Result<VerdictRecord, HarnessError> {
    let a = validate_instance(ctx, p, n_idx, false)?;
    let mut rec = base_record(ctx, CHECK_THEOREM_B, p, n_idx);
    rec.m = Some(m);
    rec.condition = Some(cond.label().to_string());
    if a == 0 {
        return Ok(rec.not_applicable(reason_p_absent()));
    }
    if m < 1 || m >= a {
        if a == 1 {
            return Ok(rec.not_applicable(reason_no_m()));
        }
        return Ok(rec.not_applicable(format!("m must satisfy 1 <= m < {a}")));
    }
    let p_entry = canonical_sylow(ctx, n_idx, p);
    Ok(theorem_b_record(ctx, p, n_idx, m, p_entry, cond, &mut None))
}

/// Check B with an explicitly chosen Sylow p-subgroup of N.
pub fn check_theorem_b_with_sylow(
    ctx: &GroupCtx,
    p: u32,
    n_idx: u32,
    m: u32,
    cond: BCondition,
    p_entry: u32,
) -> Result<VerdictRecord, HarnessError> {
    let a = validate_instance(ctx, p, n_idx, false)?;
    assert_sylow_of(ctx, n_idx, p, p_entry);
    let mut rec = base_record(ctx, CHECK_THEOREM_B, p, n_idx);
    rec.m = Some(m);
    rec.condition = Some(cond.label().to_string());
    if a == 0 || m < 1 || m >= a {
        return Ok(rec.not_applicable("no valid m for this instance".to_string()));
    }
    Ok(theorem_b_record(ctx, p, n_idx, m, p_entry, cond, &mut None))
}

fn remark_record(ctx: &GroupCtx, p: u32, n_idx: u32, m: u32, p_entry: u32) -> VerdictRecord {
    let mut rec = base_record(ctx, CHECK_REMARK_1, p, n_idx);
    rec.m = Some(m);
    if !ctx.is_p_soluble(p) {
        return rec.not_applicable("G is not p-soluble");
    }
    if !ctx.quotient_p_nilpotent(n_idx, p) {
        return rec.hypothesis_fails(quotient_witness(ctx, n_idx, p));
    }
    let out = supplement_or_pi_normal_clause(ctx.lat, ctx.lat.set_of(p_entry), p.pow(m), p, false);
    if let Some(failing) = out.failing {
        return rec.hypothesis_fails(clause_witness(ctx.lat, "subgroups", failing, p));
    }
    rec.instances = Some(out.checked);
    rec.concluded(ctx.is_p_supersoluble(p), false)
}

/// The p-supersolubility variant: p-soluble G, no normalizer hypothesis.
pub fn check_remark_1(
    ctx: &GroupCtx,
    p: u32,
    n_idx: u32,
    m: u32,
) -> Result<VerdictRecord, HarnessError> {
    let a = validate_instance(ctx, p, n_idx, true)?;
    let mut rec = base_record(ctx, CHECK_REMARK_1, p, n_idx);
    rec.m = Some(m);
    if a == 0 {
        return Ok(rec.not_applicable(reason_p_absent()));
    }
    if m < 1 || m >= a {
        if a == 1 {
            return Ok(rec.not_applicable(reason_no_m()));
        }
        return Ok(rec.not_applicable(format!("m must satisfy 1 <= m < {a}")));
    }
    Ok(remark_record(ctx, p, n_idx, m, canonical_sylow(ctx, n_idx, p)))
}

/// All check-A instances over normal subgroups with p-nilpotent quotient.
pub fn sweep_theorem_a(ctx: &GroupCtx) -> Vec<VerdictRecord> {
    let mut out = Vec::new();
    for p in ctx.primes().into_iter().filter(|&p| p != 2) {
        for &n_idx in ctx.lat.normal_entries() {
            if !ctx.quotient_p_nilpotent(n_idx, p) {
                continue;
            }
            let a = p_valuation(ctx.lat.order_of(n_idx) as u64, p);
            if a == 0 {
                out.push(base_record(ctx, CHECK_THEOREM_A, p, n_idx).not_applicable(reason_p_absent()));
                continue;
            }
            if a == 1 {
                out.push(base_record(ctx, CHECK_THEOREM_A, p, n_idx).not_applicable(reason_no_m()));
                continue;
            }
            let p_entry = canonical_sylow(ctx, n_idx, p);
            for m in 1..a {
                out.push(theorem_a_record(ctx, p, n_idx, m, p_entry));
            }
        }
    }
    out
}

/// All check-B instances, each under all four conditions.
pub fn sweep_theorem_b(ctx: &GroupCtx) -> Vec<VerdictRecord> {
    let mut out = Vec::new();
    for p in ctx.primes() {
        for &n_idx in ctx.lat.normal_entries() {
            if !ctx.quotient_p_nilpotent(n_idx, p) {
                continue;
            }
            let a = p_valuation(ctx.lat.order_of(n_idx) as u64, p);
            if a == 0 {
                out.push(base_record(ctx, CHECK_THEOREM_B, p, n_idx).not_applicable(reason_p_absent()));
                continue;
            }
            if a == 1 {
                out.push(base_record(ctx, CHECK_THEOREM_B, p, n_idx).not_applicable(reason_no_m()));
                continue;
            }
            let p_entry = canonical_sylow(ctx, n_idx, p);
            for m in 1..a {
                let mut base = None;
                for cond in BCondition::ALL {
                    out.push(theorem_b_record(ctx, p, n_idx, m, p_entry, cond, &mut base));
                }
            }
        }
    }
    out
}

/// All remark instances (odd p, p-soluble gate inside).
pub fn sweep_remark_1(ctx: &GroupCtx) -> Vec<VerdictRecord> {
    let mut out = Vec::new();
    for p in ctx.primes().into_iter().filter(|&p| p != 2) {
        for &n_idx in ctx.lat.normal_entries() {
            if !ctx.quotient_p_nilpotent(n_idx, p) {
                continue;
            }
            let a = p_valuation(ctx.lat.order_of(n_idx) as u64, p);
            if a == 0 {
                out.push(base_record(ctx, CHECK_REMARK_1, p, n_idx).not_applicable(reason_p_absent()));
                continue;
            }
            if a == 1 {
                out.push(base_record(ctx, CHECK_REMARK_1, p, n_idx).not_applicable(reason_no_m()));
                continue;
            }
            let p_entry = canonical_sylow(ctx, n_idx, p);
            for m in 1..a {
                out.push(remark_record(ctx, p, n_idx, m, p_entry));
            }
        }
    }
    out
}
