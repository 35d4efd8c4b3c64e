//! Corpus-wide verification driver.

use std::path::PathBuf;

use rayon::prelude::*;

use crate::corollaries::sweep_corollaries;
use crate::corpus::{builtin_corpus, load_corpus_dir, Corpus, NamedGroup};
use crate::ctx::GroupCtx;
use crate::error::HarnessError;
use crate::lemmas::sweep_lemmas;
use crate::report::{ConfigSummary, CorpusReport, CorpusSummary};
use crate::theorems::{sweep_remark_1, sweep_theorem_a, sweep_theorem_b};
use crate::verdict::VerdictRecord;
use pinilot_core::SubgroupLattice;

/// Default order ceiling for verification runs; matches the engine's hard cap.
pub const DEFAULT_VERIFY_MAX_ORDER: usize = 512;
/// Subgroup count ceiling per lattice; groups exceeding it are skipped.
pub const DEFAULT_LATTICE_CAP: usize = 100_000;
/// Order ceiling for the checks that quantify over subgroup pairs.
pub const DEFAULT_LEMMA_PAIR_BOUND: u32 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    TheoremA,
    TheoremB,
    Remark1,
    Lemmas,
    Corollaries,
    All,
}

impl Selection {
    pub fn label(self) -> &'static str {
        match self {
            Selection::TheoremA => "A",
            Selection::TheoremB => "B",
            Selection::Remark1 => "remark1",
            Selection::Lemmas => "lemmas",
            Selection::Corollaries => "corollaries",
            Selection::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Selection> {
        match s {
            "A" | "a" => Some(Selection::TheoremA),
            "B" | "b" => Some(Selection::TheoremB),
            "remark1" => Some(Selection::Remark1),
            "lemmas" => Some(Selection::Lemmas),
            "corollaries" => Some(Selection::Corollaries),
            "all" => Some(Selection::All),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub max_order: usize,
    pub selection: Selection,
    /// When set, replaces the builtin corpus entirely.
    pub corpus_dir: Option<PathBuf>,
    /// Worker threads; 1 means run on the calling thread.
    pub jobs: usize,
    pub lemma_pair_bound: u32,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            max_order: DEFAULT_VERIFY_MAX_ORDER,
            selection: Selection::All,
            corpus_dir: None,
            jobs: 1,
            lemma_pair_bound: DEFAULT_LEMMA_PAIR_BOUND,
        }
    }
}

fn check_group(cfg: &RunConfig, member: &NamedGroup) -> Vec<VerdictRecord> {
    let lat = match SubgroupLattice::build(&member.group, DEFAULT_LATTICE_CAP) {
        Ok(lat) => lat,
        Err(e) => {
            return vec![VerdictRecord::new("corpus", &member.name)
                .skipped(format!("subgroup lattice not built: {e}"))];
        }
    };
    let ctx = GroupCtx::new(&member.name, &lat);
    let mut out = Vec::new();
    let sel = cfg.selection;
    if matches!(sel, Selection::TheoremA | Selection::All) {
        out.extend(sweep_theorem_a(&ctx));
    }
    if matches!(sel, Selection::TheoremB | Selection::All) {
        out.extend(sweep_theorem_b(&ctx));
    }
    if matches!(sel, Selection::Remark1 | Selection::All) {
        out.extend(sweep_remark_1(&ctx));
    }
    if matches!(sel, Selection::Corollaries | Selection::All) {
        out.extend(sweep_corollaries(&ctx));
    }
    if matches!(sel, Selection::Lemmas | Selection::All) {
        out.extend(sweep_lemmas(&ctx, cfg.lemma_pair_bound));
    }
    out
}

fn base_notes(cfg: &RunConfig) -> Vec<String> {
    let mut notes = Vec::new();
    let sel = cfg.selection;
    if matches!(sel, Selection::Corollaries | Selection::All) {
        notes.push(
            "cor-B-qfree reads its quotient hypothesis as 2-nilpotency of the quotient"
                .to_string(),
        );
    }
    if matches!(sel, Selection::Lemmas | Selection::All) {
        notes.push(format!(
            "lemma-2.4, lemma-2.5 and lemma-2.8 quantify over subgroup pairs and run only \
             on groups of order at most {}",
            cfg.lemma_pair_bound
        ));
    }
    notes
}

pub fn run_corpus(cfg: &RunConfig) -> Result<CorpusReport, HarnessError> {
    let Corpus { groups, skipped } = match &cfg.corpus_dir {
        Some(dir) => load_corpus_dir(dir, cfg.max_order)?,
        None => builtin_corpus(cfg.max_order)?,
    };

    let per_group: Vec<Vec<VerdictRecord>> = if cfg.jobs <= 1 {
        groups.iter().map(|g| check_group(cfg, g)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| HarnessError::Pool(e.to_string()))?;
        pool.install(|| groups.par_iter().map(|g| check_group(cfg, g)).collect())
    };

    let mut verdicts: Vec<VerdictRecord> = per_group.into_iter().flatten().collect();
    for s in &skipped {
        verdicts.push(VerdictRecord::new("corpus", &s.name).skipped(s.reason.clone()));
    }

    let mut order_histogram = std::collections::BTreeMap::new();
    for g in &groups {
        *order_histogram.entry(g.group.order() as u32).or_default() += 1;
    }
    let config = ConfigSummary {
        max_order: cfg.max_order,
        selection: cfg.selection.label().to_string(),
        lemma_pair_bound: cfg.lemma_pair_bound,
        corpus_dir: cfg
            .corpus_dir
            .as_ref()
            .map(|p| p.display().to_string()),
    };
    let corpus = CorpusSummary {
        group_count: groups.len(),
        order_histogram,
    };
    Ok(CorpusReport::assemble(
        config,
        corpus,
        base_notes(cfg),
        verdicts,
    ))
}
