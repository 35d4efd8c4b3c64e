//! Report assembly and output.
//!
//! A run produces one `CorpusReport`: configuration echo, corpus shape, a
//! status histogram, free-form notes, the counterexample lists, and every
//! verdict record. JSON output is compact and byte-stable for a fixed
//! configuration and corpus.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::verdict::{Status, VerdictRecord};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigSummary {
    pub max_order: usize,
    pub selection: String,
    pub lemma_pair_bound: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corpus_dir: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub group_count: usize,
    /// Group order -> how many corpus members have it.
    pub order_histogram: BTreeMap<u32, u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusReport {
    pub engine_version: String,
    pub config: ConfigSummary,
    pub corpus: CorpusSummary,
    /// Status -> record count.
    pub summary: BTreeMap<String, u64>,
    pub notes: Vec<String>,
    pub counterexamples: Vec<VerdictRecord>,
    pub expected_counterexamples: Vec<VerdictRecord>,
    pub verdicts: Vec<VerdictRecord>,
}

/// Compare the verdicts of check-B conditions (ii) and (iii) on odd-p
/// instances, where (ii) holds automatically and (iii) is vacuous; any
/// disagreement is reported as a note.
fn b_condition_cross_check(verdicts: &[VerdictRecord]) -> Vec<String> {
    let mut agreed = 0u64;
    let mut notes = Vec::new();
    for pair in verdicts.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if a.check_id != "thm-B" || b.check_id != "thm-B" {
            continue;
        }
        if a.condition.as_deref() != Some("ii") || b.condition.as_deref() != Some("iii") {
            continue;
        }
        if a.p != b.p || a.n_order != b.n_order || a.m != b.m || a.group != b.group {
            continue;
        }
        if a.p == Some(2) {
            continue;
        }
        if a.status == b.status
            && a.hypothesis_holds == b.hypothesis_holds
            && a.conclusion_holds == b.conclusion_holds
        {
            agreed += 1;
        } else if notes.len() < 8 {
            notes.push(format!(
                "thm-B conditions (ii) and (iii) disagree on {} p={} |N|={} m={}: {} vs {}",
                a.group,
                a.p.unwrap_or(0),
                a.n_order.unwrap_or(0),
                a.m.unwrap_or(0),
                a.status.as_str(),
                b.status.as_str(),
            ));
        }
    }
    if agreed > 0 && notes.is_empty() {
        notes.push(format!(
            "thm-B conditions (ii) and (iii) returned identical verdicts on all {agreed} \
             odd-p instances"
        ));
    }
    notes
}

impl CorpusReport {
    pub fn assemble(
        config: ConfigSummary,
        corpus: CorpusSummary,
        mut notes: Vec<String>,
        verdicts: Vec<VerdictRecord>,
    ) -> CorpusReport {
        let mut summary: BTreeMap<String, u64> = BTreeMap::new();
        for v in &verdicts {
            *summary.entry(v.status.as_str().to_string()).or_default() += 1;
        }
        notes.extend(b_condition_cross_check(&verdicts));
        let counterexamples = verdicts
            .iter()
            .filter(|v| v.status == Status::Counterexample)
            .cloned()
            .collect();
        let expected_counterexamples = verdicts
            .iter()
            .filter(|v| v.status == Status::ExpectedCounterexample)
            .cloned()
            .collect();
        CorpusReport {
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            corpus,
            summary,
            notes,
            counterexamples,
            expected_counterexamples,
            verdicts,
        }
    }

    /// A counterexample outside the checks documented to admit them.
    pub fn has_unexpected_counterexamples(&self) -> bool {
        !self.counterexamples.is_empty()
    }

    pub fn write_json<W: Write>(&self, w: W) -> io::Result<()> {
        let mut w = io::BufWriter::new(w);
        serde_json::to_writer(&mut w, self)?;
        w.flush()
    }

    pub fn write_text<W: Write>(&self, w: W) -> io::Result<()> {
        let mut w = io::BufWriter::new(w);
        writeln!(w, "verification report (engine {})", self.engine_version)?;
        writeln!(
            w,
            "selection {} | max order {} | pair bound {}",
            self.config.selection, self.config.max_order, self.config.lemma_pair_bound
        )?;
        if let Some(dir) = &self.config.corpus_dir {
            writeln!(w, "corpus dir {dir}")?;
        }
        let orders = &self.corpus.order_histogram;
        let span = match (orders.keys().next(), orders.keys().last()) {
            (Some(lo), Some(hi)) => format!(", orders {lo}-{hi}"),
            _ => String::new(),
        };
        writeln!(w, "groups {}{span}", self.corpus.group_count)?;
        writeln!(w)?;

        writeln!(w, "status totals:")?;
        for (status, count) in &self.summary {
            writeln!(w, "  {status:<24} {count}")?;
        }
        writeln!(w)?;

        let mut per_check: BTreeMap<&str, BTreeMap<&str, u64>> = BTreeMap::new();
        for v in &self.verdicts {
            *per_check
                .entry(v.check_id.as_str())
                .or_default()
                .entry(v.status.as_str())
                .or_default() += 1;
        }
        writeln!(w, "per check:")?;
        for (check, counts) in &per_check {
            let cells: Vec<String> = counts.iter().map(|(s, c)| format!("{s} {c}")).collect();
            writeln!(w, "  {check:<16} {}", cells.join("  "))?;
        }
        writeln!(w)?;

        if !self.notes.is_empty() {
            writeln!(w, "notes:")?;
            for n in &self.notes {
                writeln!(w, "  - {n}")?;
            }
            writeln!(w)?;
        }

        write_ce_list(&mut w, "unexpected counterexamples", &self.counterexamples)?;
        write_ce_list(
            &mut w,
            "expected counterexamples",
            &self.expected_counterexamples,
        )?;
        w.flush()
    }
}

fn write_ce_list<W: Write>(
    w: &mut W,
    label: &str,
    list: &[VerdictRecord],
) -> io::Result<()> {
    if list.is_empty() {
        writeln!(w, "{label}: none")?;
        return Ok(());
    }
    writeln!(w, "{label} ({}):", list.len())?;
    for v in list {
        let mut line = format!("  {:<14} {:<16}", v.check_id, v.group);
        if let Some(p) = v.p {
            line.push_str(&format!(" p={p}"));
        }
        if let Some(n) = v.n_order {
            line.push_str(&format!(" |N|={n}"));
        }
        if let Some(m) = v.m {
            line.push_str(&format!(" m={m}"));
        }
        if let Some(c) = &v.condition {
            line.push_str(&format!(" cond={c}"));
        }
        if let Some(wit) = &v.witness {
            if let Some(d) = &wit.detail {
                line.push_str(&format!("  ({d})"));
            }
        }
        writeln!(w, "{line}")?;
    }
    Ok(())
}
