use pinilot_core::{Subgroup, SubgroupLattice};
use serde::{Deserialize, Serialize};

/// Outcome of one check on one group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// Hypotheses held and the asserted conclusion held.
    Confirmed,
    /// At least one hypothesis clause failed, so the statement is vacuous here.
    HypothesisFails,
    /// The check's side conditions exclude this instance entirely.
    NotApplicable,
    /// Hypotheses held but the conclusion failed. Always a bug or a refutation.
    Counterexample,
    /// Hypotheses held, the conclusion failed, and the check is documented to
    /// admit counterexamples.
    ExpectedCounterexample,
    /// The check could not be evaluated (resource cap, unsupported input).
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Confirmed => "CONFIRMED",
            Status::HypothesisFails => "HYPOTHESIS_FAILS",
            Status::NotApplicable => "NOT_APPLICABLE",
            Status::Counterexample => "COUNTEREXAMPLE",
            Status::ExpectedCounterexample => "EXPECTED_COUNTEREXAMPLE",
            Status::Skipped => "SKIPPED",
        }
    }
}

/// Compact description of a subgroup, enough to reconstruct it in the parent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupDesc {
    pub order: u32,
    /// Generators in cycle notation, 1-indexed points.
    pub generators: Vec<String>,
    /// Orders of all elements, ascending.
    pub element_orders: Vec<u32>,
    pub normal: bool,
}

impl SubgroupDesc {
    pub fn of(sub: &Subgroup) -> Self {
        let group = sub.parent();
        let generators = sub
            .gen_indices()
            .iter()
            .map(|&gi| group.elem(gi).to_string())
            .collect();
        SubgroupDesc {
            order: sub.order(),
            generators,
            element_orders: sub.element_order_profile(),
            normal: pinilot_core::structure::is_normal(group, sub)
                .expect("subgroup belongs to its own parent"),
        }
    }

    pub fn of_entry(lat: &SubgroupLattice, idx: u32) -> Self {
        let sub = lat.subgroup(idx);
        let generators = sub
            .gen_indices()
            .iter()
            .map(|&gi| lat.group().elem(gi).to_string())
            .collect();
        SubgroupDesc {
            order: sub.order(),
            generators,
            element_orders: sub.element_order_profile(),
            normal: lat.is_normal_entry(idx),
        }
    }
}

/// Which hypothesis clause failed, and on what.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Stable clause label, e.g. "quotient", "normalizer", "subgroups".
    pub clause: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<SubgroupDesc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Witness {
    pub fn clause(clause: &str) -> Self {
        Witness {
            clause: clause.to_string(),
            subgroup: None,
            detail: None,
        }
    }

    pub fn with_subgroup(mut self, desc: SubgroupDesc) -> Self {
        self.subgroup = Some(desc);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// One verdict line of the corpus report.
///
/// `conclusion_holds` is populated exactly when the record is applicable and
/// every hypothesis clause held; otherwise the conclusion was not consulted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub check_id: String,
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    /// Order of the normal subgroup the instance quantifies over.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_order: Option<u32>,
    /// Index of that normal subgroup in the whole group.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_index: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_holds: Option<bool>,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusion_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// How many hypothesis instances were actually evaluated and held.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl VerdictRecord {
    pub fn new(check_id: &str, group: &str) -> Self {
        VerdictRecord {
            check_id: check_id.to_string(),
            group: group.to_string(),
            p: None,
            n_order: None,
            n_index: None,
            m: None,
            condition: None,
            status: Status::Skipped,
            hypothesis_holds: None,
            applicable: false,
            conclusion_holds: None,
            witness: None,
            instances: None,
            reason: None,
        }
    }

    pub fn not_applicable(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::NotApplicable;
        self.applicable = false;
        self.hypothesis_holds = None;
        self.conclusion_holds = None;
        self.reason = Some(reason.into());
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.applicable = false;
        self.reason = Some(reason.into());
        self
    }

    pub fn hypothesis_fails(mut self, witness: Witness) -> Self {
        self.status = Status::HypothesisFails;
        self.applicable = true;
        self.hypothesis_holds = Some(false);
        self.conclusion_holds = None;
        self.witness = Some(witness);
        self
    }

    /// Close out a record whose hypotheses all held. `expected` marks checks
    /// documented to admit counterexamples.
    pub fn concluded(mut self, conclusion: bool, expected: bool) -> Self {
        self.applicable = true;
        self.hypothesis_holds = Some(true);
        self.conclusion_holds = Some(conclusion);
        self.status = if conclusion {
            Status::Confirmed
        } else if expected {
            Status::ExpectedCounterexample
        } else {
            Status::Counterexample
        };
        self
    }
}
