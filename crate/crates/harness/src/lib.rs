//! Verification harness for the p-nilpotency criteria in `pinilot-core`.
//!
//! The harness runs the criterion checks (`thm-A`, `thm-B`, `remark-1`, the
//! `lemma-*` family, the `cor-*` family) over a corpus of small groups and
//! collects one [`VerdictRecord`] per instance. Records distinguish
//! hypothesis failures from conclusion failures, so a genuine counterexample
//! (hypotheses hold, conclusion fails) is never conflated with an
//! inapplicable instance. Two checks are documented to admit
//! counterexamples; those are reported as `EXPECTED_COUNTEREXAMPLE` and do
//! not fail a run.

pub mod corollaries;
pub mod corpus;
pub mod ctx;
pub mod error;
pub mod format;
pub mod lemmas;
pub mod report;
pub mod run;
pub mod theorems;
pub mod verdict;

pub use corollaries::{check_corollary, CorollaryId};
pub use corpus::{builtin_corpus, load_corpus_dir, Corpus, NamedGroup};
pub use ctx::GroupCtx;
pub use error::HarnessError;
pub use format::{describe_group, parse_group_str, read_group_file, GroupFile};
pub use report::{ConfigSummary, CorpusReport, CorpusSummary};
pub use run::{run_corpus, RunConfig, Selection};
pub use theorems::{check_remark_1, check_theorem_a, check_theorem_b};
pub use verdict::{Status, SubgroupDesc, VerdictRecord, Witness};
