//! Reference-value verification suite shared by the CLI and the acceptance
//! tests: each criterion runs a computation and compares it against the
//! expected value recorded here.

use crate::search::Budget;

/// One expected-vs-computed comparison.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl CheckLine {
    pub fn new(
        label: impl Into<String>,
        expected: impl std::fmt::Display,
        computed: impl std::fmt::Display,
        pass: bool,
    ) -> CheckLine {
        CheckLine {
            label: label.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        }
    }

    pub fn eq<T: PartialEq + std::fmt::Display>(
        label: impl Into<String>,
        expected: T,
        computed: T,
    ) -> CheckLine {
        let pass = expected == computed;
        CheckLine::new(label, expected, computed, pass)
    }
}

/// Outcome of one criterion.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: &'static str,
    pub title: &'static str,
    pub lines: Vec<CheckLine>,
    pub seconds: f64,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }
}

pub(crate) fn run_criterion(
    id: &'static str,
    title: &'static str,
    f: impl FnOnce(&mut Vec<CheckLine>),
) -> CriterionReport {
    let start = std::time::Instant::now();
    let mut lines = Vec::new();
    f(&mut lines);
    CriterionReport {
        id,
        title,
        lines,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Which criteria a run covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Quick subset suitable for a smoke check.
    Fast,
    /// Everything, including the multi-minute solves.
    Full,
}

mod criteria;
pub use criteria::{all_criteria, criterion_ids, run_all, run_by_id};

/// Default budget for the verification runs.
pub fn suite_budget() -> Budget {
    Budget::default()
}
