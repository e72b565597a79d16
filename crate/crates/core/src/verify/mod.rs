//! Oracle suites: every library result re-derived by an independent, slower
//! computation. Used by the `verify` CLI subcommands and the acceptance run.

mod criteria;
pub mod oracle;
mod suites;

use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use criteria::{criterion, CRITERIA};
pub use suites::{suite_appendix, suite_blowup, suite_eq1, suite_weights, AppendixParams};

/// Failure messages kept per report.
const KEEP: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub cases: u64,
    pub failures: Vec<String>,
    pub failure_count: u64,
    /// offending inputs worth saving (sets, seeds, configs)
    pub witnesses: Vec<serde_json::Value>,
    /// free-form measurements, e.g. histograms or maxima
    pub notes: Vec<String>,
    pub seconds: f64,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.to_string(), passed: true, ..Default::default() }
    }

    fn case(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.passed = false;
        self.failure_count += 1;
        if self.failures.len() < KEEP {
            self.failures.push(msg);
        }
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.passed &= other.passed;
        self.cases += other.cases;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < KEEP {
                self.failures.push(format!("[{}] {f}", other.suite));
            }
        }
        self.witnesses.extend(other.witnesses);
        self.notes.extend(other.notes.into_iter().map(|n| format!("[{}] {n}", other.suite)));
    }

    fn timed(mut self, start: Instant) -> Self {
        self.seconds = start.elapsed().as_secs_f64();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: usize,
    pub title: String,
    pub passed: bool,
    pub limit_seconds: f64,
    /// passed on content and within the time limit
    pub within_limit: bool,
    pub report: SuiteReport,
}

impl CriterionResult {
    /// One line: `criterion  7 PASS  1.23s/60s  title (cases ...)`.
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {:>2} {verdict} {:>7.2}s/{:.0}s  {}  ({} cases",
            self.id, self.report.seconds, self.limit_seconds, self.title, self.report.cases
        );
        if self.report.failure_count > 0 {
            s.push_str(&format!(", {} failing: {}", self.report.failure_count, self.report.failures[0]));
        }
        s.push(')');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AcceptanceReport {
    pub passed: bool,
    pub criteria: Vec<CriterionResult>,
}

/// Run the listed criteria (all when `ids` is empty), in order.
pub fn run_acceptance(ids: &[usize]) -> crate::Result<AcceptanceReport> {
    let ids: Vec<usize> = if ids.is_empty() { (1..=CRITERIA.len()).collect() } else { ids.to_vec() };
    let mut criteria = Vec::new();
    for id in ids {
        criteria.push(criterion(id)?);
    }
    Ok(AcceptanceReport { passed: criteria.iter().all(|c| c.passed), criteria })
}
