//! Machine-readable check reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Number of instances examined.
    pub cases: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// A replayable failing input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Check {
    pub fn passed(name: impl Into<String>, cases: usize) -> Self {
        Check { name: name.into(), pass: true, cases, detail: None, counterexample: None }
    }

    pub fn failed(
        name: impl Into<String>,
        cases: usize,
        detail: impl Into<String>,
        counterexample: Option<Value>,
    ) -> Self {
        Check { name: name.into(), pass: false, cases, detail: Some(detail.into()), counterexample }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exists: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<i64>,
    pub checks: Vec<Check>,
    pub wall_time_ms: f64,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>, window: Option<i64>) -> Self {
        CheckReport {
            suite: suite.into(),
            pass: true,
            exists: None,
            reason: None,
            window,
            checks: Vec::new(),
            wall_time_ms: 0.0,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckReport) {
        for c in other.checks {
            self.push(Check { name: format!("{}/{}", other.suite, c.name), ..c });
        }
        self.pass &= other.pass;
    }

    pub fn finish(mut self, started: Instant) -> Self {
        self.pass = self.pass && self.checks.iter().all(|c| c.pass) && self.exists != Some(false);
        self.wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
        self
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// 0 when the report passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

/// Runs `test` over `cases` and records the first failure.
pub(crate) fn run_check<T, F>(name: &str, cases: &[T], test: F) -> Check
where
    T: Sync,
    F: Fn(&T) -> std::result::Result<(), (String, Option<Value>)> + Sync,
{
    use rayon::prelude::*;
    let failure = cases.par_iter().map(&test).find_first(|r| r.is_err());
    match failure {
        Some(Err((detail, counterexample))) => Check::failed(name, cases.len(), detail, counterexample),
        _ => Check::passed(name, cases.len()),
    }
}
