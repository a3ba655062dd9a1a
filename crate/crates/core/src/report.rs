//! Verification outcomes and JSON reports.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Error => "ERROR",
        };
        f.write_str(s)
    }
}

/// Result of one check, before it is attached to a case id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    /// Failure witness, skip reason or error message.
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { status: Status::Pass, witness: None }
    }

    pub fn fail(w: impl Into<String>) -> Self {
        Outcome { status: Status::Fail, witness: Some(w.into()) }
    }

    pub fn skip(reason: impl Into<String>) -> Self {
        Outcome { status: Status::Skip, witness: Some(reason.into()) }
    }

    pub fn error(msg: impl Into<String>) -> Self {
        Outcome { status: Status::Error, witness: Some(msg.into()) }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Keep the first non-passing outcome.
    pub fn and(self, other: impl FnOnce() -> Outcome) -> Outcome {
        if self.is_pass() {
            other()
        } else {
            self
        }
    }
}

impl From<crate::error::Error> for Outcome {
    fn from(e: crate::error::Error) -> Self {
        Outcome::error(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub millis: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub error: usize,
}

/// Parameters of a verification run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunInfo {
    /// Algebra label such as `B2`, or `mixed` when several algebras are covered.
    pub ctx: String,
    #[serde(rename = "K")]
    pub order: usize,
    pub backend: String,
    pub seed: u64,
    pub version: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub run: RunInfo,
    pub cases: Vec<CaseReport>,
}

impl Report {
    pub fn new(run: RunInfo) -> Self {
        Report { run, cases: Vec::new() }
    }

    pub fn push(&mut self, case: CaseReport) {
        self.cases.push(case);
    }

    pub fn extend(&mut self, other: Report) {
        self.cases.extend(other.cases);
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.cases {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skip => s.skip += 1,
                Status::Error => s.error += 1,
            }
        }
        s
    }

    /// True when nothing failed or errored (skips are allowed).
    pub fn all_passed(&self) -> bool {
        !self.cases.iter().any(|c| matches!(c.status, Status::Fail | Status::Error))
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| matches!(c.status, Status::Fail | Status::Error))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> crate::error::Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::error::Error::Parse(e.to_string()))
    }

    /// Zero all timings so that reports of identical runs compare byte-for-byte.
    pub fn strip_timings(&mut self) {
        for c in &mut self.cases {
            c.millis = 0;
        }
    }
}
