//! Verdicts: one serializable report per executed check.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// No corpus group satisfied the check's hypothesis; deliberately not
    /// reported as a pass.
    Vacuous,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Vacuous => write!(f, "vacuous"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub group: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub check_id: String,
    pub status: CheckStatus,
    pub groups_checked: u64,
    pub violations: Vec<Violation>,
    pub notes: String,
}

impl VerdictReport {
    /// Status bookkeeping: fail iff violations exist, vacuous iff nothing
    /// satisfied the hypothesis.
    pub fn new(
        check_id: impl Into<String>,
        groups_checked: u64,
        hypothesis_met: u64,
        violations: Vec<Violation>,
        notes: impl Into<String>,
    ) -> Self {
        let status = if !violations.is_empty() {
            CheckStatus::Fail
        } else if hypothesis_met == 0 {
            CheckStatus::Vacuous
        } else {
            CheckStatus::Pass
        };
        VerdictReport {
            check_id: check_id.into(),
            status,
            groups_checked,
            violations,
            notes: notes.into(),
        }
    }
}
