//! Machine-readable check records shared by every suite.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A counterexample was found and verified.
    Witness,
    /// A bounded search finished without a counterexample. Not a proof.
    NoneFound,
}

/// Whether a record may fail the run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Severity {
    Asserted,
    /// Conjectural or exploratory; printed but never fails the run.
    Informational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub check: String,
    pub parameters: Value,
    pub status: Status,
    pub severity: Severity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

impl Check {
    pub fn new(check: impl Into<String>, parameters: Value, status: Status) -> Self {
        Check {
            check: check.into(),
            parameters,
            status,
            severity: Severity::Asserted,
            witness: None,
            detail: String::new(),
        }
    }

    /// `Pass` if `ok`, else `Fail`.
    pub fn assert(check: impl Into<String>, parameters: Value, ok: bool) -> Self {
        Self::new(check, parameters, if ok { Status::Pass } else { Status::Fail })
    }

    pub fn informational(mut self) -> Self {
        self.severity = Severity::Informational;
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    /// Asserted and failed. A search whose outcome contradicts expectations
    /// is recorded as `Fail` by the suite, with the search result in `detail`.
    pub fn is_failure(&self) -> bool {
        self.severity == Severity::Asserted && self.status == Status::Fail
    }
}

/// Summary counts for a list of records.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub total: usize,
    pub failed: usize,
    pub informational: usize,
}

pub fn tally(checks: &[Check]) -> Tally {
    Tally {
        total: checks.len(),
        failed: checks.iter().filter(|c| c.is_failure()).count(),
        informational: checks.iter().filter(|c| c.severity == Severity::Informational).count(),
    }
}

/// One line per record: `PASS  name  {params}  detail`.
pub fn render_text(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        let tag = match (c.status, c.severity) {
            (Status::Pass, _) => "PASS",
            (Status::Fail, Severity::Asserted) => "FAIL",
            (Status::Fail, Severity::Informational) => "INFO-FAIL",
            (Status::Witness, _) => "WITNESS",
            (Status::NoneFound, _) => "NONE-FOUND",
        };
        out.push_str(&format!("{tag:<10} {} {}", c.check, c.parameters));
        if !c.detail.is_empty() {
            out.push_str("  ");
            out.push_str(&c.detail);
        }
        out.push('\n');
    }
    let t = tally(checks);
    out.push_str(&format!(
        "{} checks, {} asserted failures, {} informational\n",
        t.total, t.failed, t.informational
    ));
    out
}
