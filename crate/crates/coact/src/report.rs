//! Verification reports: named checks with per-item outcomes and explicit
//! witnesses on failure.

use std::collections::BTreeMap;
use std::fmt;

/// Outcome of a single named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub label: String,
    pub passed: bool,
    /// A concrete witness for a failure (an offending element or value).
    pub witness: Option<String>,
}

/// The result of running a verification target: per-item outcomes plus the
/// caps that were used, echoed so a report is reproducible.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub target: String,
    pub caps: BTreeMap<String, i64>,
    pub checks: Vec<CheckOutcome>,
    /// Non-fatal notes, such as assumptions taken by a computation.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(target: impl Into<String>) -> Self {
        VerificationReport {
            target: target.into(),
            ..Default::default()
        }
    }

    pub fn cap(&mut self, name: &str, value: i64) -> &mut Self {
        self.caps.insert(name.to_string(), value);
        self
    }

    pub fn pass(&mut self, label: impl Into<String>) {
        self.checks.push(CheckOutcome {
            label: label.into(),
            passed: true,
            witness: None,
        });
    }

    pub fn fail(&mut self, label: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(CheckOutcome {
            label: label.into(),
            passed: false,
            witness: Some(witness.into()),
        });
    }

    pub fn check(&mut self, label: impl Into<String>, ok: bool, witness: impl Into<String>) {
        if ok {
            self.pass(label);
        } else {
            self.fail(label, witness);
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// Merges another report's checks under a prefix.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for c in other.checks {
            self.checks.push(CheckOutcome {
                label: format!("{prefix}: {}", c.label),
                ..c
            });
        }
        for n in other.notes {
            self.notes.push(format!("{prefix}: {n}"));
        }
        for (k, v) in other.caps {
            self.caps.entry(format!("{prefix}.{k}")).or_insert(v);
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "target": self.target,
            "caps": self.caps,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "label": c.label,
                "passed": c.passed,
                "witness": c.witness,
            })).collect::<Vec<_>>(),
            "notes": self.notes,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "target {}", self.target)?;
        if !self.caps.is_empty() {
            let caps: Vec<String> = self.caps.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(f, "caps: {}", caps.join(" "))?;
        }
        for c in &self.checks {
            if c.passed {
                writeln!(f, "  pass  {}", c.label)?;
            } else {
                writeln!(
                    f,
                    "  FAIL  {}  [witness: {}]",
                    c.label,
                    c.witness.as_deref().unwrap_or("-")
                )?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note  {n}")?;
        }
        write!(f, "result: {}", if self.passed() { "pass" } else { "FAIL" })
    }
}
