//! Structured pass/fail reports shared by the verification routines.

use serde::Serialize;
use serde_json::Value;

/// Outcome of a verification run.
///
/// `passed` is true iff every asserted check passed. Observations are
/// recorded alongside but never affect `passed`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    /// False for observations that are reported but not asserted.
    pub asserted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_diff: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            passed: true,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Asserts `max_diff <= tol`.
    pub fn compare(&mut self, label: impl Into<String>, max_diff: f64, tol: f64) -> bool {
        let passed = max_diff <= tol;
        self.push(Check {
            label: label.into(),
            passed,
            asserted: true,
            max_diff: Some(max_diff),
            tol: Some(tol),
            detail: Value::Null,
        });
        passed
    }

    pub fn expect(&mut self, label: impl Into<String>, passed: bool, detail: Value) -> bool {
        self.push(Check {
            label: label.into(),
            passed,
            asserted: true,
            max_diff: None,
            tol: None,
            detail,
        });
        passed
    }

    pub fn observe(&mut self, label: impl Into<String>, outcome: bool, detail: Value) {
        self.push(Check {
            label: label.into(),
            passed: outcome,
            asserted: false,
            max_diff: None,
            tol: None,
            detail,
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Attaches a detail value to the most recent check.
    pub fn with_detail(&mut self, detail: Value) -> &mut Self {
        if let Some(last) = self.checks.last_mut() {
            last.detail = detail;
        }
        self
    }

    /// Folds another report's checks in, prefixing their labels.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut check in other.checks {
            check.label = format!("{prefix}{}", check.label);
            self.push(check);
        }
        self.notes.extend(other.notes);
    }

    /// Largest asserted `max_diff`, if any check carried one.
    pub fn worst_diff(&self) -> Option<f64> {
        self.checks
            .iter()
            .filter(|c| c.asserted)
            .filter_map(|c| c.max_diff)
            .fold(None, |acc, d| Some(acc.map_or(d, |a: f64| a.max(d))))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.asserted && !c.passed)
    }

    fn push(&mut self, check: Check) {
        if check.asserted && !check.passed {
            self.passed = false;
        }
        self.checks.push(check);
    }
}
