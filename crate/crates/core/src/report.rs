//! Pass/fail bookkeeping for identity suites.

use std::fmt;

/// One verified identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub identity: String,
    pub params: String,
    pub passed: bool,
    /// Set when the check could not be carried out (an error was raised).
    pub note: Option<String>,
}

impl fmt::Display for CheckEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.identity, self.params)?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// Ordered list of identity checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, identity: &str, params: impl Into<String>, passed: bool) {
        self.entries.push(CheckEntry {
            identity: identity.to_string(),
            params: params.into(),
            passed,
            note: None,
        });
    }

    /// Records the outcome of a fallible check; an error counts as a failure.
    pub fn record_result(
        &mut self,
        identity: &str,
        params: impl Into<String>,
        outcome: crate::Result<bool>,
    ) {
        let (passed, note) = match outcome {
            Ok(passed) => (passed, None),
            Err(e) => (false, Some(e.to_string())),
        };
        self.entries.push(CheckEntry {
            identity: identity.to_string(),
            params: params.into(),
            passed,
            note,
        });
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
