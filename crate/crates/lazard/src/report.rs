//! Pass/warn/fail reports for the verification commands.
//!
//! Verification is an outcome, not an exception: every `verify_*` function
//! returns a [`Report`] listing named checks, and only the CLI turns a failed
//! report into a nonzero exit status.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Empty when passing; otherwise a short description of what failed.
    pub details: String,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, details: String::new() }
    }

    pub fn fail(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Fail, details: details.into() }
    }

    pub fn warn(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Warn, details: details.into() }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, details: impl Into<String>) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, details)
        }
    }

    pub fn from_failures(name: impl Into<String>, failures: Vec<String>) -> Self {
        if failures.is_empty() {
            Check::pass(name)
        } else {
            Check::fail(name, failures.join("; "))
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// True when no check failed (warnings do not fail a report).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}
