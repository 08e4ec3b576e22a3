//! Named pass/fail/uncertified checks collected while certifying a construction.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::module::ValidationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    /// Homology was not computed because the ring is not Euclidean.
    Uncertified,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Uncertified => "uncertified",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub location: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn new() -> Self {
        Self::default()
    }

    /// `fail` unless every check passed; `uncertified` when nothing failed
    /// but some homology check was skipped.
    pub fn status(&self) -> Outcome {
        let mut status = Outcome::Pass;
        for c in &self.checks {
            match c.outcome {
                Outcome::Fail => return Outcome::Fail,
                Outcome::Uncertified => status = Outcome::Uncertified,
                Outcome::Pass => {}
            }
        }
        status
    }

    pub fn push(&mut self, name: &str, location: &str, outcome: Outcome, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            location: location.into(),
            outcome,
            detail: detail.into(),
        });
    }

    pub fn check(&mut self, name: &str, location: &str, ok: bool, detail: impl Into<String>) {
        let outcome = if ok { Outcome::Pass } else { Outcome::Fail };
        self.push(name, location, outcome, if ok { String::new() } else { detail.into() });
    }

    /// One check per violation, or a single passing check.
    pub fn validation(&mut self, name: &str, location: &str, report: &ValidationReport) {
        if report.is_valid() {
            self.check(name, location, true, "");
        }
        for v in &report.violations {
            self.push(name, location, Outcome::Fail, alloc::format!("{v}"));
        }
    }

    /// Records a quasi-isomorphism test; `None` means the ring is not Euclidean.
    pub fn homology(&mut self, name: &str, location: &str, acyclic: Option<bool>) {
        match acyclic {
            Some(ok) => self.check(name, location, ok, "mapping cone has nonzero homology"),
            None => self.push(
                name,
                location,
                Outcome::Uncertified,
                "ring is not Euclidean; homology not computed",
            ),
        }
    }

    pub fn extend(&mut self, other: Certificate) {
        self.checks.extend(other.checks);
    }
}
