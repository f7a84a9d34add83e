//! Outcome records for exhaustive identity checks.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::space::Vector;

/// How far a verifier scans once it has found a violation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Scan {
    /// Visit every basis tuple.
    #[default]
    Full,
    /// Stop at the first violation.
    FailFast,
}

/// One failing basis tuple. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Which clause of the identity failed, e.g. `"swap(1,2)"`.
    pub clause: String,
    pub tuple: Vec<usize>,
    pub residual: Vector,
}

/// Result of checking one identity on every basis tuple.
///
/// By multilinearity an empty violation list means the identity holds on
/// all elements, not only on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
    /// Set when a fail-fast scan stopped before visiting every tuple.
    pub truncated: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            checked: 0,
            violations: Vec::new(),
            truncated: false,
            notes: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Record one checked residual. Returns `false` when the scan should stop.
    pub(crate) fn record(
        &mut self,
        scan: Scan,
        clause: &str,
        tuple: &[usize],
        residual: Vector,
    ) -> bool {
        self.checked += 1;
        if residual.is_zero() {
            return true;
        }
        self.violations.push(Violation {
            clause: clause.into(),
            tuple: tuple.to_vec(),
            residual,
        });
        scan == Scan::Full
    }

    pub(crate) fn stop(&mut self) {
        self.truncated = true;
    }

    /// Fold another report's violations into this one, prefixing clauses.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.truncated |= other.truncated;
        for mut v in other.violations {
            v.clause = alloc::format!("{}: {}", other.identity, v.clause);
            self.violations.push(v);
        }
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds() { "holds" } else { "FAILS" };
        write!(
            f,
            "{}: {verdict} ({} checked, {} violation(s){})",
            self.identity,
            self.checked,
            self.violations.len(),
            if self.truncated { ", stopped early" } else { "" }
        )
    }
}

/// A theorem-style check: hypotheses that were verified, and the conclusion
/// evaluated independently. A failing conclusion under verified hypotheses is
/// a contradiction of the stated result.
#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub name: String,
    pub hypotheses: Vec<VerificationReport>,
    pub conclusion: VerificationReport,
}

impl TheoremCheck {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(VerificationReport::holds)
    }

    pub fn holds(&self) -> bool {
        self.conclusion.holds()
    }

    /// True when every hypothesis holds and the conclusion does not.
    pub fn contradiction(&self) -> bool {
        self.hypotheses_hold() && !self.conclusion.holds()
    }
}

/// Two predicates that a result claims are equivalent, each computed on its own.
#[derive(Clone, Debug)]
pub struct Equivalence {
    pub name: String,
    pub left: VerificationReport,
    pub right: VerificationReport,
}

impl Equivalence {
    pub fn agree(&self) -> bool {
        self.left.holds() == self.right.holds()
    }
}
