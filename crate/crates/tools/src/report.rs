//! Run reports: per-check summaries, derived values and the overall verdict.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use bihom_core::{Equivalence, TheoremCheck, VerificationReport, Violation};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::document::AlgebraDocument;

/// How many violations a report lists per check.
pub const SHOWN_VIOLATIONS: usize = 5;

#[derive(Clone, Debug)]
pub struct CheckSummary {
    pub report: VerificationReport,
    /// Only mandatory checks decide the status; the rest are informational.
    pub mandatory: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub checks: Vec<CheckSummary>,
    /// Derived facts such as a solution-space dimension.
    pub values: BTreeMap<String, String>,
    pub output: Option<AlgebraDocument>,
    pub notes: Vec<String>,
}

/// SHA-256 over the canonical input text and the invocation.
pub fn inputs_digest(doc: &AlgebraDocument, invocation: &str) -> String {
    let mut h = Sha256::new();
    h.update(doc.to_canonical_string().as_bytes());
    h.update(b"\n");
    h.update(invocation.as_bytes());
    hex::encode(h.finalize())
}

fn violation_json(v: &Violation) -> Value {
    json!({
        "clause": v.clause,
        "tuple": v.tuple.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "residual": v.residual.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

impl RunReport {
    pub fn new(command: &str, inputs_digest: String) -> Self {
        RunReport {
            command: command.into(),
            inputs_digest,
            checks: Vec::new(),
            values: BTreeMap::new(),
            output: None,
            notes: Vec::new(),
        }
    }

    pub fn mandatory(&mut self, report: VerificationReport) {
        self.checks.push(CheckSummary { report, mandatory: true });
    }

    pub fn informational(&mut self, report: VerificationReport) {
        self.checks.push(CheckSummary { report, mandatory: false });
    }

    /// Hypotheses and conclusion all count.
    pub fn theorem(&mut self, t: TheoremCheck) {
        if t.contradiction() {
            self.notes.push(format!("{}: hypotheses hold but the conclusion fails", t.name));
        }
        for h in t.hypotheses {
            self.mandatory(h);
        }
        self.mandatory(t.conclusion);
    }

    /// Both sides are informational; their agreement is the mandatory check.
    pub fn equivalence(&mut self, e: Equivalence) {
        let mut agreement = VerificationReport::new(format!("{}: both sides agree", e.name));
        agreement.checked = 1;
        if !e.agree() {
            agreement.violations.push(Violation {
                clause: format!("left {}, right {}", e.left.holds(), e.right.holds()),
                tuple: Vec::new(),
                residual: bihom_core::Vector::zeros(0),
            });
        }
        self.values.insert("left".into(), e.left.holds().to_string());
        self.values.insert("right".into(), e.right.holds().to_string());
        self.informational(e.left);
        self.informational(e.right);
        self.mandatory(agreement);
    }

    pub fn status(&self) -> Status {
        if self.checks.iter().filter(|c| c.mandatory).all(|c| c.report.holds()) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }

    /// The machine format. With `output_path` set the derived document is
    /// referenced instead of inlined.
    pub fn to_json(&self, output_path: Option<&str>) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "identity": c.report.identity,
                    "mandatory": c.mandatory,
                    "holds": c.report.holds(),
                    "checked": c.report.checked,
                    "violations": c.report.violations.len(),
                    "truncated": c.report.truncated,
                    "first_violations": c.report.violations.iter().take(SHOWN_VIOLATIONS).map(violation_json).collect::<Vec<_>>(),
                    "notes": c.report.notes,
                })
            })
            .collect();
        let mut out = json!({
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "status": self.status().as_str(),
            "checks": checks,
            "values": self.values,
            "notes": self.notes,
        });
        match (&self.output, output_path) {
            (Some(_), Some(path)) => out["output"] = json!(path),
            (Some(doc), None) => {
                out["output"] = serde_json::from_str(&doc.to_canonical_string()).expect("canonical text is JSON")
            }
            _ => {}
        }
        out
    }

    pub fn human(&self, output_path: Option<&str>) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}: {}", self.command, self.status().as_str().to_uppercase());
        for c in &self.checks {
            let mark = match (c.report.holds(), c.mandatory) {
                (true, _) => "ok",
                (false, true) => "FAIL",
                (false, false) => "no",
            };
            let _ = write!(s, "  [{mark}] {} ({} checked", c.report.identity, c.report.checked);
            if !c.report.holds() {
                let _ = write!(s, ", {} violation(s)", c.report.violations.len());
            }
            if c.report.truncated {
                s.push_str(", stopped early");
            }
            s.push(')');
            if !c.mandatory {
                s.push_str(" [info]");
            }
            s.push('\n');
            for v in c.report.violations.iter().take(SHOWN_VIOLATIONS) {
                let tuple: Vec<String> = v.tuple.iter().map(|i| format!("e{}", i + 1)).collect();
                let _ = writeln!(s, "      {} at ({})", v.clause, tuple.join(", "));
            }
            for n in &c.report.notes {
                let _ = writeln!(s, "      note: {n}");
            }
        }
        for (k, v) in &self.values {
            let _ = writeln!(s, "  {k} = {v}");
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        match (&self.output, output_path) {
            (Some(_), Some(path)) => {
                let _ = writeln!(s, "  output written to {path}");
            }
            (Some(doc), None) => {
                s.push_str(&doc.to_canonical_string());
            }
            _ => {}
        }
        let _ = writeln!(s, "  inputs {}", &self.inputs_digest[..16.min(self.inputs_digest.len())]);
        s
    }
}
