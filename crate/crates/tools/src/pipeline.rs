//! Command dispatch: one library call per command, wrapped in a [`RunReport`].

use std::fmt;
use std::str::FromStr;

use bihom_core::algebra::{
    make_twist_3, verify_3bihom_jacobi, verify_3bihom_skewsymmetry, verify_bihom_jacobi, verify_bihom_skewsymmetry,
    verify_multiplicativity2, verify_multiplicativity3,
};
use bihom_core::derivation::{
    is_derivation_2, is_derivation_3, is_quasiderivation_2, is_quasiderivation_3, solve_derivation_space,
    solve_derivation_space_2, DerivationQuery,
};
use bihom_core::nijenhuis::{
    build_trivial_deformation, check_2cocycle, check_deformation, check_prop510, check_prop56, check_prop59,
    is_nijenhuis_2, is_nijenhuis_3, make_n_bracket_1, make_n_bracket_2, DeformationPair,
};
use bihom_core::rota_baxter::{
    check_prop43, check_prop44, check_prop46, check_theorem45, is_rb2, is_rb3, make_prop46_algebra,
    rb_bracket_tensor, RotaBaxterOperator,
};
use bihom_core::tau::{check_tau_conditions, induce_tau_unchecked};
use bihom_core::{Error, Parity, Scalar, Scan, VerificationReport, Violation};

use crate::document::{AlgebraDocument, DocError, NamedMap};
use crate::report::{inputs_digest, RunReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Verify,
    Twist3,
    InduceTau,
    Derivations,
    Quasiderivation,
    CheckRb,
    RbBracket,
    Prop43,
    Prop44,
    Prop46,
    CheckNijenhuis,
    NBrackets,
    DeformationCheck,
    TrivialDeformation,
    Prop56,
    Prop59,
    Prop510,
}

impl Command {
    pub const ALL: [Command; 17] = [
        Command::Verify,
        Command::Twist3,
        Command::InduceTau,
        Command::Derivations,
        Command::Quasiderivation,
        Command::CheckRb,
        Command::RbBracket,
        Command::Prop43,
        Command::Prop44,
        Command::Prop46,
        Command::CheckNijenhuis,
        Command::NBrackets,
        Command::DeformationCheck,
        Command::TrivialDeformation,
        Command::Prop56,
        Command::Prop59,
        Command::Prop510,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Twist3 => "twist3",
            Command::InduceTau => "induce-tau",
            Command::Derivations => "derivations",
            Command::Quasiderivation => "quasiderivation",
            Command::CheckRb => "check-rb",
            Command::RbBracket => "rb-bracket",
            Command::Prop43 => "prop43",
            Command::Prop44 => "prop44",
            Command::Prop46 => "prop46",
            Command::CheckNijenhuis => "check-nijenhuis",
            Command::NBrackets => "n-brackets",
            Command::DeformationCheck => "deformation-check",
            Command::TrivialDeformation => "trivial-deformation",
            Command::Prop56 => "prop56",
            Command::Prop59 => "prop59",
            Command::Prop510 => "prop510",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Command::ALL.iter().map(|c| c.name()).collect();
            format!("unknown command {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flags {
    /// Overrides the document's `lambda` scalar.
    pub weight: Option<Scalar>,
    pub s: u32,
    pub r: u32,
    pub parity: Parity,
    pub fail_fast: bool,
    pub override_tau_conditions: bool,
}

impl Default for Flags {
    fn default() -> Self {
        Flags { weight: None, s: 0, r: 0, parity: Parity::Even, fail_fast: false, override_tau_conditions: false }
    }
}

impl Flags {
    fn scan(&self) -> Scan {
        if self.fail_fast {
            Scan::FailFast
        } else {
            Scan::Full
        }
    }

    fn describe(&self) -> String {
        format!(
            "weight={} s={} r={} parity={} fail_fast={} override_tau_conditions={}",
            self.weight.as_ref().map(|w| w.to_string()).unwrap_or_default(),
            self.s,
            self.r,
            self.parity,
            self.fail_fast,
            self.override_tau_conditions
        )
    }
}

fn lib_error(e: Error) -> DocError {
    DocError::at("", e.to_string())
}

/// Library result to report: failed hypotheses become a failing check, every
/// other library error is an input error.
fn hypothesis<T>(report: &mut RunReport, r: Result<T, Error>) -> Result<Option<T>, DocError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Precondition(pre)) => {
            report.mandatory(*pre);
            Ok(None)
        }
        Err(e) => Err(lib_error(e)),
    }
}

fn weight(doc: &AlgebraDocument, flags: &Flags) -> Result<Scalar, DocError> {
    match &flags.weight {
        Some(w) => Ok(w.clone()),
        None => doc.scalar("lambda").cloned(),
    }
}

fn rota_baxter(doc: &AlgebraDocument, flags: &Flags) -> Result<RotaBaxterOperator, DocError> {
    RotaBaxterOperator::new(doc.map("R")?.clone(), weight(doc, flags)?).map_err(|e| DocError::at("maps.R", e.to_string()))
}

fn verdict(identity: &str, ok: bool, clause: &str) -> VerificationReport {
    let mut r = VerificationReport::new(identity);
    r.checked = 1;
    if !ok {
        r.violations.push(Violation { clause: clause.into(), tuple: Vec::new(), residual: bihom_core::Vector::zeros(0) });
    }
    r
}

fn require_tensor(doc: &AlgebraDocument) -> Result<(), DocError> {
    if doc.binary.is_none() && doc.ternary.is_none() {
        return Err(DocError::at("", "the document has neither a binary nor a ternary tensor"));
    }
    Ok(())
}

/// Run `command` on a validated document. `Err` means the input does not fit
/// the command (exit code 2).
pub fn run_pipeline(doc: &AlgebraDocument, command: Command, flags: &Flags) -> Result<RunReport, DocError> {
    let digest = inputs_digest(doc, &format!("{command} {}", flags.describe()));
    let mut rep = RunReport::new(command.name(), digest);
    let scan = flags.scan();
    match command {
        Command::Verify => {
            require_tensor(doc)?;
            if doc.binary.is_some() {
                let a = doc.binary_algebra()?;
                rep.mandatory(verify_bihom_skewsymmetry(&a, scan));
                rep.mandatory(verify_bihom_jacobi(&a, scan));
                rep.informational(verify_multiplicativity2(&a, scan));
            }
            if doc.ternary.is_some() {
                let a = doc.ternary_algebra()?;
                rep.mandatory(verify_3bihom_skewsymmetry(&a, scan));
                rep.mandatory(verify_3bihom_jacobi(&a, scan));
                rep.informational(verify_multiplicativity3(&a, scan));
            }
        }
        Command::Twist3 => {
            let t = doc.ternary.as_ref().ok_or_else(|| DocError::at("ternary", "twist3 needs a ternary tensor"))?;
            if let Some(a) = hypothesis(&mut rep, make_twist_3(t, &doc.alpha(), &doc.beta()))? {
                rep.mandatory(verify_3bihom_skewsymmetry(&a, Scan::Full));
                rep.mandatory(verify_3bihom_jacobi(&a, Scan::Full));
                rep.mandatory(verify_multiplicativity3(&a, Scan::Full));
                rep.output = Some(AlgebraDocument::from_ternary(&a));
            }
        }
        Command::InduceTau => {
            let a = doc.binary_algebra()?;
            let tau = doc.form("tau")?;
            let w = check_tau_conditions(&a, tau, Scan::Full).map_err(lib_error)?;
            let conditions_hold = w.holds();
            for r in w.reports() {
                if flags.override_tau_conditions {
                    rep.informational(r.clone());
                } else {
                    rep.mandatory(r.clone());
                }
            }
            if conditions_hold || flags.override_tau_conditions {
                if !conditions_hold {
                    rep.notes.push("tau conditions fail; the induced tensor is unverified".into());
                }
                let induced = induce_tau_unchecked(&a, tau).map_err(lib_error)?;
                let axioms_mandatory = conditions_hold;
                for r in [verify_3bihom_skewsymmetry(&induced, Scan::Full), verify_3bihom_jacobi(&induced, Scan::Full)] {
                    if axioms_mandatory {
                        rep.mandatory(r);
                    } else {
                        rep.informational(r);
                    }
                }
                rep.output = Some(AlgebraDocument::from_ternary(&induced));
            }
        }
        Command::Derivations => {
            require_tensor(doc)?;
            let q = DerivationQuery::new(flags.s, flags.r, flags.parity);
            let mut out = AlgebraDocument::new(doc.space.clone());
            let space = if doc.ternary.is_some() {
                let a = doc.ternary_algebra()?;
                let sp = solve_derivation_space(&a, q);
                for d in &sp.basis {
                    rep.mandatory(is_derivation_3(&a, d, flags.s, flags.r, Scan::Full));
                }
                sp
            } else {
                let a = doc.binary_algebra()?;
                let sp = solve_derivation_space_2(&a, q);
                for d in &sp.basis {
                    rep.mandatory(is_derivation_2(&a, d, flags.s, flags.r, Scan::Full));
                }
                sp
            };
            rep.values.insert("dimension".into(), space.dimension().to_string());
            for (k, d) in space.basis.iter().enumerate() {
                out.maps.insert(format!("D{}", k + 1), NamedMap::Matrix(d.clone()));
            }
            rep.output = Some(out);
        }
        Command::Quasiderivation => {
            require_tensor(doc)?;
            let d = doc.map("D")?;
            let witness = if doc.ternary.is_some() {
                is_quasiderivation_3(&doc.ternary_algebra()?, d, flags.s, flags.r)
            } else {
                is_quasiderivation_2(&doc.binary_algebra()?, d, flags.s, flags.r)
            };
            if let Some(w) = hypothesis(&mut rep, witness)? {
                rep.mandatory(verdict("quasiderivation witness exists", w.is_some(), "no witness D'"));
                if let Some(w) = w {
                    rep.output = Some(AlgebraDocument::new(doc.space.clone()).with_map("D'", w));
                }
            }
        }
        Command::CheckRb => {
            require_tensor(doc)?;
            let rb = rota_baxter(doc, flags)?;
            if doc.binary.is_some() {
                if let Some(r) = hypothesis(&mut rep, is_rb2(&doc.binary_algebra()?, &rb, scan))? {
                    rep.mandatory(r);
                }
            }
            if doc.ternary.is_some() {
                if let Some(r) = hypothesis(&mut rep, is_rb3(&doc.ternary_algebra()?, &rb, scan))? {
                    rep.mandatory(r);
                }
            }
        }
        Command::RbBracket => {
            let a = doc.ternary_algebra()?;
            let rb = rota_baxter(doc, flags)?;
            if let Some(t) = hypothesis(&mut rep, check_theorem45(&a, &rb))? {
                rep.theorem(t);
                let bracket = rb_bracket_tensor(&a, &rb).map_err(lib_error)?;
                let built = a.with_bracket(bracket).map_err(lib_error)?;
                rep.output = Some(AlgebraDocument::from_ternary(&built).with_map("R", rb.map().clone()).with_scalar("lambda", rb.weight().clone()));
            }
        }
        Command::Prop43 => {
            let a = doc.ternary_algebra()?;
            if let Some(e) = hypothesis(&mut rep, check_prop43(&a, doc.map("R")?))? {
                rep.equivalence(e);
            }
        }
        Command::Prop44 => {
            let a = doc.binary_algebra()?;
            let rb = rota_baxter(doc, flags)?;
            if let Some(e) = hypothesis(&mut rep, check_prop44(&a, doc.form("tau")?, &rb))? {
                rep.equivalence(e);
            }
        }
        Command::Prop46 => {
            let a = doc.ternary_algebra()?;
            let rb = rota_baxter(doc, flags)?;
            if let Some(t) = hypothesis(&mut rep, check_prop46(&a, &rb))? {
                rep.theorem(t);
                let built = make_prop46_algebra(&a, &rb).map_err(lib_error)?;
                rep.output = Some(AlgebraDocument::from_ternary(&built));
            }
        }
        Command::CheckNijenhuis => {
            require_tensor(doc)?;
            let n = doc.map("N")?;
            if doc.binary.is_some() {
                if let Some(r) = hypothesis(&mut rep, is_nijenhuis_2(&doc.binary_algebra()?, n, scan))? {
                    rep.mandatory(r);
                }
            }
            if doc.ternary.is_some() {
                if let Some(r) = hypothesis(&mut rep, is_nijenhuis_3(&doc.ternary_algebra()?, n, scan))? {
                    rep.mandatory(r);
                }
            }
        }
        Command::NBrackets => {
            let a = doc.ternary_algebra()?;
            let n = doc.map("N")?;
            let one = hypothesis(&mut rep, make_n_bracket_1(&a, n))?;
            let two = hypothesis(&mut rep, make_n_bracket_2(&a, n))?;
            if let (Some(one), Some(two)) = (one, two) {
                let mut out = AlgebraDocument::from_ternary(&a).with_map("N", n.clone());
                out.cochains.insert("n_bracket_1".into(), one);
                out.cochains.insert("n_bracket_2".into(), two);
                rep.output = Some(out);
            }
        }
        Command::DeformationCheck => {
            let a = doc.ternary_algebra()?;
            let w1 = doc.cochain("omega1")?.clone();
            let w2 = doc.cochain("omega2")?.clone();
            if let Some(d) = hypothesis(&mut rep, DeformationPair::new(&a, w1, w2))? {
                rep.informational(check_2cocycle(&a, &d.omega1, scan));
                rep.mandatory(check_deformation(&a, &d, scan));
            }
        }
        Command::TrivialDeformation => {
            let a = doc.ternary_algebra()?;
            let n = doc.map("N")?;
            if let Some(d) = hypothesis(&mut rep, build_trivial_deformation(&a, n))? {
                rep.mandatory(check_deformation(&a, &d, Scan::Full));
                let mut out = AlgebraDocument::from_ternary(&a).with_map("N", n.clone());
                out.cochains.insert("omega1".into(), d.omega1);
                out.cochains.insert("omega2".into(), d.omega2);
                rep.output = Some(out);
            }
        }
        Command::Prop56 => {
            let a = doc.binary_algebra()?;
            if let Some(t) = hypothesis(&mut rep, check_prop56(&a, doc.form("tau")?, doc.map("N")?))? {
                rep.theorem(t);
            }
        }
        Command::Prop59 => {
            let a = doc.ternary_algebra()?;
            let rb = rota_baxter(doc, flags)?;
            if let Some(t) = hypothesis(&mut rep, check_prop59(&a, doc.map("N")?, &rb))? {
                rep.theorem(t);
            }
        }
        Command::Prop510 => {
            let a = doc.ternary_algebra()?;
            if let Some(e) = hypothesis(&mut rep, check_prop510(&a, doc.map("N")?))? {
                rep.equivalence(e);
            }
        }
    }
    Ok(rep)
}
