//! Second-order deformations, N-brackets and Nijenhuis operators.
//!
//! A deformation is `[.,.,.]_t = ω_0 + t ω_1 + t² ω_2` with `ω_0` the ambient
//! bracket. It is again 3-BiHom-Lie for every `t` exactly when each `ω_i`
//! commutes with α and β and `Σ_{i+j=l} ω_i ∘ ω_j = 0` for `l = 1..4`.
//!
//! The composition `ω_i ∘ ω_j (X, Y, z)`, for `X = x1 ∧ x2` and `Y = y1 ∧ y2`,
//! is evaluated with every inner output in the third slot of the outer map:
//!
//! `  (-1)^{(|X|+|y1|)(|y2|+|z|)}     ω_i(β²y2, β²z, ω_j(βx1, βx2, αy1))`
//! `- (-1)^{|X||y1| + (|X|+|y2|)|z|}  ω_i(β²y1, β²z, ω_j(βx1, βx2, αy2))`
//! `-                                  ω_i(β²x1, β²x2, ω_j(βy1, βy2, αz))`
//! `+ (-1)^{|X||Y|}                    ω_i(β²y1, β²y2, ω_j(βx1, βx2, αz))`.
//!
//! For twisted skew-symmetric maps this agrees with placing the inner output
//! where the wedge product puts it, and `ω_0 ∘ ω_0 = 0` is the ternary
//! Jacobi identity.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{
    combine, images, run_check, twist_compatibility, twisted_skew, BiHomLieSuperalgebra, NambuExpression,
    ThreeBiHomLieSuperalgebra,
};
use crate::derivation::is_derivation_3;
use crate::error::Error;
use crate::map::{GradedMap, LinearForm};
use crate::report::{Equivalence, Scan, TheoremCheck, VerificationReport};
use crate::rota_baxter::{is_rb3, rb3_identity, rb_bracket_tensor, subset_size, RotaBaxterOperator, SUBSETS3};
use crate::scalar::{Parity, Scalar};
use crate::space::Vector;
use crate::tau::{check_tau_conditions, induce_tau_unchecked};
use crate::tensor::{StructureTensor3, WedgePair};

/// The cochains `ω_1`, `ω_2` of a second-order deformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationPair {
    pub omega1: StructureTensor3,
    pub omega2: StructureTensor3,
}

impl DeformationPair {
    /// Both cochains must satisfy the same twisted swap conditions as the
    /// ambient bracket, so that every member of the family can be 3-BiHom-Lie.
    pub fn new(a: &ThreeBiHomLieSuperalgebra, omega1: StructureTensor3, omega2: StructureTensor3) -> Result<Self, Error> {
        a.space().check_same(omega1.space())?;
        a.space().check_same(omega2.space())?;
        let skew = combine(
            "cochain skew-supersymmetry",
            [
                twisted_skew(&omega1, a.alpha(), a.beta(), "omega1", Scan::Full),
                twisted_skew(&omega2, a.alpha(), a.beta(), "omega2", Scan::Full),
            ],
        );
        if !skew.holds() {
            return Err(Error::precondition(skew));
        }
        Ok(DeformationPair { omega1, omega2 })
    }

    pub fn zero(a: &ThreeBiHomLieSuperalgebra) -> Self {
        DeformationPair { omega1: StructureTensor3::zero(a.space()), omega2: StructureTensor3::zero(a.space()) }
    }
}

/// `ω_i ∘_{α,β} ω_j (X, Y, z)` on homogeneous arguments.
pub fn omega_compose(
    a: &ThreeBiHomLieSuperalgebra,
    wi: &StructureTensor3,
    wj: &StructureTensor3,
    x: &WedgePair,
    y: &WedgePair,
    z: &Vector,
) -> Result<Vector, Error> {
    let space = a.space();
    let px = x.parity(space)?;
    let py = y.parity(space)?;
    let py1 = space.parity_of(&y.first).ok_or(Error::Inhomogeneous)?;
    let py2 = space.parity_of(&y.second).ok_or(Error::Inhomogeneous)?;
    let pz = space.parity_of(z).ok_or(Error::Inhomogeneous)?;
    let al = a.alpha();
    let be = a.beta();
    let be2 = be.pow(2);
    let bx = x.map(be)?;
    let by = y.map(be)?;
    let b2x = x.map(&be2)?;
    let b2y = y.map(&be2)?;
    let b2z = be2.apply(z)?;
    let az = al.apply(z)?;

    let inner1 = wj.eval3(&bx.first, &bx.second, &al.apply(&y.first)?);
    let inner2 = wj.eval3(&bx.first, &bx.second, &al.apply(&y.second)?);
    let mut out = wi.eval3(&b2y.second, &b2z, &inner1).signed(Parity::koszul(px + py1, py2 + pz));
    out.sub_assign(&wi.eval3(&b2y.first, &b2z, &inner2).signed(Parity::koszul(px, py1) + Parity::koszul(px + py2, pz)));
    out.sub_assign(&wi.eval3(&b2x.first, &b2x.second, &wj.eval3(&by.first, &by.second, &az)));
    let last = wi.eval3(&b2y.first, &b2y.second, &wj.eval3(&bx.first, &bx.second, &az));
    out.add_assign(&last.signed(Parity::koszul(px, py)));
    Ok(out)
}

/// `ω∘α^{⊗3} = α∘ω` and `ω∘β^{⊗3} = β∘ω` on basis triples.
fn twist_equivariance(name: &str, w: &StructureTensor3, alpha: &GradedMap, beta: &GradedMap, scan: Scan) -> VerificationReport {
    let al = images(alpha);
    let be = images(beta);
    run_check::<3, _>(&format!("{name} commutes with alpha and beta"), w.space().dim(), scan, &["alpha", "beta"], |c, [i, j, k]| {
        let (m, im) = if c == 0 { (alpha, &al) } else { (beta, &be) };
        w.eval3(&im[i], &im[j], &im[k]).difference(&m.apply(&w.image(&[i, j, k])).expect("same space"))
    })
}

/// `Σ_{i+j=l} ω_i ∘ ω_j = 0` on raw basis 5-tuples, for the listed `l`.
fn composition_sums(a: &ThreeBiHomLieSuperalgebra, omegas: [&StructureTensor3; 3], levels: &[usize], scan: Scan) -> VerificationReport {
    let mut report = VerificationReport::new("composition sums");
    for &l in levels {
        let terms: Vec<NambuExpression<'_>> = (0..3)
            .filter(|&i| l >= i && l - i < 3)
            .map(|i| NambuExpression::new(omegas[i], omegas[l - i], a.alpha(), a.beta()))
            .collect();
        let part = run_check::<5, _>(&format!("l = {l}"), a.dim(), scan, &["sum"], |_, t| {
            let mut acc = a.space().zero();
            for e in &terms {
                acc.sub_assign(&e.residual(t));
            }
            acc
        });
        report.absorb(part);
        if scan == Scan::FailFast && !report.holds() {
            break;
        }
    }
    report
}

/// The deformation equations: equivariance of `ω_1`, `ω_2` and the four
/// composition sums.
pub fn check_deformation(a: &ThreeBiHomLieSuperalgebra, d: &DeformationPair, scan: Scan) -> VerificationReport {
    let mut report = VerificationReport::new("second-order deformation");
    report.absorb(twist_equivariance("omega1", &d.omega1, a.alpha(), a.beta(), scan));
    report.absorb(twist_equivariance("omega2", &d.omega2, a.alpha(), a.beta(), scan));
    if scan == Scan::FailFast && !report.holds() {
        return report;
    }
    report.absorb(composition_sums(a, [a.bracket(), &d.omega1, &d.omega2], &[1, 2, 3, 4], scan));
    report
}

/// `ω_0 ∘ ω_1 + ω_1 ∘ ω_0 = 0`.
pub fn check_2cocycle(a: &ThreeBiHomLieSuperalgebra, w1: &StructureTensor3, scan: Scan) -> VerificationReport {
    let zero = StructureTensor3::zero(a.space());
    let mut r = composition_sums(a, [a.bracket(), w1, &zero], &[1], scan);
    r.identity = String::from("2-cocycle");
    r
}

/// `ω ∘ ω = 0`, the ternary Jacobi identity in composition form.
pub fn check_self_composition(a: &ThreeBiHomLieSuperalgebra, w: &StructureTensor3, scan: Scan) -> VerificationReport {
    let e = NambuExpression::new(w, w, a.alpha(), a.beta());
    run_check::<5, _>("omega∘omega = 0", a.dim(), scan, &["composition"], |_, t| e.residual(t).neg())
}

/// `[Nx,y,z] + [x,Ny,z] + [x,y,Nz] - N[x,y,z]`, without checking anything about `N`.
pub fn n_bracket_1_tensor(a: &ThreeBiHomLieSuperalgebra, n: &GradedMap) -> Result<StructureTensor3, Error> {
    a.space().check_same(n.space())?;
    let space = a.space();
    let ni = images(n);
    StructureTensor3::from_fn(space, |[i, j, k]| {
        let (x, y, z) = (space.basis(i), space.basis(j), space.basis(k));
        let mut out = a.br(&ni[i], &y, &z);
        out.add_assign(&a.br(&x, &ni[j], &z));
        out.add_assign(&a.br(&x, &y, &ni[k]));
        out.sub_assign(&n.apply(&a.bracket().image(&[i, j, k])).expect("same space"));
        out
    })
}

/// `[Nx,Ny,z] + [Nx,y,Nz] + [x,Ny,Nz] - N[x,y,z]^1_N`, without checking anything about `N`.
pub fn n_bracket_2_tensor(a: &ThreeBiHomLieSuperalgebra, n: &GradedMap) -> Result<StructureTensor3, Error> {
    let first = n_bracket_1_tensor(a, n)?;
    let space = a.space();
    let ni = images(n);
    StructureTensor3::from_fn(space, |[i, j, k]| {
        let (x, y, z) = (space.basis(i), space.basis(j), space.basis(k));
        let mut out = a.br(&ni[i], &ni[j], &z);
        out.add_assign(&a.br(&ni[i], &y, &ni[k]));
        out.add_assign(&a.br(&x, &ni[j], &ni[k]));
        out.sub_assign(&n.apply(&first.image(&[i, j, k])).expect("same space"));
        out
    })
}

fn even_compatible(a_alpha: &GradedMap, a_beta: &GradedMap, n: &GradedMap) -> Result<(), Error> {
    if !n.is_even() {
        return Err(Error::NotEven { name: "N" });
    }
    let comm = twist_compatibility(n, a_alpha, a_beta, "N", Scan::Full);
    if comm.holds() {
        Ok(())
    } else {
        Err(Error::precondition(comm))
    }
}

pub fn make_n_bracket_1(a: &ThreeBiHomLieSuperalgebra, n: &GradedMap) -> Result<StructureTensor3, Error> {
    a.space().check_same(n.space())?;
    even_compatible(a.alpha(), a.beta(), n)?;
    n_bracket_1_tensor(a, n)
}

pub fn make_n_bracket_2(a: &ThreeBiHomLieSuperalgebra, n: &GradedMap) -> Result<StructureTensor3, Error> {
    a.space().check_same(n.space())?;
    even_compatible(a.alpha(), a.beta(), n)?;
    n_bracket_2_tensor(a, n)
}

/// `Σ_{∅≠I⊆[3]} (-1)^{|I|-1} N^{|I|} [Ñ_I(x1), Ñ_I(x2), Ñ_I(x3)]`, where `Ñ_I`
/// leaves the slots in `I` alone and applies `N` elsewhere.
fn nijenhuis_subset_sum(a: &ThreeBiHomLieSuperalgebra, ni: &[Vector], powers: &[GradedMap], t: [usize; 3]) -> Vector {
    let space = a.space();
    let plain: [Vector; 3] = core::array::from_fn(|s| space.basis(t[s]));
    let mut out = space.zero();
    for mask in &SUBSETS3 {
        let size = subset_size(mask);
        let args: [&Vector; 3] = core::array::from_fn(|s| if mask[s] { &plain[s] } else { &ni[t[s]] });
        let v = powers[size as usize].apply(&a.bracket().eval(args).expect("same space")).expect("same space");
        out.add_assign(&v.signed(Parity::from_bit(((size - 1) % 2) as u8).expect("bit")));
    }
    out
}

/// `N([x,y,z]^2_N)` equals the subset-sum form on every basis triple. Holds
/// for any `N`; no compatibility with α, β is needed.
pub fn nijenhuis_subset_consistency(a: &ThreeBiHomLieSuperalgebra, n: &GradedMap, scan: Scan) -> Result<VerificationReport, Error> {
    a.space().check_same(n.space())?;
    let second = n_bracket_2_tensor(a, n)?;
    let ni = images(n);
    let powers: Vec<GradedMap> = (0..4).map(|k| n.pow(k)).collect();
    Ok(run_check::<3, _>("inductive and subset forms agree", a.dim(), scan, &["difference"], |_, t| {
        let inductive = n.apply(&second.image(&t)).expect("same space");
        inductive.difference(&nijenhuis_subset_sum(a, &ni, &powers, t))
    }))
}

/// `[Nx,Ny,Nz] - N([x,y,z]^2_N)` on basis triples; no compatibility clauses.
fn nijenhuis3_identity(a: &ThreeBiHomLieSuperalgebra, n: &GradedMap, scan: Scan) -> Result<VerificationReport, Error> {
    let second = n_bracket_2_tensor(a, n)?;
    let ni = images(n);
    let powers: Vec<GradedMap> = (0..4).map(|k| n.pow(k)).collect();
    Ok(run_check::<3, _>("Nijenhuis identity (ternary)", a.dim(), scan, &["[Nx,Ny,Nz] - N[..]^2", "subset form"], |c, t| {
        let inductive = n.apply(&second.image(&t)).expect("same space");
        if c == 0 {
            a.br(&ni[t[0]], &ni[t[1]], &ni[t[2]]).difference(&inductive)
        } else {
            inductive.difference(&nijenhuis_subset_sum(a, &ni, &powers, t))
        }
    }))
}

/// `[Nx,Ny,Nz] = N([x,y,z]^2_N)`, also asserting that the subset form agrees.
pub fn is_nijenhuis_3(a: &ThreeBiHomLieSuperalgebra, n: &GradedMap, scan: Scan) -> Result<VerificationReport, Error> {
    a.space().check_same(n.space())?;
    even_compatible(a.alpha(), a.beta(), n)?;
    nijenhuis3_identity(a, n, scan)
}

/// `[Nx,Ny] = N([Nx,y] + [x,Ny] - N[x,y])`.
pub fn is_nijenhuis_2(a: &BiHomLieSuperalgebra, n: &GradedMap, scan: Scan) -> Result<VerificationReport, Error> {
    a.space().check_same(n.space())?;
    even_compatible(a.alpha(), a.beta(), n)?;
    let ni = images(n);
    Ok(run_check::<2, _>("Nijenhuis identity (binary)", a.dim(), scan, &["[Nx,Ny] - N(..)"], |_, [i, j]| {
        let (x, y) = (a.space().basis(i), a.space().basis(j));
        let mut inner = a.br(&ni[i], &y);
        inner.add_assign(&a.br(&x, &ni[j]));
        inner.sub_assign(&n.apply(&a.bracket().image(&[i, j])).expect("same space"));
        a.br(&ni[i], &ni[j]).difference(&n.apply(&inner).expect("same space"))
    }))
}

fn require(report: VerificationReport) -> Result<VerificationReport, Error> {
    if report.holds() {
        Ok(report)
    } else {
        Err(Error::precondition(report))
    }
}

/// A binary Nijenhuis operator stays Nijenhuis on the τ-induced algebra.
pub fn check_prop56(a: &BiHomLieSuperalgebra, tau: &LinearForm, n: &GradedMap) -> Result<TheoremCheck, Error> {
    let hyp = require(is_nijenhuis_2(a, n, Scan::Full)?)?;
    let w = check_tau_conditions(a, tau, Scan::Full)?;
    let tau_rep = require(w.combined())?;
    let induced = induce_tau_unchecked(a, tau)?;
    Ok(TheoremCheck {
        name: String::from("Nijenhuis transfer to the induced algebra"),
        hypotheses: alloc::vec![hyp, tau_rep],
        conclusion: nijenhuis3_identity(&induced, n, Scan::Full)?,
    })
}

/// A Nijenhuis operator commuting with a Rota-Baxter operator `R` stays
/// Nijenhuis on `[.,.,.]_R`.
pub fn check_prop59(a: &ThreeBiHomLieSuperalgebra, n: &GradedMap, rb: &RotaBaxterOperator) -> Result<TheoremCheck, Error> {
    let nij = require(is_nijenhuis_3(a, n, Scan::Full)?)?;
    let rbr = require(is_rb3(a, rb, Scan::Full)?)?;
    let comm = require(crate::algebra::commutation_report(n, rb.map(), "R∘N = N∘R", Scan::Full))?;
    let built = a.with_bracket(rb_bracket_tensor(a, rb)?)?;
    Ok(TheoremCheck {
        name: String::from("Nijenhuis operator on the Rota-Baxter bracket"),
        hypotheses: alloc::vec![nij, rbr, comm],
        conclusion: nijenhuis3_identity(&built, n, Scan::Full)?,
    })
}

/// For an even derivation `N` (s = r = 0): Nijenhuis iff Rota-Baxter of weight 0.
pub fn check_prop510(a: &ThreeBiHomLieSuperalgebra, n: &GradedMap) -> Result<Equivalence, Error> {
    if !n.is_even() {
        return Err(Error::NotEven { name: "N" });
    }
    require(is_derivation_3(a, n, 0, 0, Scan::Full))?;
    let rb = RotaBaxterOperator::new(n.clone(), Scalar::zero())?;
    Ok(Equivalence {
        name: String::from("Nijenhuis vs Rota-Baxter of weight 0 for a derivation"),
        left: nijenhuis3_identity(a, n, Scan::Full)?,
        right: rb3_identity(a.bracket(), &rb, Scan::Full),
    })
}

/// `ω_1 = [.,.,.]^1_N`, `ω_2 = [.,.,.]^2_N`, after checking `N ω_2 = [N.,N.,N.]`.
pub fn build_trivial_deformation(a: &ThreeBiHomLieSuperalgebra, n: &GradedMap) -> Result<DeformationPair, Error> {
    let omega1 = make_n_bracket_1(a, n)?;
    let omega2 = make_n_bracket_2(a, n)?;
    let ni = images(n);
    let top = run_check::<3, _>("N omega2 = [Nx,Ny,Nz]", a.dim(), Scan::Full, &["top order"], |_, t| {
        n.apply(&omega2.image(&t)).expect("same space").difference(&a.br(&ni[t[0]], &ni[t[1]], &ni[t[2]]))
    });
    require(top)?;
    DeformationPair::new(a, omega1, omega2)
}
