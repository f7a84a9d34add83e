//! Rota-Baxter operators of weight λ and the brackets they induce.

use alloc::string::String;

use crate::algebra::{
    combine, images, run_check, twist_compatibility, verify_3bihom_axioms, BiHomLieSuperalgebra,
    ThreeBiHomLieSuperalgebra,
};
use crate::derivation::is_derivation_3;
use crate::error::Error;
use crate::map::{GradedMap, LinearForm};
use crate::report::{Equivalence, Scan, TheoremCheck, VerificationReport};
use crate::scalar::{Parity, Scalar};
use crate::space::Vector;
use crate::tau::{check_tau_conditions, induce_tau_unchecked};
use crate::tensor::StructureTensor3;

/// An even map `R` together with its weight λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterOperator {
    map: GradedMap,
    weight: Scalar,
}

impl RotaBaxterOperator {
    pub fn new(map: GradedMap, weight: Scalar) -> Result<Self, Error> {
        if !map.is_even() {
            return Err(Error::NotEven { name: "R" });
        }
        Ok(RotaBaxterOperator { map, weight })
    }

    pub fn map(&self) -> &GradedMap {
        &self.map
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }
}

/// Nonempty subsets of `{1,2,3}` as membership masks, ordered by size and
/// then lexicographically.
pub const SUBSETS3: [[bool; 3]; 7] = [
    [true, false, false],
    [false, true, false],
    [false, false, true],
    [true, true, false],
    [true, false, true],
    [false, true, true],
    [true, true, true],
];

pub(crate) fn subset_size(mask: &[bool; 3]) -> u32 {
    mask.iter().filter(|&&b| b).count() as u32
}

/// `[R(x),R(y)] - R([R(x),y] + [x,R(y)] + λ[x,y])` on basis pairs.
fn rb2_identity(a: &BiHomLieSuperalgebra, rb: &RotaBaxterOperator, scan: Scan) -> VerificationReport {
    let r = &rb.map;
    let ri = images(r);
    let lam = &rb.weight;
    run_check::<2, _>("Rota-Baxter identity (binary)", a.dim(), scan, &["[Rx,Ry] - R(..)"], |_, [i, j]| {
        let (x, y) = (a.space().basis(i), a.space().basis(j));
        let mut inner = a.br(&ri[i], &y);
        inner.add_assign(&a.br(&x, &ri[j]));
        inner.add_scaled(lam, &a.bracket().image(&[i, j]));
        a.br(&ri[i], &ri[j]).difference(&r.apply(&inner).expect("same space"))
    })
}

/// `Σ_{∅≠I⊆[3]} λ^{|I|-1} [R̂_I(x1), R̂_I(x2), R̂_I(x3)]` where `R̂_I` leaves the
/// slots in `I` alone and applies `R` elsewhere.
fn rb_sum(bracket: &StructureTensor3, lam: &Scalar, plain: [&Vector; 3], applied: [&Vector; 3]) -> Vector {
    let mut out = Vector::zeros(plain[0].len());
    for mask in &SUBSETS3 {
        let c = lam.pow(subset_size(mask) - 1);
        if c.is_zero() {
            continue;
        }
        let args: [&Vector; 3] = core::array::from_fn(|s| if mask[s] { plain[s] } else { applied[s] });
        out.add_scaled(&c, &bracket.eval(args).expect("same space"));
    }
    out
}

/// `[Rx,Ry,Rz] - R([x,y,z]_R)` on basis triples, without the commutation clauses.
pub(crate) fn rb3_identity(bracket: &StructureTensor3, rb: &RotaBaxterOperator, scan: Scan) -> VerificationReport {
    let space = bracket.space();
    let r = &rb.map;
    let ri = images(r);
    run_check::<3, _>("Rota-Baxter identity (ternary)", space.dim(), scan, &["[Rx,Ry,Rz] - R(..)"], |_, [i, j, k]| {
        let (x, y, z) = (space.basis(i), space.basis(j), space.basis(k));
        let inner = rb_sum(bracket, &rb.weight, [&x, &y, &z], [&ri[i], &ri[j], &ri[k]]);
        bracket.eval3(&ri[i], &ri[j], &ri[k]).difference(&r.apply(&inner).expect("same space"))
    })
}

fn commutation_precondition(r: &GradedMap, alpha: &GradedMap, beta: &GradedMap) -> Result<(), Error> {
    let comm = twist_compatibility(r, alpha, beta, "R", Scan::Full);
    if comm.holds() {
        Ok(())
    } else {
        Err(Error::precondition(comm))
    }
}

pub fn is_rb2(a: &BiHomLieSuperalgebra, rb: &RotaBaxterOperator, scan: Scan) -> Result<VerificationReport, Error> {
    a.space().check_same(rb.map.space())?;
    commutation_precondition(&rb.map, a.alpha(), a.beta())?;
    Ok(rb2_identity(a, rb, scan))
}

pub fn is_rb3(a: &ThreeBiHomLieSuperalgebra, rb: &RotaBaxterOperator, scan: Scan) -> Result<VerificationReport, Error> {
    a.space().check_same(rb.map.space())?;
    commutation_precondition(&rb.map, a.alpha(), a.beta())?;
    Ok(rb3_identity(a.bracket(), rb, scan))
}

/// For invertible even `R`: weight-0 Rota-Baxter on one side, `R^{-1}` an
/// even (s = r = 0) derivation on the other. Both sides include commutation
/// with α and β.
pub fn check_prop43(a: &ThreeBiHomLieSuperalgebra, r: &GradedMap) -> Result<Equivalence, Error> {
    let rb = RotaBaxterOperator::new(r.clone(), Scalar::zero())?;
    let inv = r.inverse()?;
    let left = combine(
        "R is Rota-Baxter of weight 0",
        [twist_compatibility(r, a.alpha(), a.beta(), "R", Scan::Full), rb3_identity(a.bracket(), &rb, Scan::Full)],
    );
    let mut right = is_derivation_3(a, &inv, 0, 0, Scan::Full);
    right.identity = String::from("R^-1 is an even derivation");
    Ok(Equivalence { name: String::from("Rota-Baxter weight 0 vs inverse derivation"), left, right })
}

/// `W(x,y,z) = τ(x)[Ry,Rz] - (-1)^{|x||y|}τ(y)[Rx,Rz] + (-1)^{|z|(|x|+|y|)}τ(z)[Rx,Ry]`.
fn kernel_argument(a: &BiHomLieSuperalgebra, tau: &LinearForm, ri: &[Vector], [i, j, k]: [usize; 3]) -> Vector {
    let p = |n: usize| a.space().parity(n);
    let mut w = a.br(&ri[j], &ri[k]).scaled(tau.coefficient(i));
    w.sub_assign(&a.br(&ri[i], &ri[k]).scaled(tau.coefficient(j)).signed(Parity::koszul(p(i), p(j))));
    w.add_assign(&a.br(&ri[i], &ri[j]).scaled(tau.coefficient(k)).signed(Parity::koszul(p(k), p(i) + p(j))));
    w
}

/// Transfer of a binary Rota-Baxter operator to the τ-induced algebra.
///
/// The left side is the kernel criterion `W(x,y,z) ∈ ker(R + λ Id)` on every
/// basis triple, the right side runs the ternary identity on the induced
/// algebra directly. With the weight entering the binary identity as `+λ[x,y]`
/// the ternary residual on the induced algebra equals `-(R + λ Id) W`.
pub fn check_prop44(a: &BiHomLieSuperalgebra, tau: &LinearForm, rb: &RotaBaxterOperator) -> Result<Equivalence, Error> {
    let pre = is_rb2(a, rb, Scan::Full)?;
    if !pre.holds() {
        return Err(Error::precondition(pre));
    }
    let w = check_tau_conditions(a, tau, Scan::Full)?;
    if !w.holds() {
        return Err(Error::precondition(w.combined()));
    }
    let r = &rb.map;
    let ri = images(r);
    let shifted = r.add(&GradedMap::scalar(a.space(), rb.weight.clone()))?;
    let left = run_check::<3, _>("W(x,y,z) in ker(R + lambda Id)", a.dim(), Scan::Full, &["(R + lambda)W"], |_, t| {
        shifted.apply(&kernel_argument(a, tau, &ri, t)).expect("same space")
    });
    let induced = induce_tau_unchecked(a, tau)?;
    let right = rb3_identity(induced.bracket(), rb, Scan::Full);
    Ok(Equivalence { name: String::from("kernel criterion vs direct check on the induced algebra"), left, right })
}

/// The tensor of `[x1,x2,x3]_R`, computed without checking anything.
pub fn rb_bracket_tensor(a: &ThreeBiHomLieSuperalgebra, rb: &RotaBaxterOperator) -> Result<StructureTensor3, Error> {
    a.space().check_same(rb.map.space())?;
    let space = a.space();
    let ri = images(&rb.map);
    StructureTensor3::from_fn(space, |[i, j, k]| {
        let (x, y, z) = (space.basis(i), space.basis(j), space.basis(k));
        rb_sum(a.bracket(), &rb.weight, [&x, &y, &z], [&ri[i], &ri[j], &ri[k]])
    })
}

/// `(g, [.,.,.]_R, α, β)` for a Rota-Baxter operator `R` of `a`.
pub fn make_rb_bracket(a: &ThreeBiHomLieSuperalgebra, rb: &RotaBaxterOperator) -> Result<ThreeBiHomLieSuperalgebra, Error> {
    let pre = is_rb3(a, rb, Scan::Full)?;
    if !pre.holds() {
        return Err(Error::precondition(pre));
    }
    Ok(a.with_bracket(rb_bracket_tensor(a, rb)?)?.with_multiplicative_claim(a.claims_multiplicative()))
}

/// The induced algebra is again 3-BiHom-Lie and `R` stays Rota-Baxter of the same weight on it.
pub fn check_theorem45(a: &ThreeBiHomLieSuperalgebra, rb: &RotaBaxterOperator) -> Result<TheoremCheck, Error> {
    let hyp = is_rb3(a, rb, Scan::Full)?;
    let induced = a.with_bracket(rb_bracket_tensor(a, rb)?)?;
    let mut conclusion = verify_3bihom_axioms(&induced, Scan::Full);
    conclusion.absorb(rb3_identity(induced.bracket(), rb, Scan::Full));
    conclusion.identity = String::from("[.,.,.]_R is 3-BiHom-Lie with R Rota-Baxter");
    Ok(TheoremCheck { name: String::from("Rota-Baxter bracket"), hypotheses: alloc::vec![hyp], conclusion })
}

/// `(g, [.,.,.]_R, α∘R, β∘R)` for an idempotent Rota-Baxter operator.
pub fn make_prop46_algebra(a: &ThreeBiHomLieSuperalgebra, rb: &RotaBaxterOperator) -> Result<ThreeBiHomLieSuperalgebra, Error> {
    if !rb.map.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let pre = is_rb3(a, rb, Scan::Full)?;
    if !pre.holds() {
        return Err(Error::precondition(pre));
    }
    let alpha = a.alpha().compose(&rb.map)?;
    let beta = a.beta().compose(&rb.map)?;
    ThreeBiHomLieSuperalgebra::new(rb_bracket_tensor(a, rb)?, alpha, beta)
}

/// Runs the nonmultiplicative axioms on [`make_prop46_algebra`]'s output.
/// "Noncommutative" in the original statement is read as nonmultiplicative.
pub fn check_prop46(a: &ThreeBiHomLieSuperalgebra, rb: &RotaBaxterOperator) -> Result<TheoremCheck, Error> {
    let built = make_prop46_algebra(a, rb)?;
    let hyp = is_rb3(a, rb, Scan::Full)?;
    let conclusion = verify_3bihom_axioms(&built, Scan::Full)
        .with_note("\"noncommutative\" read as nonmultiplicative; multiplicativity is not checked");
    Ok(TheoremCheck { name: String::from("idempotent Rota-Baxter twist"), hypotheses: alloc::vec![hyp], conclusion })
}
