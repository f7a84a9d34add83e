//! Ternary brackets induced from a binary bracket and a linear form τ:
//!
//! `[x1,x2,x3]_τ = τ(x1)[x2,x3] - (-1)^{|x1||x2|} τ(x2)[x1,x3] + (-1)^{|x3|(|x1|+|x2|)} τ(x3)[x1,x2]`.

use alloc::vec::Vec;

use crate::algebra::{combine, images, run_check, BiHomLieSuperalgebra, ThreeBiHomLieSuperalgebra};
use crate::error::Error;
use crate::map::LinearForm;
use crate::matrix::{kernel_basis, Matrix};
use crate::report::{Scan, VerificationReport};
use crate::scalar::{Parity, Scalar};
use crate::space::Vector;
use crate::tensor::StructureTensor3;

/// The three hypotheses under which the induced bracket is a 3-BiHom-Lie
/// superalgebra, each checked on all basis pairs.
#[derive(Clone, Debug)]
pub struct TauWitness {
    pub tau: LinearForm,
    /// `τ([x,y]) = 0`.
    pub bracket_annihilated: VerificationReport,
    /// `τ(x)τ(β(y)) = τ(y)τ(β(x))`.
    pub beta_symmetric: VerificationReport,
    /// `τ(α(x))β(y) = τ(β(x))α(y)`, componentwise.
    pub twist_compatible: VerificationReport,
}

impl TauWitness {
    pub fn holds(&self) -> bool {
        self.bracket_annihilated.holds() && self.beta_symmetric.holds() && self.twist_compatible.holds()
    }

    pub fn reports(&self) -> [&VerificationReport; 3] {
        [&self.bracket_annihilated, &self.beta_symmetric, &self.twist_compatible]
    }

    pub fn combined(&self) -> VerificationReport {
        combine("tau conditions", self.reports().into_iter().cloned())
    }
}

fn scalar_residual(c: Scalar) -> Vector {
    Vector::from_vec(alloc::vec![c])
}

pub fn check_tau_conditions(a: &BiHomLieSuperalgebra, tau: &LinearForm, scan: Scan) -> Result<TauWitness, Error> {
    a.space().check_same(tau.space())?;
    let dim = a.dim();
    let al = images(a.alpha());
    let be = images(a.beta());
    let t: Vec<Scalar> = (0..dim).map(|i| tau.coefficient(i).clone()).collect();
    let t_al: Vec<Scalar> = al.iter().map(|v| tau.eval(v)).collect();
    let t_be: Vec<Scalar> = be.iter().map(|v| tau.eval(v)).collect();

    let bracket_annihilated = run_check::<2, _>("tau([x,y]) = 0", dim, scan, &["tau∘bracket"], |_, [i, j]| {
        scalar_residual(tau.eval(&a.bracket().image(&[i, j])))
    });
    let beta_symmetric = run_check::<2, _>(
        "tau(x)tau(beta(y)) = tau(y)tau(beta(x))",
        dim,
        scan,
        &["symmetry"],
        |_, [i, j]| scalar_residual(&t[i] * &t_be[j] - &t[j] * &t_be[i]),
    );
    let twist_compatible = run_check::<2, _>(
        "tau(alpha(x))beta(y) = tau(beta(x))alpha(y)",
        dim,
        scan,
        &["componentwise"],
        |_, [i, j]| {
            let mut r = be[j].scaled(&t_al[i]);
            r.sub_assign(&al[j].scaled(&t_be[i]));
            r
        },
    );
    Ok(TauWitness { tau: tau.clone(), bracket_annihilated, beta_symmetric, twist_compatible })
}

/// The induced tensor, computed without checking any hypothesis.
pub fn induced_bracket(a: &BiHomLieSuperalgebra, tau: &LinearForm) -> Result<StructureTensor3, Error> {
    a.space().check_same(tau.space())?;
    let space = a.space();
    let br = a.bracket();
    StructureTensor3::from_fn(space, |[i, j, k]| {
        let (p1, p2, p3) = (space.parity(i), space.parity(j), space.parity(k));
        let mut out = space.zero();
        out.add_scaled(tau.coefficient(i), &br.image(&[j, k]));
        let s2 = Parity::koszul(p1, p2);
        out.add_scaled(&(-tau.coefficient(j)), &br.image(&[i, k]).signed(s2));
        let s3 = Parity::koszul(p3, p1 + p2);
        out.add_scaled(tau.coefficient(k), &br.image(&[i, j]).signed(s3));
        out
    })
}

/// `(g, [.,.,.]_τ, α, β)`, refusing when τ fails any hypothesis.
pub fn induce_tau(a: &BiHomLieSuperalgebra, tau: &LinearForm) -> Result<ThreeBiHomLieSuperalgebra, Error> {
    let witness = check_tau_conditions(a, tau, Scan::Full)?;
    if !witness.holds() {
        return Err(Error::precondition(witness.combined()));
    }
    induce_tau_unchecked(a, tau)
}

/// `(g, [.,.,.]_τ, α, β)` regardless of the hypotheses; the result is unverified.
pub fn induce_tau_unchecked(a: &BiHomLieSuperalgebra, tau: &LinearForm) -> Result<ThreeBiHomLieSuperalgebra, Error> {
    ThreeBiHomLieSuperalgebra::new(induced_bracket(a, tau)?, a.alpha().clone(), a.beta().clone())
}

/// A basis of the linear forms that vanish on the odd part and on every bracket.
/// The remaining hypotheses are quadratic and are not solved for.
pub fn bracket_annihilators(a: &BiHomLieSuperalgebra) -> Vec<LinearForm> {
    let space = a.space();
    let dim = space.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for k in (0..dim).filter(|&k| space.parity(k).is_odd()) {
        rows.push(space.basis(k).into_inner());
    }
    for i in 0..dim {
        for j in 0..dim {
            let v = a.bracket().image(&[i, j]);
            if !v.is_zero() {
                rows.push(v.into_inner());
            }
        }
    }
    if rows.is_empty() {
        rows.push(space.zero().into_inner());
    }
    let m = Matrix::from_rows(rows).expect("rows have equal length");
    kernel_basis(&m)
        .into_iter()
        .map(|v| LinearForm::new(space.clone(), v.into_inner()).expect("odd coordinates are constrained to zero"))
        .collect()
}
