//! (α^s, β^r)-derivations and quasiderivations, and exact solvers for them.
//!
//! For `T = α^s β^r` a homogeneous `D` is an (α^s, β^r)-derivation of a
//! ternary algebra when it commutes with α and β and
//!
//! `D[x,y,z] = [Dx,Ty,Tz] + (-1)^{|x||D|}[Tx,Dy,Tz] + (-1)^{|D|(|x|+|y|)}[Tx,Ty,Dz]`.
//!
//! The binary rule is `D[x,y] = [Dx,Ty] + (-1)^{|x||D|}[Tx,Dy]`. A
//! quasiderivation allows a second map `D'` on the left.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{combine, images, run_check, twist_compatibility, BiHomLieSuperalgebra, ThreeBiHomLieSuperalgebra};
use crate::error::Error;
use crate::map::{GradedMap, LinearForm};
use crate::matrix::{kernel_basis, solve_affine, Matrix};
use crate::report::{Scan, TheoremCheck, VerificationReport, Violation};
use crate::scalar::{Parity, Scalar};
use crate::space::{SuperSpace, Vector};
use crate::tau::{check_tau_conditions, induce_tau_unchecked};
use crate::tensor::{basis_tuples, StructureTensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DerivationQuery {
    pub s: u32,
    pub r: u32,
    pub parity: Parity,
}

impl DerivationQuery {
    pub fn new(s: u32, r: u32, parity: Parity) -> Self {
        DerivationQuery { s, r, parity }
    }
}

/// A basis of the (α^s, β^r)-derivations of one parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub query: DerivationQuery,
    pub basis: Vec<GradedMap>,
}

impl DerivationSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// `α^s ∘ β^r`.
pub fn twist_power(alpha: &GradedMap, beta: &GradedMap, s: u32, r: u32) -> GradedMap {
    alpha.pow(s).compose(&beta.pow(r)).expect("same space")
}

/// `[D, D'] = D D' - (-1)^{|D||D'|} D' D`.
pub fn supercommutator(d: &GradedMap, e: &GradedMap) -> Result<GradedMap, Error> {
    let de = d.compose(e)?;
    let ed = e.compose(d)?;
    let sign = Parity::koszul(d.parity(), e.parity());
    let ed = if sign.is_odd() { ed.scaled(&-Scalar::one()) } else { ed };
    de.sub(&ed)
}

/// Right-hand side of the Leibniz rule on the basis tuple `t`, for a bracket
/// of any arity: slot `m` receives `D`, the others receive `T`.
fn leibniz_rhs<const N: usize>(
    bracket: &StructureTensor<N>,
    space: &SuperSpace,
    d_images: &[Vector],
    d_parity: Parity,
    t_images: &[Vector],
    t: [usize; N],
) -> Vector {
    let mut out = space.zero();
    let mut before = Parity::Even;
    for m in 0..N {
        let args: [&Vector; N] = core::array::from_fn(|s| if s == m { &d_images[t[s]] } else { &t_images[t[s]] });
        let term = bracket.eval(args).expect("same space");
        out.add_assign(&term.signed(Parity::koszul(d_parity, before)));
        before += space.parity(t[m]);
    }
    out
}

fn leibniz_residual<const N: usize>(
    bracket: &StructureTensor<N>,
    lhs_map: &GradedMap,
    d: &GradedMap,
    t_images: &[Vector],
    t: [usize; N],
) -> Vector {
    let space = bracket.space();
    let d_images = images(d);
    let lhs = lhs_map.apply(&bracket.image(&t)).expect("same space");
    lhs.difference(&leibniz_rhs(bracket, space, &d_images, d.parity(), t_images, t))
}

fn derivation_report<const N: usize>(
    bracket: &StructureTensor<N>,
    alpha: &GradedMap,
    beta: &GradedMap,
    d: &GradedMap,
    s: u32,
    r: u32,
    scan: Scan,
) -> VerificationReport {
    let name = format!("(alpha^{s},beta^{r})-derivation");
    let comm = twist_compatibility(d, alpha, beta, "D", scan);
    if scan == Scan::FailFast && !comm.holds() {
        return combine(&name, [comm]);
    }
    let t_images = images(&twist_power(alpha, beta, s, r));
    let d_images = images(d);
    let space = bracket.space();
    let rule = run_check::<N, _>("Leibniz rule", space.dim(), scan, &["D[..] - rhs"], |_, t| {
        let lhs = d.apply(&bracket.image(&t)).expect("same space");
        lhs.difference(&leibniz_rhs(bracket, space, &d_images, d.parity(), &t_images, t))
    });
    combine(&name, [comm, rule])
}

pub fn is_derivation_3(a: &ThreeBiHomLieSuperalgebra, d: &GradedMap, s: u32, r: u32, scan: Scan) -> VerificationReport {
    derivation_report(a.bracket(), a.alpha(), a.beta(), d, s, r, scan)
}

pub fn is_derivation_2(a: &BiHomLieSuperalgebra, d: &GradedMap, s: u32, r: u32, scan: Scan) -> VerificationReport {
    derivation_report(a.bracket(), a.alpha(), a.beta(), d, s, r, scan)
}

/// Positions `(row, col)` a map of the given parity may occupy.
fn allowed_positions(space: &SuperSpace, parity: Parity) -> Vec<(usize, usize)> {
    let n = space.dim();
    let mut out = Vec::new();
    for col in 0..n {
        for row in 0..n {
            if space.parity(row) == space.parity(col) + parity {
                out.push((row, col));
            }
        }
    }
    out
}

fn elementary(space: &SuperSpace, parity: Parity, (row, col): (usize, usize)) -> GradedMap {
    let n = space.dim();
    let mut m = Matrix::zeros(n, n);
    m[(row, col)] = Scalar::one();
    GradedMap::new(space.clone(), m, parity).expect("position respects parity")
}

fn assemble(space: &SuperSpace, parity: Parity, positions: &[(usize, usize)], coeffs: &Vector) -> GradedMap {
    let n = space.dim();
    let mut m = Matrix::zeros(n, n);
    for (&(row, col), c) in positions.iter().zip(coeffs.iter()) {
        m[(row, col)] = c.clone();
    }
    GradedMap::new(space.clone(), m, parity).expect("position respects parity")
}

fn commutator_entries(d: &GradedMap, m: &GradedMap, out: &mut Vec<Scalar>) {
    let c = d.compose(m).expect("same space").sub(&m.compose(d).expect("same space")).expect("same parity");
    let n = d.space().dim();
    for col in 0..n {
        for row in 0..n {
            out.push(c.matrix()[(row, col)].clone());
        }
    }
}

/// The constraint vector of the derivation conditions. It is linear in `d`.
fn derivation_constraints<const N: usize>(
    bracket: &StructureTensor<N>,
    alpha: &GradedMap,
    beta: &GradedMap,
    t_images: &[Vector],
    d: &GradedMap,
) -> Vec<Scalar> {
    let mut out = Vec::new();
    commutator_entries(d, alpha, &mut out);
    commutator_entries(d, beta, &mut out);
    for t in basis_tuples::<N>(bracket.space().dim()) {
        out.extend(leibniz_residual(bracket, d, d, t_images, t).into_inner());
    }
    out
}

fn solve_space<const N: usize>(
    bracket: &StructureTensor<N>,
    alpha: &GradedMap,
    beta: &GradedMap,
    q: DerivationQuery,
) -> DerivationSpace {
    let space = bracket.space();
    let t_images = images(&twist_power(alpha, beta, q.s, q.r));
    let positions = allowed_positions(space, q.parity);
    let columns: Vec<Vector> = positions
        .iter()
        .map(|&pos| {
            let e = elementary(space, q.parity, pos);
            Vector::from_vec(derivation_constraints(bracket, alpha, beta, &t_images, &e))
        })
        .collect();
    let basis = if columns.is_empty() {
        Vec::new()
    } else {
        let m = Matrix::from_columns(columns[0].len(), &columns);
        kernel_basis(&m).iter().map(|v| assemble(space, q.parity, &positions, v)).collect()
    };
    DerivationSpace { query: q, basis }
}

/// Exact basis of Der_{(α^s,β^r)} in the queried parity.
pub fn solve_derivation_space(a: &ThreeBiHomLieSuperalgebra, q: DerivationQuery) -> DerivationSpace {
    solve_space(a.bracket(), a.alpha(), a.beta(), q)
}

/// Binary analogue of [`solve_derivation_space`].
pub fn solve_derivation_space_2(a: &BiHomLieSuperalgebra, q: DerivationQuery) -> DerivationSpace {
    solve_space(a.bracket(), a.alpha(), a.beta(), q)
}

fn quasi_witness<const N: usize>(
    bracket: &StructureTensor<N>,
    alpha: &GradedMap,
    beta: &GradedMap,
    d: &GradedMap,
    s: u32,
    r: u32,
) -> Result<Option<GradedMap>, Error> {
    let space = bracket.space();
    let comm = twist_compatibility(d, alpha, beta, "D", Scan::Full);
    if !comm.holds() {
        return Err(Error::precondition(comm));
    }
    let t_images = images(&twist_power(alpha, beta, s, r));
    let d_images = images(d);
    let tuples: Vec<[usize; N]> = basis_tuples::<N>(space.dim()).collect();
    // D'[t] = rhs(t), D'α = αD', D'β = βD'
    let constraints = |e: &GradedMap| {
        let mut out = Vec::new();
        for t in &tuples {
            out.extend(e.apply(&bracket.image(t)).expect("same space").into_inner());
        }
        commutator_entries(e, alpha, &mut out);
        commutator_entries(e, beta, &mut out);
        out
    };
    let mut rhs = Vec::new();
    for t in &tuples {
        rhs.extend(leibniz_rhs(bracket, space, &d_images, d.parity(), &t_images, *t).into_inner());
    }
    rhs.resize(rhs.len() + 2 * space.dim() * space.dim(), Scalar::zero());
    let rhs = Vector::from_vec(rhs);
    let positions = allowed_positions(space, d.parity());
    if positions.is_empty() {
        return Ok(if rhs.is_zero() { Some(GradedMap::zero(space, d.parity())) } else { None });
    }
    let columns: Vec<Vector> = positions
        .iter()
        .map(|&pos| Vector::from_vec(constraints(&elementary(space, d.parity(), pos))))
        .collect();
    let m = Matrix::from_columns(rhs.len(), &columns);
    Ok(solve_affine(&m, &rhs)?.map(|v| assemble(space, d.parity(), &positions, &v)))
}

/// A witness `D'` of parity `|D|` if `D` is an (α^s, β^r)-quasiderivation.
/// Fails when `D` does not commute with α and β.
pub fn is_quasiderivation_3(
    a: &ThreeBiHomLieSuperalgebra,
    d: &GradedMap,
    s: u32,
    r: u32,
) -> Result<Option<GradedMap>, Error> {
    quasi_witness(a.bracket(), a.alpha(), a.beta(), d, s, r)
}

pub fn is_quasiderivation_2(a: &BiHomLieSuperalgebra, d: &GradedMap, s: u32, r: u32) -> Result<Option<GradedMap>, Error> {
    quasi_witness(a.bracket(), a.alpha(), a.beta(), d, s, r)
}

/// Residual of the quasiderivation rule for a candidate witness.
pub fn quasiderivation_residual(
    a: &ThreeBiHomLieSuperalgebra,
    d: &GradedMap,
    witness: &GradedMap,
    s: u32,
    r: u32,
    scan: Scan,
) -> VerificationReport {
    let comm = twist_compatibility(witness, a.alpha(), a.beta(), "D'", scan);
    let t_images = images(&twist_power(a.alpha(), a.beta(), s, r));
    let rule = run_check::<3, _>("quasi Leibniz rule", a.dim(), scan, &["D'[..] - rhs"], |_, t| {
        leibniz_residual(a.bracket(), witness, d, &t_images, t)
    });
    combine(&format!("(alpha^{s},beta^{r})-quasiderivation"), [comm, rule])
}

/// Hypotheses on τ shared by both transfer results:
/// the cyclic sum of `(-1)^{|x||z|} τ(D(x))[y,z]` vanishes and `τ∘α^sβ^r = τ`.
fn transfer_hypotheses(a: &BiHomLieSuperalgebra, tau: &LinearForm, d: &GradedMap, s: u32, r: u32) -> [VerificationReport; 2] {
    let space = a.space();
    let p = |i: usize| space.parity(i);
    let td: Vec<Scalar> = images(d).iter().map(|v| tau.eval(v)).collect();
    let term = |x: usize, y: usize, z: usize| a.bracket().image(&[y, z]).scaled(&td[x]).signed(Parity::koszul(p(x), p(z)));
    let cyclic = run_check::<3, _>("cyclic tau(D(x))[y,z] = 0", a.dim(), Scan::Full, &["cyclic sum"], |_, [x, y, z]| {
        let mut v = term(x, y, z);
        v.add_assign(&term(y, z, x));
        v.add_assign(&term(z, x, y));
        v
    });
    let t = twist_power(a.alpha(), a.beta(), s, r);
    let invariant = run_check::<1, _>(&format!("tau∘alpha^{s}beta^{r} = tau"), a.dim(), Scan::Full, &["invariance"], |_, [i]| {
        Vector::from_vec(alloc::vec![tau.eval(&t.image(i)) - tau.coefficient(i)])
    });
    [cyclic, invariant]
}

fn tau_precondition(a: &BiHomLieSuperalgebra, tau: &LinearForm) -> Result<(), Error> {
    let w = check_tau_conditions(a, tau, Scan::Full)?;
    if w.holds() {
        Ok(())
    } else {
        Err(Error::precondition(w.combined()))
    }
}

/// If `D` is a binary (α^s, β^r)-derivation and τ satisfies the transfer
/// hypotheses, `D` is an (α^s, β^r)-derivation of the induced ternary algebra.
pub fn check_prop33_transfer(
    a: &BiHomLieSuperalgebra,
    tau: &LinearForm,
    d: &GradedMap,
    s: u32,
    r: u32,
) -> Result<TheoremCheck, Error> {
    let der = is_derivation_2(a, d, s, r, Scan::Full);
    if !der.holds() {
        return Err(Error::precondition(der));
    }
    tau_precondition(a, tau)?;
    let hypotheses = transfer_hypotheses(a, tau, d, s, r).into();
    let induced = induce_tau_unchecked(a, tau)?;
    Ok(TheoremCheck {
        name: String::from("derivation transfer to the induced algebra"),
        hypotheses,
        conclusion: is_derivation_3(&induced, d, s, r, Scan::Full),
    })
}

/// The quasiderivation counterpart of [`check_prop33_transfer`]. No proof of
/// this statement is known here, so the conclusion carries a note saying so.
pub fn check_prop34_transfer(
    a: &BiHomLieSuperalgebra,
    tau: &LinearForm,
    d: &GradedMap,
    s: u32,
    r: u32,
) -> Result<TheoremCheck, Error> {
    if is_quasiderivation_2(a, d, s, r)?.is_none() {
        let mut rep = VerificationReport::new("binary quasiderivation");
        rep.checked = 1;
        rep.violations.push(Violation { clause: "no witness D'".into(), tuple: Vec::new(), residual: Vector::zeros(0) });
        return Err(Error::precondition(rep));
    }
    tau_precondition(a, tau)?;
    let hypotheses = transfer_hypotheses(a, tau, d, s, r).into();
    let induced = induce_tau_unchecked(a, tau)?;
    let mut conclusion = VerificationReport::new("quasiderivation of the induced algebra")
        .with_note("unproved statement; the verdict is empirical");
    conclusion.checked = 1;
    if is_quasiderivation_3(&induced, d, s, r)?.is_none() {
        conclusion.violations.push(Violation { clause: "no witness D'".into(), tuple: Vec::new(), residual: Vector::zeros(0) });
    }
    Ok(TheoremCheck { name: String::from("quasiderivation transfer to the induced algebra"), hypotheses, conclusion })
}
