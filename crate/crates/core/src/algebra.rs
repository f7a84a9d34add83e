//! Binary and ternary BiHom-Lie superalgebras and their axiom verifiers.

use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::map::GradedMap;
use crate::report::{Scan, VerificationReport};
use crate::scalar::Parity;
use crate::space::{SuperSpace, Vector};
use crate::tensor::{basis_tuples, StructureTensor2, StructureTensor3};

/// `(g, [.,.], α, β)`. The maps are even; the multiplicativity flag is only a
/// claim and no verifier reads it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomLieSuperalgebra {
    bracket: StructureTensor2,
    alpha: GradedMap,
    beta: GradedMap,
    multiplicative: bool,
}

/// `(g, [.,.,.], α, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeBiHomLieSuperalgebra {
    bracket: StructureTensor3,
    alpha: GradedMap,
    beta: GradedMap,
    multiplicative: bool,
}

fn check_twisting(space: &SuperSpace, alpha: &GradedMap, beta: &GradedMap) -> Result<(), Error> {
    space.check_same(alpha.space())?;
    space.check_same(beta.space())?;
    if !alpha.is_even() {
        return Err(Error::NotEven { name: "alpha" });
    }
    if !beta.is_even() {
        return Err(Error::NotEven { name: "beta" });
    }
    Ok(())
}

macro_rules! algebra_common {
    ($ty:ident, $tensor:ident) => {
        impl $ty {
            pub fn new(bracket: $tensor, alpha: GradedMap, beta: GradedMap) -> Result<Self, Error> {
                check_twisting(bracket.space(), &alpha, &beta)?;
                Ok($ty { bracket, alpha, beta, multiplicative: false })
            }

            /// `α = β = Id`.
            pub fn untwisted(bracket: $tensor) -> Self {
                let id = GradedMap::identity(bracket.space());
                $ty { alpha: id.clone(), beta: id, bracket, multiplicative: true }
            }

            pub fn with_multiplicative_claim(mut self, claim: bool) -> Self {
                self.multiplicative = claim;
                self
            }

            pub fn space(&self) -> &SuperSpace {
                self.bracket.space()
            }

            pub fn bracket(&self) -> &$tensor {
                &self.bracket
            }

            pub fn alpha(&self) -> &GradedMap {
                &self.alpha
            }

            pub fn beta(&self) -> &GradedMap {
                &self.beta
            }

            pub fn claims_multiplicative(&self) -> bool {
                self.multiplicative
            }

            pub fn dim(&self) -> usize {
                self.space().dim()
            }

            /// Same twisting maps, different bracket.
            pub fn with_bracket(&self, bracket: $tensor) -> Result<Self, Error> {
                $ty::new(bracket, self.alpha.clone(), self.beta.clone())
            }
        }
    };
}

algebra_common!(BiHomLieSuperalgebra, StructureTensor2);
algebra_common!(ThreeBiHomLieSuperalgebra, StructureTensor3);

impl BiHomLieSuperalgebra {
    pub fn br(&self, x: &Vector, y: &Vector) -> Vector {
        self.bracket.eval2(x, y)
    }
}

impl ThreeBiHomLieSuperalgebra {
    pub fn br(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.bracket.eval3(x, y, z)
    }
}

/// Images of the basis vectors under `m`.
pub(crate) fn images(m: &GradedMap) -> Vec<Vector> {
    (0..m.space().dim()).map(|i| m.image(i)).collect()
}

/// Evaluate `f` on every basis tuple and every clause, recording residuals.
pub(crate) fn run_check<const N: usize, F>(
    identity: &str,
    dim: usize,
    scan: Scan,
    clauses: &[&str],
    mut f: F,
) -> VerificationReport
where
    F: FnMut(usize, [usize; N]) -> Vector,
{
    let mut report = VerificationReport::new(identity);
    for t in basis_tuples::<N>(dim) {
        for (c, clause) in clauses.iter().enumerate() {
            if !report.record(scan, clause, &t, f(c, t)) {
                report.stop();
                return report;
            }
        }
    }
    report
}

/// Join several reports under one name.
pub(crate) fn combine(identity: &str, parts: impl IntoIterator<Item = VerificationReport>) -> VerificationReport {
    let mut out = VerificationReport::new(identity);
    for p in parts {
        out.absorb(p);
    }
    out
}

/// `a ∘ b = b ∘ a`, checked column by column.
pub(crate) fn commutation_report(a: &GradedMap, b: &GradedMap, identity: &str, scan: Scan) -> VerificationReport {
    let ab = a.compose(b).expect("same space");
    let ba = b.compose(a).expect("same space");
    run_check::<1, _>(identity, a.space().dim(), scan, &["commute"], |_, [i]| ab.image(i).difference(&ba.image(i)))
}

/// `D ∘ α = α ∘ D` and `D ∘ β = β ∘ D`.
pub(crate) fn twist_compatibility(d: &GradedMap, alpha: &GradedMap, beta: &GradedMap, name: &str, scan: Scan) -> VerificationReport {
    let a = commutation_report(d, alpha, &format!("{name}∘alpha = alpha∘{name}"), scan);
    if scan == Scan::FailFast && !a.holds() {
        return a;
    }
    let b = commutation_report(d, beta, &format!("{name}∘beta = beta∘{name}"), scan);
    combine(&format!("{name} commutes with alpha and beta"), [a, b])
}

/// `[β(x), α(y)] = -(-1)^{|x||y|} [β(y), α(x)]`.
pub fn verify_bihom_skewsymmetry(a: &BiHomLieSuperalgebra, scan: Scan) -> VerificationReport {
    let space = a.space();
    let al = images(a.alpha());
    let be = images(a.beta());
    run_check::<2, _>("bihom skew-supersymmetry", a.dim(), scan, &["skew"], |_, [i, j]| {
        let sign = Parity::koszul(space.parity(i), space.parity(j));
        let mut r = a.br(&be[i], &al[j]);
        r.add_assign(&a.br(&be[j], &al[i]).signed(sign));
        r
    })
}

/// Cyclic sum of `(-1)^{|x||z|} [β²(x), [β(y), α(z)]]`.
pub fn verify_bihom_jacobi(a: &BiHomLieSuperalgebra, scan: Scan) -> VerificationReport {
    let space = a.space();
    let al = images(a.alpha());
    let be = images(a.beta());
    let be2 = images(&a.beta().pow(2));
    let p = |i: usize| space.parity(i);
    let term = |x: usize, y: usize, z: usize| {
        a.br(&be2[x], &a.br(&be[y], &al[z])).signed(Parity::koszul(p(x), p(z)))
    };
    run_check::<3, _>("bihom super-Jacobi", a.dim(), scan, &["cyclic sum"], |_, [x, y, z]| {
        let mut r = term(x, y, z);
        r.add_assign(&term(y, z, x));
        r.add_assign(&term(z, x, y));
        r
    })
}

fn morphism_clauses<const N: usize>(
    bracket: &crate::tensor::StructureTensor<N>,
    alpha: &GradedMap,
    beta: &GradedMap,
    scan: Scan,
) -> VerificationReport {
    let dim = bracket.space().dim();
    let mut report = commutation_report(alpha, beta, "alpha∘beta = beta∘alpha", scan);
    if scan == Scan::FailFast && !report.holds() {
        return report;
    }
    for (name, m) in [("alpha", alpha), ("beta", beta)] {
        let im = images(m);
        let part = run_check::<N, _>(&format!("{name} is a morphism"), dim, scan, &["morphism"], |_, t| {
            let lhs = m.apply(&bracket.image(&t)).expect("same space");
            let args: [&Vector; N] = core::array::from_fn(|s| &im[t[s]]);
            lhs.difference(&bracket.eval(args).expect("same space"))
        });
        report.absorb(part);
        if scan == Scan::FailFast && !report.holds() {
            return report;
        }
    }
    report
}

/// `α∘β = β∘α`, `α([x,y]) = [α(x),α(y)]` and the same for β.
pub fn verify_multiplicativity2(a: &BiHomLieSuperalgebra, scan: Scan) -> VerificationReport {
    let mut r = morphism_clauses(a.bracket(), a.alpha(), a.beta(), scan);
    r.identity = "multiplicativity".into();
    r
}

/// Both twisted swap conditions:
/// `[β(x),β(y),α(z)] = -(-1)^{|x||y|}[β(y),β(x),α(z)]` and
/// `[β(x),β(y),α(z)] = -(-1)^{|y||z|}[β(x),β(z),α(y)]`.
pub fn verify_3bihom_skewsymmetry(a: &ThreeBiHomLieSuperalgebra, scan: Scan) -> VerificationReport {
    twisted_skew(a.bracket(), a.alpha(), a.beta(), "3-bihom skew-supersymmetry", scan)
}

pub(crate) fn twisted_skew(
    bracket: &StructureTensor3,
    alpha: &GradedMap,
    beta: &GradedMap,
    identity: &str,
    scan: Scan,
) -> VerificationReport {
    let space = bracket.space();
    let al = images(alpha);
    let be = images(beta);
    let br = |x: &Vector, y: &Vector, z: &Vector| bracket.eval3(x, y, z);
    run_check::<3, _>(identity, space.dim(), scan, &["swap(1,2)", "swap(2,3)"], |c, [i, j, k]| {
        let mut r = br(&be[i], &be[j], &al[k]);
        if c == 0 {
            let sign = Parity::koszul(space.parity(i), space.parity(j));
            r.add_assign(&br(&be[j], &be[i], &al[k]).signed(sign));
        } else {
            let sign = Parity::koszul(space.parity(j), space.parity(k));
            r.add_assign(&br(&be[i], &be[k], &al[j]).signed(sign));
        }
        r
    })
}

/// Shared evaluation of the ternary Jacobi expression with an outer and an
/// inner bracket, over raw basis 5-tuples `(x, y, z, u, v)`:
///
/// `[β²x, β²y, {βz, βu, αv}]`
/// `- (-1)^{(|u|+|v|)(|x|+|y|+|z|)} [β²u, β²v, {βx, βy, αz}]`
/// `+ (-1)^{(|z|+|v|)(|x|+|y|)+|u||v|} [β²z, β²v, {βx, βy, αu}]`
/// `- (-1)^{(|z|+|u|)(|x|+|y|)} [β²z, β²u, {βx, βy, αv}]`
///
/// where `[...]` is the outer and `{...}` the inner bracket.
pub(crate) struct NambuExpression<'a> {
    outer: &'a StructureTensor3,
    inner: Vec<Vector>,
    beta2: Vec<Vector>,
    parities: Vec<Parity>,
    dim: usize,
}

impl<'a> NambuExpression<'a> {
    pub(crate) fn new(outer: &'a StructureTensor3, inner: &StructureTensor3, alpha: &GradedMap, beta: &GradedMap) -> Self {
        let al = images(alpha);
        let be = images(beta);
        let dim = outer.space().dim();
        let inner = basis_tuples::<3>(dim)
            .map(|[z, u, v]| inner.eval3(&be[z], &be[u], &al[v]))
            .collect();
        NambuExpression {
            outer,
            inner,
            beta2: images(&beta.pow(2)),
            parities: outer.space().parities().to_vec(),
            dim,
        }
    }

    fn inner_at(&self, z: usize, u: usize, v: usize) -> &Vector {
        &self.inner[(z * self.dim + u) * self.dim + v]
    }

    fn outer_at(&self, p: usize, q: usize, w: &Vector) -> Vector {
        if w.is_zero() {
            return Vector::zeros(self.dim);
        }
        self.outer.eval3(&self.beta2[p], &self.beta2[q], w)
    }

    pub(crate) fn residual(&self, [x, y, z, u, v]: [usize; 5]) -> Vector {
        let p = &self.parities;
        let xy = p[x] + p[y];
        let mut r = self.outer_at(x, y, self.inner_at(z, u, v));
        let s1 = Parity::koszul(p[u] + p[v], xy + p[z]);
        r.sub_assign(&self.outer_at(u, v, self.inner_at(x, y, z)).signed(s1));
        let s2 = Parity::koszul(p[z] + p[v], xy) + Parity::koszul(p[u], p[v]);
        r.add_assign(&self.outer_at(z, v, self.inner_at(x, y, u)).signed(s2));
        let s3 = Parity::koszul(p[z] + p[u], xy);
        r.sub_assign(&self.outer_at(z, u, self.inner_at(x, y, v)).signed(s3));
        r
    }
}

/// The 3-BiHom-super-Jacobi identity, left side minus right side, on every
/// basis 5-tuple `(x, y, z, u, v)`.
pub fn verify_3bihom_jacobi(a: &ThreeBiHomLieSuperalgebra, scan: Scan) -> VerificationReport {
    let expr = NambuExpression::new(a.bracket(), a.bracket(), a.alpha(), a.beta());
    run_check::<5, _>("3-bihom super-Jacobi", a.dim(), scan, &["lhs - rhs"], |_, t| expr.residual(t))
}

/// `α∘β = β∘α`, `α([x,y,z]) = [αx,αy,αz]` and the same for β.
pub fn verify_multiplicativity3(a: &ThreeBiHomLieSuperalgebra, scan: Scan) -> VerificationReport {
    let mut r = morphism_clauses(a.bracket(), a.alpha(), a.beta(), scan);
    r.identity = "multiplicativity".into();
    r
}

/// Skew-symmetry and Jacobi, the axioms of the nonmultiplicative class.
pub fn verify_bihom_axioms(a: &BiHomLieSuperalgebra, scan: Scan) -> VerificationReport {
    let skew = verify_bihom_skewsymmetry(a, scan);
    if scan == Scan::FailFast && !skew.holds() {
        return combine("BiHom-Lie superalgebra axioms", [skew]);
    }
    combine("BiHom-Lie superalgebra axioms", [skew, verify_bihom_jacobi(a, scan)])
}

/// Skew-symmetry and Jacobi, the axioms of the nonmultiplicative class.
pub fn verify_3bihom_axioms(a: &ThreeBiHomLieSuperalgebra, scan: Scan) -> VerificationReport {
    let skew = verify_3bihom_skewsymmetry(a, scan);
    if scan == Scan::FailFast && !skew.holds() {
        return combine("3-BiHom-Lie superalgebra axioms", [skew]);
    }
    combine("3-BiHom-Lie superalgebra axioms", [skew, verify_3bihom_jacobi(a, scan)])
}

fn morphism_precondition<const N: usize>(
    bracket: &crate::tensor::StructureTensor<N>,
    axioms: VerificationReport,
    alpha: &GradedMap,
    beta: &GradedMap,
) -> Result<(), Error> {
    let mut pre = combine("untwisted input with commuting morphisms", [axioms]);
    pre.absorb(morphism_clauses(bracket, alpha, beta, Scan::Full));
    if pre.holds() {
        Ok(())
    } else {
        Err(Error::precondition(pre))
    }
}

/// `[x,y,z]_{α,β} = [α(x), α(y), β(z)]` for a 3-Lie superalgebra bracket and
/// two commuting even morphisms of it.
pub fn make_twist_3(
    bracket: &StructureTensor3,
    alpha: &GradedMap,
    beta: &GradedMap,
) -> Result<ThreeBiHomLieSuperalgebra, Error> {
    check_twisting(bracket.space(), alpha, beta)?;
    let plain = ThreeBiHomLieSuperalgebra::untwisted(bracket.clone());
    morphism_precondition(bracket, verify_3bihom_axioms(&plain, Scan::Full), alpha, beta)?;
    let twisted = bracket.precompose([alpha, alpha, beta])?;
    Ok(ThreeBiHomLieSuperalgebra::new(twisted, alpha.clone(), beta.clone())?.with_multiplicative_claim(true))
}

/// `[x,y]' = [α(x), β(y)]` for a Lie superalgebra bracket and two commuting
/// even morphisms. The result is verified before it is returned.
pub fn make_yau_twist_2(
    bracket: &StructureTensor2,
    alpha: &GradedMap,
    beta: &GradedMap,
) -> Result<BiHomLieSuperalgebra, Error> {
    check_twisting(bracket.space(), alpha, beta)?;
    let plain = BiHomLieSuperalgebra::untwisted(bracket.clone());
    morphism_precondition(bracket, verify_bihom_axioms(&plain, Scan::Full), alpha, beta)?;
    let twisted = bracket.precompose([alpha, beta])?;
    let out = BiHomLieSuperalgebra::new(twisted, alpha.clone(), beta.clone())?.with_multiplicative_claim(true);
    let mut check = verify_bihom_axioms(&out, Scan::Full);
    check.absorb(verify_multiplicativity2(&out, Scan::Full));
    if check.holds() {
        Ok(out)
    } else {
        Err(Error::precondition(check))
    }
}
