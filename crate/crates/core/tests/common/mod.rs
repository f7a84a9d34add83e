//! Independent dense oracles. Everything here works on plain `BigRational`
//! arrays read out of the library types and re-derives the identities from
//! their written form, sharing no evaluation code with the crate.
#![allow(dead_code)]

use bihom_core::{BiHomLieSuperalgebra, GradedMap, LinearForm, Scalar, ThreeBiHomLieSuperalgebra, Vector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;
pub type V = Vec<Q>;
pub type M = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn sign(bits: u8) -> Q {
    if bits % 2 == 1 { -Q::one() } else { Q::one() }
}

pub fn unit(n: usize, i: usize) -> V {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

pub fn add(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Q, a: &V) -> V {
    a.iter().map(|x| c * x).collect()
}

pub fn is_zero(a: &V) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn mat(m: &GradedMap) -> M {
    let mm = m.matrix();
    (0..mm.rows()).map(|i| mm.row(i).iter().map(|s| s.as_rational().clone()).collect()).collect()
}

pub fn apply(m: &M, v: &V) -> V {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn mul(a: &M, b: &M) -> M {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

pub fn ident(n: usize) -> M {
    (0..n).map(|i| unit(n, i)).collect()
}

pub fn mpow(m: &M, k: u32) -> M {
    let mut out = ident(m.len());
    for _ in 0..k {
        out = mul(&out, m);
    }
    out
}

pub fn to_v(v: &Vector) -> V {
    v.iter().map(|s| s.as_rational().clone()).collect()
}

pub fn form(t: &LinearForm) -> V {
    t.coefficients().iter().map(|s| s.as_rational().clone()).collect()
}

pub fn dot(a: &V, b: &V) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dense copy of an algebra: `t[i][j][k]` etc. are output vectors.
#[derive(Clone)]
pub struct Dense {
    pub n: usize,
    pub par: Vec<u8>,
    pub b2: Vec<V>,
    pub b3: Vec<V>,
    pub alpha: M,
    pub beta: M,
}

impl Dense {
    pub fn binary(a: &BiHomLieSuperalgebra) -> Self {
        let n = a.dim();
        let mut b2 = vec![vec![Q::zero(); n]; n * n];
        for ([i, j], k, c) in a.bracket().entries() {
            b2[i * n + j][k] += c.as_rational();
        }
        Dense { n, par: parities(a.space()), b2, b3: Vec::new(), alpha: mat(a.alpha()), beta: mat(a.beta()) }
    }

    pub fn ternary(a: &ThreeBiHomLieSuperalgebra) -> Self {
        let n = a.dim();
        let mut b3 = vec![vec![Q::zero(); n]; n * n * n];
        for ([i, j, k], l, c) in a.bracket().entries() {
            b3[(i * n + j) * n + k][l] += c.as_rational();
        }
        Dense { n, par: parities(a.space()), b2: Vec::new(), b3, alpha: mat(a.alpha()), beta: mat(a.beta()) }
    }

    pub fn br2(&self, x: &V, y: &V) -> V {
        let n = self.n;
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                out = add(&out, &scale(&c, &self.b2[i * n + j]));
            }
        }
        out
    }

    pub fn br3(&self, x: &V, y: &V, z: &V) -> V {
        br3_with(&self.b3, self.n, x, y, z)
    }

    pub fn e(&self, i: usize) -> V {
        unit(self.n, i)
    }
}

pub fn br3_with(t: &[V], n: usize, x: &V, y: &V, z: &V) -> V {
    let mut out = vec![Q::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            for k in 0..n {
                if z[k].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j] * &z[k];
                out = add(&out, &scale(&c, &t[(i * n + j) * n + k]));
            }
        }
    }
    out
}

pub fn parities(s: &bihom_core::SuperSpace) -> Vec<u8> {
    s.parities().iter().map(|p| p.bit()).collect()
}

/// Tuples violating `[βx,αy] = -(-1)^{|x||y|}[βy,αx]`.
pub fn skew2_bad(d: &Dense) -> usize {
    let mut bad = 0;
    for i in 0..d.n {
        for j in 0..d.n {
            let l = d.br2(&apply(&d.beta, &d.e(i)), &apply(&d.alpha, &d.e(j)));
            let r = d.br2(&apply(&d.beta, &d.e(j)), &apply(&d.alpha, &d.e(i)));
            if !is_zero(&add(&l, &scale(&sign(d.par[i] * d.par[j]), &r))) {
                bad += 1;
            }
        }
    }
    bad
}

/// Tuples violating the cyclic BiHom super-Jacobi identity.
pub fn jacobi2_bad(d: &Dense) -> usize {
    let b2 = mul(&d.beta, &d.beta);
    let mut bad = 0;
    for x in 0..d.n {
        for y in 0..d.n {
            for z in 0..d.n {
                let mut s = vec![Q::zero(); d.n];
                for (u, v, w) in [(x, y, z), (y, z, x), (z, x, y)] {
                    let inner = d.br2(&apply(&d.beta, &d.e(v)), &apply(&d.alpha, &d.e(w)));
                    let t = d.br2(&apply(&b2, &d.e(u)), &inner);
                    s = add(&s, &scale(&sign(d.par[u] * d.par[w]), &t));
                }
                if !is_zero(&s) {
                    bad += 1;
                }
            }
        }
    }
    bad
}

/// Tuples violating either ternary swap condition (second one with `|y||z|`).
pub fn skew3_bad(n: usize, par: &[u8], t: &[V], alpha: &M, beta: &M) -> usize {
    let mut bad = 0;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (bx, by, bz) = (apply(beta, &unit(n, x)), apply(beta, &unit(n, y)), apply(beta, &unit(n, z)));
                let (ay, az) = (apply(alpha, &unit(n, y)), apply(alpha, &unit(n, z)));
                let base = br3_with(t, n, &bx, &by, &az);
                let r1 = add(&base, &scale(&sign(par[x] * par[y]), &br3_with(t, n, &by, &bx, &az)));
                let r2 = add(&base, &scale(&sign(par[y] * par[z]), &br3_with(t, n, &bx, &bz, &ay)));
                if !is_zero(&r1) || !is_zero(&r2) {
                    bad += 1;
                }
            }
        }
    }
    bad
}

/// Tuples violating the 3-BiHom super-Jacobi identity as written.
pub fn jacobi3_bad(n: usize, par: &[u8], t: &[V], alpha: &M, beta: &M) -> usize {
    let b2 = mul(beta, beta);
    let e = |i: usize| unit(n, i);
    let inner = |x: usize, y: usize, z: usize| br3_with(t, n, &apply(beta, &e(x)), &apply(beta, &e(y)), &apply(alpha, &e(z)));
    let outer = |a: usize, b: usize, w: &V| br3_with(t, n, &apply(&b2, &e(a)), &apply(&b2, &e(b)), w);
    let mut bad = 0;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for u in 0..n {
                    for v in 0..n {
                        let p = |i: usize| par[i];
                        let lhs = outer(x, y, &inner(z, u, v));
                        let mut rhs = scale(&sign((p(u) + p(v)) * (p(x) + p(y) + p(z))), &outer(u, v, &inner(x, y, z)));
                        rhs = sub(&rhs, &scale(&sign((p(z) + p(v)) * (p(x) + p(y)) + p(u) * p(v)), &outer(z, v, &inner(x, y, u))));
                        rhs = add(&rhs, &scale(&sign((p(z) + p(u)) * (p(x) + p(y))), &outer(z, u, &inner(x, y, v))));
                        if !is_zero(&sub(&lhs, &rhs)) {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    bad
}

/// The cyclic reformulation: `(-1)^{|z||v|} ↻_{u,v,z} (-1)^γ [β²u,β²v,[βx,βy,αz]]`
/// with `γ = (|u|+|v|)(|x|+|y|) + |z||u|`.
pub fn cyclic_bad(n: usize, par: &[u8], t: &[V], alpha: &M, beta: &M) -> usize {
    let b2 = mul(beta, beta);
    let e = |i: usize| unit(n, i);
    let inner = |x: usize, y: usize, z: usize| br3_with(t, n, &apply(beta, &e(x)), &apply(beta, &e(y)), &apply(alpha, &e(z)));
    let outer = |a: usize, b: usize, w: &V| br3_with(t, n, &apply(&b2, &e(a)), &apply(&b2, &e(b)), w);
    let mut bad = 0;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for u in 0..n {
                    for v in 0..n {
                        let p = |i: usize| par[i];
                        let lhs = outer(x, y, &inner(z, u, v));
                        let mut rhs = vec![Q::zero(); n];
                        for (uu, vv, zz) in [(u, v, z), (v, z, u), (z, u, v)] {
                            let g = (p(uu) + p(vv)) * (p(x) + p(y)) + p(zz) * p(uu);
                            rhs = add(&rhs, &scale(&sign(g), &outer(uu, vv, &inner(x, y, zz))));
                        }
                        rhs = scale(&sign(p(z) * p(v)), &rhs);
                        if !is_zero(&sub(&lhs, &rhs)) {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    bad
}

/// `[x1,x2,x3]_τ` expanded term by term on the basis.
pub fn oracle_induce(d: &Dense, tau: &V) -> Vec<V> {
    let n = d.n;
    let mut out = vec![vec![Q::zero(); n]; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (p1, p2, p3) = (d.par[i], d.par[j], d.par[k]);
                let mut v = scale(&tau[i], &d.br2(&d.e(j), &d.e(k)));
                v = sub(&v, &scale(&(sign(p1 * p2) * &tau[j]), &d.br2(&d.e(i), &d.e(k))));
                v = add(&v, &scale(&(sign(p3 * (p1 + p2)) * &tau[k]), &d.br2(&d.e(i), &d.e(j))));
                out[(i * n + j) * n + k] = v;
            }
        }
    }
    out
}

/// `[Rx,Ry,Rz] = R(Σ_{∅≠I} λ^{|I|-1}[..])`, expanded by hand.
pub fn rb3_holds(n: usize, t: &[V], r: &M, lam: &Q) -> bool {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                let (rx, ry, rz) = (apply(r, &x), apply(r, &y), apply(r, &z));
                let b = |a: &V, b: &V, c: &V| br3_with(t, n, a, b, c);
                let mut s = add(&add(&b(&rx, &ry, &z), &b(&rx, &y, &rz)), &b(&x, &ry, &rz));
                let ones = add(&add(&b(&rx, &y, &z), &b(&x, &ry, &z)), &b(&x, &y, &rz));
                s = add(&s, &scale(lam, &ones));
                s = add(&s, &scale(&(lam * lam), &b(&x, &y, &z)));
                if !is_zero(&sub(&b(&rx, &ry, &rz), &apply(r, &s))) {
                    return false;
                }
            }
        }
    }
    true
}

/// `[Nx,Ny,Nz] = N[..]^2_N` through the closed form
/// `NΣ_{two N} - N²Σ_{one N} + N³[x,y,z]`.
pub fn nijenhuis3_holds(n: usize, t: &[V], nm: &M) -> bool {
    let n2 = mul(nm, nm);
    let n3 = mul(&n2, nm);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                let (nx, ny, nz) = (apply(nm, &x), apply(nm, &y), apply(nm, &z));
                let b = |a: &V, b: &V, c: &V| br3_with(t, n, a, b, c);
                let two = add(&add(&b(&nx, &ny, &z), &b(&nx, &y, &nz)), &b(&x, &ny, &nz));
                let one = add(&add(&b(&nx, &y, &z), &b(&x, &ny, &z)), &b(&x, &y, &nz));
                let rhs = add(&sub(&apply(nm, &two), &apply(&n2, &one)), &apply(&n3, &b(&x, &y, &z)));
                if !is_zero(&sub(&b(&nx, &ny, &nz), &rhs)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Rank through fraction-free (Bareiss) elimination on integer rows.
pub fn bareiss_rank(rows: &[V]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
            r.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            for j in c + 1..cols {
                let v = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Dense constraint matrix for `(α^s,β^r)`-derivations of a ternary algebra:
/// one unknown per matrix entry, parity rows force the wrong-parity entries to zero.
pub fn derivation_nullity3(d: &Dense, s: u32, r: u32, parity: u8) -> usize {
    let n = d.n;
    let tw = mul(&mpow(&d.alpha, s), &mpow(&d.beta, r));
    let mut columns: Vec<V> = Vec::new();
    for u in 0..n {
        for v in 0..n {
            // D = E_{uv}: D(e_v) = e_u
            let dm: M = (0..n).map(|a| (0..n).map(|b| if a == u && b == v { Q::one() } else { Q::zero() }).collect()).collect();
            let mut col = Vec::new();
            for w in 0..n * n {
                let own = w == u * n + v && (d.par[u] + d.par[v]) % 2 != parity;
                col.push(if own { Q::one() } else { Q::zero() });
            }
            for (m1, m2) in [(&dm, &d.alpha), (&dm, &d.beta)] {
                let c = mul(m1, m2);
                let c2 = mul(m2, m1);
                for a in 0..n {
                    for b in 0..n {
                        col.push(&c[a][b] - &c2[a][b]);
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (x, y, z) = (d.e(i), d.e(j), d.e(k));
                        let lhs = apply(&dm, &d.br3(&x, &y, &z));
                        let mut rhs = d.br3(&apply(&dm, &x), &apply(&tw, &y), &apply(&tw, &z));
                        rhs = add(&rhs, &scale(&sign(d.par[i] * parity), &d.br3(&apply(&tw, &x), &apply(&dm, &y), &apply(&tw, &z))));
                        rhs = add(
                            &rhs,
                            &scale(&sign(parity * (d.par[i] + d.par[j])), &d.br3(&apply(&tw, &x), &apply(&tw, &y), &apply(&dm, &z))),
                        );
                        col.extend(sub(&lhs, &rhs));
                    }
                }
            }
            columns.push(col);
        }
    }
    let rows: Vec<V> = (0..columns[0].len()).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    n * n - bareiss_rank(&rows)
}

/// Same for a binary algebra.
pub fn derivation_nullity2(d: &Dense, s: u32, r: u32, parity: u8) -> usize {
    let n = d.n;
    let tw = mul(&mpow(&d.alpha, s), &mpow(&d.beta, r));
    let mut columns: Vec<V> = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let dm: M = (0..n).map(|a| (0..n).map(|b| if a == u && b == v { Q::one() } else { Q::zero() }).collect()).collect();
            let mut col = Vec::new();
            for w in 0..n * n {
                let own = w == u * n + v && (d.par[u] + d.par[v]) % 2 != parity;
                col.push(if own { Q::one() } else { Q::zero() });
            }
            for m2 in [&d.alpha, &d.beta] {
                let c = mul(&dm, m2);
                let c2 = mul(m2, &dm);
                for a in 0..n {
                    for b in 0..n {
                        col.push(&c[a][b] - &c2[a][b]);
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let (x, y) = (d.e(i), d.e(j));
                    let lhs = apply(&dm, &d.br2(&x, &y));
                    let mut rhs = d.br2(&apply(&dm, &x), &apply(&tw, &y));
                    rhs = add(&rhs, &scale(&sign(d.par[i] * parity), &d.br2(&apply(&tw, &x), &apply(&dm, &y))));
                    col.extend(sub(&lhs, &rhs));
                }
            }
            columns.push(col);
        }
    }
    let rows: Vec<V> = (0..columns[0].len()).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    n * n - bareiss_rank(&rows)
}

pub fn scalar(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

/// Candidate τ for `a`: the annihilator basis, pairwise sums and small
/// multiples, kept when all three τ conditions hold.
pub fn valid_taus(a: &BiHomLieSuperalgebra) -> Vec<LinearForm> {
    use bihom_core::tau::{bracket_annihilators, check_tau_conditions};
    let basis = bracket_annihilators(a);
    let mut cands: Vec<LinearForm> = Vec::new();
    for (i, f) in basis.iter().enumerate() {
        cands.push(f.clone());
        cands.push(f.scaled(&Scalar::from_integer(-2)));
        for g in &basis[i + 1..] {
            let sum: Vec<Scalar> = f.coefficients().iter().zip(g.coefficients()).map(|(x, y)| x.clone() + y.clone()).collect();
            cands.push(LinearForm::new(a.space().clone(), sum).unwrap());
        }
    }
    let mut out: Vec<LinearForm> = Vec::new();
    for c in cands {
        if c.is_zero() || out.contains(&c) {
            continue;
        }
        if check_tau_conditions(a, &c, bihom_core::Scan::Full).unwrap().holds() {
            out.push(c);
        }
    }
    out
}

fn half() -> Scalar {
    Scalar::ratio(1, 2)
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&n| Scalar::from_integer(n)).collect()
}

/// Non-scalar diagonal maps with entries from `values` accepted by `keep`,
/// at most `limit` of them.
pub fn diagonal_search(space: &bihom_core::SuperSpace, values: &[Scalar], limit: usize, mut keep: impl FnMut(&GradedMap) -> bool) -> Vec<GradedMap> {
    let n = space.dim();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let entries: Vec<Scalar> = idx.iter().map(|&i| values[i].clone()).collect();
        if entries.iter().any(|e| e != &entries[0]) {
            let m = GradedMap::diagonal(space, &entries);
            if keep(&m) {
                out.push(m);
                if out.len() == limit {
                    return out;
                }
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Diagonal Rota-Baxter operators of weight `lam`.
pub fn diagonal_rb(a: &ThreeBiHomLieSuperalgebra, lam: &Scalar, values: &[Scalar], limit: usize) -> Vec<GradedMap> {
    use bihom_core::rota_baxter::{is_rb3, RotaBaxterOperator};
    diagonal_search(a.space(), values, limit, |m| {
        let rb = RotaBaxterOperator::new(m.clone(), lam.clone()).unwrap();
        is_rb3(a, &rb, bihom_core::Scan::FailFast).map(|r| r.holds()).unwrap_or(false)
    })
}

/// Diagonal Nijenhuis operators of a ternary algebra.
pub fn diagonal_nijenhuis3(a: &ThreeBiHomLieSuperalgebra, values: &[Scalar], limit: usize) -> Vec<GradedMap> {
    diagonal_search(a.space(), values, limit, |m| {
        bihom_core::nijenhuis::is_nijenhuis_3(a, m, bihom_core::Scan::FailFast).map(|r| r.holds()).unwrap_or(false)
    })
}

/// Diagonal Nijenhuis operators of a binary algebra.
pub fn diagonal_nijenhuis2(a: &BiHomLieSuperalgebra, values: &[Scalar], limit: usize) -> Vec<GradedMap> {
    diagonal_search(a.space(), values, limit, |m| {
        bihom_core::nijenhuis::is_nijenhuis_2(a, m, bihom_core::Scan::FailFast).map(|r| r.holds()).unwrap_or(false)
    })
}

pub fn small_values() -> Vec<Scalar> {
    vec![Scalar::zero(), Scalar::one(), -Scalar::one(), Scalar::from_integer(2), half()]
}

/// Ternary `(A, R, λ)` with `R` Rota-Baxter of weight λ.
pub fn ternary_rb_fixtures() -> Vec<(String, ThreeBiHomLieSuperalgebra, bihom_core::rota_baxter::RotaBaxterOperator)> {
    use bihom_core::fixtures::*;
    use bihom_core::rota_baxter::RotaBaxterOperator;
    let values = [Scalar::zero(), Scalar::one(), -Scalar::one(), Scalar::from_integer(2), half(), -half()];
    let weights = [Scalar::zero(), Scalar::one(), -Scalar::one(), half()];
    let mut out = Vec::new();
    for (name, a) in [("a4", a4()), ("a4-twisted", a4_twisted()), ("nilpotent", nilpotent_ternary()), ("ternary-dim3", ternary_dim3())] {
        for lam in &weights {
            for m in diagonal_rb(&a, lam, &values, 2) {
                out.push((format!("{name} diag λ={lam}"), a.clone(), RotaBaxterOperator::new(m, lam.clone()).unwrap()));
            }
        }
    }
    let sum = ternary_dim3_plus_line();
    let p = bihom_core::fixtures::diag_ints(sum.space(), &[1, 1, 1, 0]);
    for lam in &weights[1..] {
        let r = p.scaled(&-lam.clone());
        out.push((format!("ternary-dim3+line projection λ={lam}"), sum.clone(), RotaBaxterOperator::new(r, lam.clone()).unwrap()));
    }
    for (name, a) in [("odd-nilpotent", odd_nilpotent_ternary()), ("a4-rotated", a4_rotated())] {
        for lam in &weights {
            let r = GradedMap::scalar(a.space(), -lam.clone());
            out.push((format!("{name} -λ·Id λ={lam}"), a.clone(), RotaBaxterOperator::new(r, lam.clone()).unwrap()));
        }
    }
    out
}

/// Invertible even maps for the weight-0 / inverse-derivation equivalence.
pub fn invertible_fixtures() -> Vec<(String, ThreeBiHomLieSuperalgebra, GradedMap)> {
    use bihom_core::fixtures::*;
    use bihom_core::Matrix;
    let mut out = Vec::new();
    let z = zero_ternary(&bihom_core::SuperSpace::from_bits(&[0, 1]));
    out.push(("zero-1|1 diag(2,-3)".into(), z.clone(), diag_ints(z.space(), &[2, -3])));
    let z2 = zero_ternary(&bihom_core::SuperSpace::even(2));
    let m = GradedMap::even(z2.space().clone(), Matrix::from_int_rows(&[&[1, 2], &[3, 4]])).unwrap();
    out.push(("zero-2|0 dense".into(), z2, m));
    for (name, a) in [("a4", a4()), ("nilpotent", nilpotent_ternary()), ("odd-cube", odd_cube()), ("ternary-dim3", ternary_dim3())] {
        out.push((format!("{name} Id"), a.clone(), GradedMap::identity(a.space())));
        out.push((format!("{name} 3·Id"), a.clone(), GradedMap::scalar(a.space(), Scalar::from_integer(3))));
    }
    let nl = nilpotent_ternary();
    let third = Scalar::ratio(1, 3);
    let mut e = ints(&[1, 1, 1]);
    e.push(third.clone());
    out.push(("nilpotent diag(1,1,1,1/3)".into(), nl.clone(), GradedMap::diagonal(nl.space(), &e)));
    let e = vec![Scalar::one(), half(), third, Scalar::ratio(1, 6)];
    out.push(("nilpotent diag(1,1/2,1/3,1/6)".into(), nl.clone(), GradedMap::diagonal(nl.space(), &e)));
    let cube = odd_cube();
    out.push(("odd-cube diag(1,1/3)".into(), cube.clone(), GradedMap::diagonal(cube.space(), &[Scalar::one(), Scalar::ratio(1, 3)])));
    let t = ternary_dim3();
    // D = diag(1,-1,1) is a derivation of [e1,e2,e3] = e3
    out.push(("ternary-dim3 diag(1,-1,1)".into(), t.clone(), diag_ints(t.space(), &[1, -1, 1])));
    out
}

/// Binary `(A, τ, R)` for the kernel criterion; both verdicts occur.
pub fn kernel_fixtures() -> Vec<(String, BiHomLieSuperalgebra, LinearForm, bihom_core::rota_baxter::RotaBaxterOperator)> {
    use bihom_core::fixtures::*;
    use bihom_core::rota_baxter::RotaBaxterOperator;
    let form = |a: &BiHomLieSuperalgebra, c: &[i64]| LinearForm::from_ints(a.space().clone(), c).unwrap();
    let rb = |m: GradedMap, lam: Scalar| RotaBaxterOperator::new(m, lam).unwrap();
    let mut out = Vec::new();
    let h = heisenberg_plus_line();
    let r = GradedMap::diagonal(h.space(), &[Scalar::one(), Scalar::one(), half(), Scalar::one()]);
    out.push(("heisenberg+line e4*, inverse grading".into(), h.clone(), form(&h, &[0, 0, 0, 1]), rb(r.clone(), Scalar::zero())));
    out.push(("heisenberg+line e1*, inverse grading".into(), h.clone(), form(&h, &[1, 0, 0, 0]), rb(r.clone(), Scalar::zero())));
    out.push(("heisenberg+line e1*+e4*, inverse grading".into(), h.clone(), form(&h, &[1, 0, 0, 1]), rb(r, Scalar::zero())));
    out.push(("heisenberg+line tau=0".into(), h.clone(), form(&h, &[0, 0, 0, 0]), rb(GradedMap::scalar(h.space(), Scalar::from_integer(2)), Scalar::from_integer(-2))));
    out.push(("heisenberg+line -Id weight 1".into(), h.clone(), form(&h, &[0, 0, 0, 1]), rb(GradedMap::scalar(h.space(), -Scalar::one()), Scalar::one())));
    let sh = super_heisenberg_plus_line();
    let r = GradedMap::diagonal(sh.space(), &[half(), Scalar::one(), Scalar::one(), Scalar::one()]);
    out.push(("super-heisenberg+line e4*, inverse grading".into(), sh.clone(), form(&sh, &[0, 0, 0, 1]), rb(r, Scalar::zero())));
    out.push(("super-heisenberg+line R=0".into(), sh.clone(), form(&sh, &[0, 0, 0, 1]), rb(GradedMap::zero(sh.space(), bihom_core::Parity::Even), Scalar::zero())));
    let ap = affine_pair();
    let p = diag_ints(ap.space(), &[1, 1, 0, 0]);
    for lam in [-Scalar::one(), Scalar::one(), half()] {
        out.push((format!("affine-pair projection λ={lam}"), ap.clone(), form(&ap, &[1, 0, 2, 0]), rb(p.scaled(&-lam.clone()), lam)));
    }
    let apy = affine_pair_yau();
    out.push(("affine-pair-yau projection".into(), apy.clone(), form(&apy, &[1, 0, 1, 0]), rb(p.scaled(&-Scalar::one()), Scalar::one())));
    let ao = affine_odd_center();
    let p = diag_ints(ao.space(), &[1, 1, 0]);
    out.push(("affine-odd-center projection λ=1".into(), ao.clone(), form(&ao, &[1, 0, 0]), rb(p.scaled(&-Scalar::one()), Scalar::one())));
    out
}

pub fn affine_pair_yau() -> BiHomLieSuperalgebra {
    bihom_core::fixtures::binary_catalog().into_iter().find(|(n, _)| *n == "affine-pair-yau").unwrap().1
}

/// A seeded even map with small integer entries, not necessarily compatible
/// with anything.
pub fn random_even_map(space: &bihom_core::SuperSpace, rng: &mut impl rand::Rng) -> GradedMap {
    let n = space.dim();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if space.parity(i) == space.parity(j) {
                        Scalar::from_integer(rng.gen_range(-3..=3))
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    GradedMap::even(space.clone(), bihom_core::Matrix::from_rows(rows).unwrap()).unwrap()
}

/// `(A, N)` with `N` Nijenhuis: scalar multiples of the identity everywhere
/// plus diagonal ones found by search.
pub fn nijenhuis_fixtures() -> Vec<(String, ThreeBiHomLieSuperalgebra, GradedMap)> {
    use bihom_core::fixtures::*;
    let mut out = Vec::new();
    for (name, a) in ternary_catalog() {
        for c in [0, 1, -2] {
            out.push((format!("{name} {c}·Id"), a.clone(), GradedMap::scalar(a.space(), Scalar::from_integer(c))));
        }
        for m in diagonal_nijenhuis3(&a, &small_values(), 3) {
            out.push((format!("{name} diagonal"), a.clone(), m));
        }
    }
    let nl = nilpotent_ternary();
    out.push(("nilpotent diag(2,5,7,2)".into(), nl.clone(), diag_ints(nl.space(), &[2, 5, 7, 2])));
    out
}
