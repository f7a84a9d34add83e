//! Small named algebras used by tests, examples and the command-line corpus.
//!
//! Tables are written with 1-based indices, `(i, j, k, c)` meaning
//! `[e_i, e_j] = c e_k`. The remaining entries are filled in by super
//! skew-symmetry, so every table lists each unordered pair once.

use alloc::vec::Vec;

use crate::algebra::{make_twist_3, make_yau_twist_2, BiHomLieSuperalgebra, ThreeBiHomLieSuperalgebra};
use crate::map::GradedMap;
use crate::scalar::{Parity, Scalar};
use crate::space::SuperSpace;
use crate::tensor::{StructureTensor2, StructureTensor3};

fn q(n: i64) -> Scalar {
    Scalar::from_integer(n)
}

/// Builds a binary tensor from one entry per unordered pair, adding the
/// swapped entry with sign `-(-1)^{|x||y|}`.
pub fn skew_binary(space: &SuperSpace, table: &[(usize, usize, usize, Scalar)]) -> StructureTensor2 {
    let mut entries = Vec::new();
    for (i, j, k, c) in table {
        let (i, j, k) = (i - 1, j - 1, k - 1);
        entries.push(([i, j], k, c.clone()));
        let sign = Parity::koszul(space.parity(i), space.parity(j)) + Parity::Odd;
        if i != j {
            let swapped = if sign.is_odd() { -c.clone() } else { c.clone() };
            entries.push(([j, i], k, swapped));
        }
    }
    StructureTensor2::from_entries(space, entries).expect("fixture table is parity-consistent")
}

/// Builds a ternary tensor from one entry per unordered triple, filling the
/// other orderings by super skew-symmetry.
pub fn skew_ternary(space: &SuperSpace, table: &[(usize, usize, usize, usize, Scalar)]) -> StructureTensor3 {
    let mut entries: Vec<([usize; 3], usize, Scalar)> = Vec::new();
    for (i, j, k, l, c) in table {
        let base = [i - 1, j - 1, k - 1];
        let mut seen: Vec<[usize; 3]> = Vec::new();
        for perm in [[0, 1, 2], [1, 0, 2], [0, 2, 1], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let slots = [base[perm[0]], base[perm[1]], base[perm[2]]];
            if seen.contains(&slots) {
                continue;
            }
            seen.push(slots);
            // bubble the permutation back to the identity, one adjacent swap at a time
            let mut order = perm;
            let mut sign = Parity::Even;
            for _ in 0..3 {
                for s in 0..2 {
                    if order[s] > order[s + 1] {
                        sign = sign
                            + Parity::Odd
                            + Parity::koszul(space.parity(base[order[s]]), space.parity(base[order[s + 1]]));
                        order.swap(s, s + 1);
                    }
                }
            }
            let value = if sign.is_odd() { -c.clone() } else { c.clone() };
            entries.push((slots, l - 1, value));
        }
    }
    StructureTensor3::from_entries(space, entries).expect("fixture table is parity-consistent")
}

pub fn diag(space: &SuperSpace, entries: &[Scalar]) -> GradedMap {
    GradedMap::diagonal(space, entries)
}

pub fn diag_ints(space: &SuperSpace, entries: &[i64]) -> GradedMap {
    let e: Vec<Scalar> = entries.iter().map(|&n| q(n)).collect();
    GradedMap::diagonal(space, &e)
}

/// Even, `[e1,e2] = e2`.
pub fn affine_line() -> BiHomLieSuperalgebra {
    let space = SuperSpace::even(2);
    BiHomLieSuperalgebra::untwisted(skew_binary(&space, &[(1, 2, 2, q(1))]))
}

/// `[e1,e2] = e2` with `e1, e2` even and `e3` odd and central.
pub fn affine_odd_center() -> BiHomLieSuperalgebra {
    let space = SuperSpace::from_bits(&[0, 0, 1]);
    BiHomLieSuperalgebra::untwisted(skew_binary(&space, &[(1, 2, 2, q(1))]))
}

/// `e1` even, `e2` odd, `[e2,e2] = e1`.
pub fn odd_square() -> BiHomLieSuperalgebra {
    let space = SuperSpace::from_bits(&[0, 1]);
    BiHomLieSuperalgebra::untwisted(skew_binary(&space, &[(2, 2, 1, q(1))]))
}

/// `[e1,e2] = e2`, `[e1,e3] = e3/2`, `[e3,e3] = e2` with `e3` odd.
pub fn s3() -> BiHomLieSuperalgebra {
    let space = SuperSpace::from_bits(&[0, 0, 1]);
    BiHomLieSuperalgebra::untwisted(skew_binary(
        &space,
        &[(1, 2, 2, q(1)), (1, 3, 3, Scalar::ratio(1, 2)), (3, 3, 2, q(1))],
    ))
}

/// gl(1|1) on `E11, E22` (even), `E12, E21` (odd).
pub fn gl11() -> BiHomLieSuperalgebra {
    let space = SuperSpace::from_bits(&[0, 0, 1, 1]);
    let t = StructureTensor2::from_entries(
        &space,
        [
            ([0, 2], 2, q(1)),
            ([2, 0], 2, q(-1)),
            ([0, 3], 3, q(-1)),
            ([3, 0], 3, q(1)),
            ([1, 2], 2, q(-1)),
            ([2, 1], 2, q(1)),
            ([1, 3], 3, q(1)),
            ([3, 1], 3, q(-1)),
            ([2, 3], 0, q(1)),
            ([2, 3], 1, q(1)),
            ([3, 2], 0, q(1)),
            ([3, 2], 1, q(1)),
        ],
    )
    .expect("gl(1|1) table");
    BiHomLieSuperalgebra::untwisted(t)
}

/// `e1` even, `e2, e3` odd, `[e2,e3] = e1`.
pub fn super_heisenberg() -> BiHomLieSuperalgebra {
    let space = SuperSpace::from_bits(&[0, 1, 1]);
    BiHomLieSuperalgebra::untwisted(skew_binary(&space, &[(2, 3, 1, q(1))]))
}

/// Even, `[e1,e2] = e3`.
pub fn heisenberg() -> BiHomLieSuperalgebra {
    let space = SuperSpace::even(3);
    BiHomLieSuperalgebra::untwisted(skew_binary(&space, &[(1, 2, 3, q(1))]))
}

/// Heisenberg plus a central even `e4`.
pub fn heisenberg_plus_line() -> BiHomLieSuperalgebra {
    let space = SuperSpace::even(4);
    BiHomLieSuperalgebra::untwisted(skew_binary(&space, &[(1, 2, 3, q(1))]))
}

/// Super Heisenberg plus a central even `e4`.
pub fn super_heisenberg_plus_line() -> BiHomLieSuperalgebra {
    let space = SuperSpace::from_bits(&[0, 1, 1, 0]);
    BiHomLieSuperalgebra::untwisted(skew_binary(&space, &[(2, 3, 1, q(1))]))
}

/// sl(2) on `h, e, f`.
pub fn sl2() -> BiHomLieSuperalgebra {
    let space = SuperSpace::even(3);
    BiHomLieSuperalgebra::untwisted(skew_binary(&space, &[(1, 2, 2, q(2)), (1, 3, 3, q(-2)), (2, 3, 1, q(1))]))
}

/// Two copies of [`affine_line`], on `e1, e2` and `e3, e4`.
pub fn affine_pair() -> BiHomLieSuperalgebra {
    let space = SuperSpace::even(4);
    BiHomLieSuperalgebra::untwisted(skew_binary(&space, &[(1, 2, 2, q(1)), (3, 4, 4, q(1))]))
}

/// `e1` even acting on odd `e2, e3` with weights `1, -1`; `[e2,e3] = 0`.
pub fn odd_plane_action() -> BiHomLieSuperalgebra {
    let space = SuperSpace::from_bits(&[0, 1, 1]);
    BiHomLieSuperalgebra::untwisted(skew_binary(&space, &[(1, 2, 2, q(1)), (1, 3, 3, q(-1))]))
}

pub fn zero_binary(space: &SuperSpace) -> BiHomLieSuperalgebra {
    BiHomLieSuperalgebra::untwisted(StructureTensor2::zero(space))
}

pub fn zero_ternary(space: &SuperSpace) -> ThreeBiHomLieSuperalgebra {
    ThreeBiHomLieSuperalgebra::untwisted(StructureTensor3::zero(space))
}

/// The simple 4-dimensional 3-Lie algebra: `[e_i,e_j,e_k] = sgn(i,j,k,l) e_l`.
pub fn a4() -> ThreeBiHomLieSuperalgebra {
    let space = SuperSpace::even(4);
    ThreeBiHomLieSuperalgebra::untwisted(skew_ternary(
        &space,
        &[(1, 2, 3, 4, q(1)), (1, 2, 4, 3, q(-1)), (1, 3, 4, 2, q(1)), (2, 3, 4, 1, q(-1))],
    ))
}

/// Even, `[e1,e2,e3] = e3`.
pub fn ternary_dim3() -> ThreeBiHomLieSuperalgebra {
    let space = SuperSpace::even(3);
    ThreeBiHomLieSuperalgebra::untwisted(skew_ternary(&space, &[(1, 2, 3, 3, q(1))]))
}

/// Even, `[e1,e2,e3] = e4`.
pub fn nilpotent_ternary() -> ThreeBiHomLieSuperalgebra {
    let space = SuperSpace::even(4);
    ThreeBiHomLieSuperalgebra::untwisted(skew_ternary(&space, &[(1, 2, 3, 4, q(1))]))
}

/// `e1, e2` even, `e3` odd, `[e1,e3,e3] = e2`.
pub fn odd_nilpotent_ternary() -> ThreeBiHomLieSuperalgebra {
    let space = SuperSpace::from_bits(&[0, 0, 1]);
    ThreeBiHomLieSuperalgebra::untwisted(skew_ternary(&space, &[(1, 3, 3, 2, q(1))]))
}

/// [`ternary_dim3`] on `e1, e2, e3` plus a central `e4`.
pub fn ternary_dim3_plus_line() -> ThreeBiHomLieSuperalgebra {
    let space = SuperSpace::even(4);
    ThreeBiHomLieSuperalgebra::untwisted(skew_ternary(&space, &[(1, 2, 3, 3, q(1))]))
}

/// A4 twisted by `α = diag(1,1,-1,-1)`, `β = diag(1,-1,1,-1)`.
pub fn a4_twisted() -> ThreeBiHomLieSuperalgebra {
    let a = a4();
    let alpha = diag_ints(a.space(), &[1, 1, -1, -1]);
    let beta = diag_ints(a.space(), &[1, -1, 1, -1]);
    make_twist_3(a.bracket(), &alpha, &beta).expect("sign changes with product 1 are automorphisms")
}

/// A4 twisted by the rotation with `cos = 3/5` in the `e1, e2` plane and its square.
pub fn a4_rotated() -> ThreeBiHomLieSuperalgebra {
    let a = a4();
    let (c, s) = (Scalar::ratio(3, 5), Scalar::ratio(4, 5));
    let z = Scalar::zero();
    let one = Scalar::one();
    let rot = crate::matrix::Matrix::from_rows(alloc::vec![
        alloc::vec![c.clone(), -s.clone(), z.clone(), z.clone()],
        alloc::vec![s, c, z.clone(), z.clone()],
        alloc::vec![z.clone(), z.clone(), one.clone(), z.clone()],
        alloc::vec![z.clone(), z, Scalar::zero(), one],
    ])
    .expect("square");
    let alpha = GradedMap::even(a.space().clone(), rot).expect("even");
    let beta = alpha.pow(2);
    make_twist_3(a.bracket(), &alpha, &beta).expect("rotations are automorphisms of A4")
}

/// [`nilpotent_ternary`] twisted by `diag(1,2,3,6)` and `diag(2,1,1,2)`.
pub fn nilpotent_twisted() -> ThreeBiHomLieSuperalgebra {
    let a = nilpotent_ternary();
    let alpha = diag_ints(a.space(), &[1, 2, 3, 6]);
    let beta = diag_ints(a.space(), &[2, 1, 1, 2]);
    make_twist_3(a.bracket(), &alpha, &beta).expect("diagonal morphisms")
}

/// A Yau twist of `base` by the given commuting morphisms.
pub fn yau(base: &BiHomLieSuperalgebra, alpha: &[Scalar], beta: &[Scalar]) -> BiHomLieSuperalgebra {
    let alpha = diag(base.space(), alpha);
    let beta = diag(base.space(), beta);
    make_yau_twist_2(base.bracket(), &alpha, &beta).expect("fixture twists use morphisms")
}

fn qs(entries: &[i64]) -> Vec<Scalar> {
    entries.iter().map(|&n| q(n)).collect()
}

/// Named binary fixtures: the untwisted tables and diagonal Yau twists of them.
pub fn binary_catalog() -> Vec<(&'static str, BiHomLieSuperalgebra)> {
    let half = Scalar::ratio(1, 2);
    alloc::vec![
        ("affine-line", affine_line()),
        ("affine-odd-center", affine_odd_center()),
        ("odd-square", odd_square()),
        ("s3", s3()),
        ("gl11", gl11()),
        ("super-heisenberg", super_heisenberg()),
        ("heisenberg", heisenberg()),
        ("heisenberg-plus-line", heisenberg_plus_line()),
        ("super-heisenberg-plus-line", super_heisenberg_plus_line()),
        ("sl2", sl2()),
        ("affine-pair", affine_pair()),
        ("odd-plane-action", odd_plane_action()),
        ("zero-1|1", zero_binary(&SuperSpace::from_bits(&[0, 1]))),
        ("affine-line-yau", yau(&affine_line(), &qs(&[1, 2]), &qs(&[1, 3]))),
        ("affine-line-yau-equal", yau(&affine_line(), &qs(&[1, -1]), &qs(&[1, -1]))),
        ("affine-odd-center-yau", yau(&affine_odd_center(), &qs(&[1, 2, -1]), &qs(&[1, 2, -1]))),
        ("odd-square-yau", yau(&odd_square(), &qs(&[4, 2]), &qs(&[1, -1]))),
        ("s3-yau", yau(&s3(), &qs(&[1, 4, 2]), &qs(&[1, 4, 2]))),
        ("s3-yau-mixed", yau(&s3(), &qs(&[1, 4, 2]), &qs(&[1, 9, 3]))),
        ("gl11-yau", yau(&gl11(), &qs(&[1, 1, 2]).into_iter().chain([half.clone()]).collect::<Vec<_>>(), &qs(&[1, 1, 1, 1]))),
        ("super-heisenberg-yau", yau(&super_heisenberg(), &qs(&[6, 2, 3]), &qs(&[6, 2, 3]))),
        ("heisenberg-yau", yau(&heisenberg(), &qs(&[2, 3, 6]), &qs(&[1, -1, -1]))),
        ("heisenberg-plus-line-yau", yau(&heisenberg_plus_line(), &qs(&[2, 1, 2, 3]), &qs(&[2, 1, 2, 3]))),
        ("sl2-yau", yau(&sl2(), &[q(1), q(2), half.clone()], &[q(1), q(2), half])),
        ("affine-pair-yau", yau(&affine_pair(), &qs(&[1, 2, 1, 3]), &qs(&[1, 2, 1, 3]))),
    ]
}

/// Named ternary fixtures, all satisfying the 3-BiHom-Lie axioms.
pub fn ternary_catalog() -> Vec<(&'static str, ThreeBiHomLieSuperalgebra)> {
    alloc::vec![
        ("a4", a4()),
        ("a4-twisted", a4_twisted()),
        ("a4-rotated", a4_rotated()),
        ("ternary-dim3", ternary_dim3()),
        ("ternary-dim3-plus-line", ternary_dim3_plus_line()),
        ("nilpotent", nilpotent_ternary()),
        ("nilpotent-twisted", nilpotent_twisted()),
        ("odd-nilpotent", odd_nilpotent_ternary()),
        ("zero-2|1", zero_ternary(&SuperSpace::from_bits(&[0, 0, 1]))),
    ]
}

/// Two odd vectors, `[e1,e1,e1] = e2`.
pub fn odd_cube() -> ThreeBiHomLieSuperalgebra {
    let space = SuperSpace::from_bits(&[1, 1]);
    ThreeBiHomLieSuperalgebra::untwisted(skew_ternary(&space, &[(1, 1, 1, 2, q(1))]))
}

/// Ternary fixtures of dimension 2.
pub fn dim2_ternary_catalog() -> Vec<(&'static str, ThreeBiHomLieSuperalgebra)> {
    let cube = odd_cube();
    let alpha = diag_ints(cube.space(), &[2, 8]);
    let beta = diag_ints(cube.space(), &[-1, -1]);
    let twisted = make_twist_3(cube.bracket(), &alpha, &beta).expect("diag(c, c^3) is a morphism");
    let mixed = SuperSpace::from_bits(&[0, 1]);
    let zero_twisted = ThreeBiHomLieSuperalgebra::new(StructureTensor3::zero(&mixed), diag_ints(&mixed, &[2, 1]), diag_ints(&mixed, &[1, 3]))
        .expect("even diagonal maps");
    alloc::vec![
        ("zero-2|0", zero_ternary(&SuperSpace::even(2))),
        ("zero-1|1", zero_ternary(&mixed)),
        ("zero-0|2", zero_ternary(&SuperSpace::from_bits(&[1, 1]))),
        ("zero-1|1-twisted", zero_twisted),
        ("odd-cube", cube),
        ("odd-cube-twisted", twisted),
    ]
}
