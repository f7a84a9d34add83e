//! Homogeneous linear endomorphisms and linear forms on a superspace.

use alloc::vec::Vec;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::{Parity, Scalar};
use crate::space::{SuperSpace, Vector};

/// A homogeneous endomorphism. Column `i` of the matrix is the image of `e_i`,
/// and it is supported on basis vectors of parity `|e_i| + parity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedMap {
    space: SuperSpace,
    matrix: Matrix,
    parity: Parity,
}

impl GradedMap {
    pub fn new(space: SuperSpace, matrix: Matrix, parity: Parity) -> Result<Self, Error> {
        let n = space.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: matrix.rows().max(matrix.cols()) });
        }
        for row in 0..n {
            for col in 0..n {
                if !matrix[(row, col)].is_zero()
                    && space.parity(row) != space.parity(col) + parity
                {
                    return Err(Error::MapParity { row, col, parity });
                }
            }
        }
        Ok(GradedMap { space, matrix, parity })
    }

    pub fn even(space: SuperSpace, matrix: Matrix) -> Result<Self, Error> {
        GradedMap::new(space, matrix, Parity::Even)
    }

    pub fn identity(space: &SuperSpace) -> Self {
        GradedMap { matrix: Matrix::identity(space.dim()), space: space.clone(), parity: Parity::Even }
    }

    pub fn zero(space: &SuperSpace, parity: Parity) -> Self {
        let n = space.dim();
        GradedMap { matrix: Matrix::zeros(n, n), space: space.clone(), parity }
    }

    /// `c * Id`.
    pub fn scalar(space: &SuperSpace, c: Scalar) -> Self {
        GradedMap::identity(space).scaled(&c)
    }

    /// Even diagonal map. Panics if the number of entries differs from the dimension.
    pub fn diagonal(space: &SuperSpace, entries: &[Scalar]) -> Self {
        assert_eq!(entries.len(), space.dim(), "one diagonal entry per basis vector");
        GradedMap { matrix: Matrix::diagonal(entries), space: space.clone(), parity: Parity::Even }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, Error> {
        self.matrix.mul_vec(v)
    }

    /// Image of the basis vector `e_i`.
    pub fn image(&self, i: usize) -> Vector {
        self.matrix.column(i)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap, Error> {
        self.space.check_same(&other.space)?;
        Ok(GradedMap {
            space: self.space.clone(),
            matrix: self.matrix.mul(&other.matrix)?,
            parity: self.parity + other.parity,
        })
    }

    pub fn pow(&self, exp: u32) -> GradedMap {
        let mut acc = GradedMap::identity(&self.space);
        for _ in 0..exp {
            acc = acc.compose(self).expect("same space");
        }
        acc
    }

    /// `self ∘ other == other ∘ self`.
    pub fn commutes(&self, other: &GradedMap) -> Result<bool, Error> {
        self.space.check_same(&other.space)?;
        Ok(self.matrix.mul(&other.matrix)? == other.matrix.mul(&self.matrix)?)
    }

    /// Sum of two maps of the same parity.
    pub fn add(&self, other: &GradedMap) -> Result<GradedMap, Error> {
        self.space.check_same(&other.space)?;
        if self.parity != other.parity {
            return Err(Error::Inhomogeneous);
        }
        Ok(GradedMap { space: self.space.clone(), matrix: self.matrix.add(&other.matrix)?, parity: self.parity })
    }

    pub fn sub(&self, other: &GradedMap) -> Result<GradedMap, Error> {
        self.add(&other.scaled(&-Scalar::one()))
    }

    pub fn scaled(&self, c: &Scalar) -> GradedMap {
        GradedMap { space: self.space.clone(), matrix: self.matrix.scaled(c), parity: self.parity }
    }

    pub fn inverse(&self) -> Result<GradedMap, Error> {
        Ok(GradedMap { space: self.space.clone(), matrix: self.matrix.inverse()?, parity: self.parity })
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self).map(|sq| sq == *self).unwrap_or(false)
    }
}

/// A linear form `τ: g -> K`, required to vanish on the odd part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    space: SuperSpace,
    coefficients: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(space: SuperSpace, coefficients: Vec<Scalar>) -> Result<Self, Error> {
        if coefficients.len() != space.dim() {
            return Err(Error::DimensionMismatch { expected: space.dim(), found: coefficients.len() });
        }
        if let Some(index) = coefficients
            .iter()
            .enumerate()
            .position(|(i, c)| space.parity(i).is_odd() && !c.is_zero())
        {
            return Err(Error::OddFormCoefficient { index });
        }
        Ok(LinearForm { space, coefficients })
    }

    pub fn from_ints(space: SuperSpace, coefficients: &[i64]) -> Result<Self, Error> {
        LinearForm::new(space, coefficients.iter().map(|&c| Scalar::from_integer(c)).collect())
    }

    pub fn zero(space: &SuperSpace) -> Self {
        LinearForm { coefficients: space.zero().into_inner(), space: space.clone() }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> &Scalar {
        &self.coefficients[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Scalar::is_zero)
    }

    pub fn eval(&self, v: &Vector) -> Scalar {
        v.support().map(|(i, c)| c * &self.coefficients[i]).sum()
    }

    pub fn scaled(&self, c: &Scalar) -> LinearForm {
        LinearForm { space: self.space.clone(), coefficients: self.coefficients.iter().map(|x| x * c).collect() }
    }

    /// `τ ∘ m`, which again vanishes on odd vectors when `m` is even.
    pub fn compose(&self, m: &GradedMap) -> Result<LinearForm, Error> {
        self.space.check_same(m.space())?;
        let coefficients = (0..self.space.dim()).map(|i| self.eval(&m.image(i))).collect();
        LinearForm::new(self.space.clone(), coefficients)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space() -> SuperSpace {
        SuperSpace::from_bits(&[0, 0, 1])
    }

    #[test]
    fn parity_enforced() {
        let odd_into_even = Matrix::from_int_rows(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
        assert!(GradedMap::even(space(), odd_into_even.clone()).is_err());
        assert!(GradedMap::new(space(), odd_into_even, Parity::Odd).is_ok());
    }

    #[test]
    fn apply_identity_and_zero() {
        let v = Vector::from_ints(&[1, -2, 5]);
        assert_eq!(GradedMap::identity(&space()).apply(&v).unwrap(), v);
        assert!(GradedMap::zero(&space(), Parity::Even).apply(&v).unwrap().is_zero());
    }

    #[test]
    fn commute_examples() {
        let s = SuperSpace::even(2);
        let nil = GradedMap::even(s.clone(), Matrix::from_int_rows(&[&[0, 1], &[0, 0]])).unwrap();
        let diag = GradedMap::even(s.clone(), Matrix::from_int_rows(&[&[1, 0], &[0, 2]])).unwrap();
        assert!(!nil.commutes(&diag).unwrap());
        assert!(nil.commutes(&GradedMap::identity(&s)).unwrap());
        let d2 = GradedMap::diagonal(&s, &[Scalar::from_integer(3), Scalar::from_integer(-1)]);
        assert!(diag.commutes(&d2).unwrap());
    }

    #[test]
    fn form_rejects_odd_support() {
        assert_eq!(
            LinearForm::from_ints(space(), &[1, 0, 1]),
            Err(Error::OddFormCoefficient { index: 2 })
        );
    }
}
