//! Z2-graded coordinate spaces and coefficient vectors.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::error::Error;
use crate::scalar::{Parity, Scalar};

/// A finite-dimensional superspace, described by the parity of each basis
/// vector `e_1, ..., e_dim`. Internally indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    parities: Vec<Parity>,
}

impl SuperSpace {
    pub fn new(parities: Vec<Parity>) -> Result<Self, Error> {
        if parities.is_empty() {
            return Err(Error::EmptySpace);
        }
        Ok(SuperSpace { parities })
    }

    /// Shorthand from 0/1 bits. Panics on bits other than 0 and 1, or an empty slice.
    pub fn from_bits(bits: &[u8]) -> Self {
        let parities = bits
            .iter()
            .map(|&b| Parity::from_bit(b).expect("parity bit must be 0 or 1"))
            .collect();
        SuperSpace::new(parities).expect("superspace must be nonempty")
    }

    /// A purely even space of the given dimension.
    pub fn even(dim: usize) -> Self {
        SuperSpace::new(vec![Parity::Even; dim]).expect("superspace must be nonempty")
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, index: usize) -> Parity {
        self.parities[index]
    }

    pub fn basis(&self, index: usize) -> Vector {
        Vector::basis(self.dim(), index)
    }

    pub fn zero(&self) -> Vector {
        Vector::zeros(self.dim())
    }

    pub fn check_index(&self, index: usize) -> Result<(), Error> {
        if index < self.dim() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, dim: self.dim() })
        }
    }

    pub fn check_same(&self, other: &SuperSpace) -> Result<(), Error> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// Parity of `v` if it is homogeneous. The zero vector counts as even.
    pub fn parity_of(&self, v: &Vector) -> Option<Parity> {
        let mut found = None;
        for (c, &p) in v.iter().zip(&self.parities) {
            if c.is_zero() {
                continue;
            }
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }
}

/// A dense coefficient vector with respect to the standard basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Vector::zeros(dim);
        v.0[index] = Scalar::one();
        v
    }

    pub fn from_vec(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&x| Scalar::from_integer(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Scalar> {
        self.0
    }

    /// Indices and values of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn add_assign(&mut self, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn sub_assign(&mut self, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|x| -x).collect())
    }

    /// Negate in place when `sign` is odd; used for Koszul signs.
    pub fn signed(mut self, sign: Parity) -> Vector {
        if sign.is_odd() {
            for x in &mut self.0 {
                *x = -&*x;
            }
        }
        self
    }

    pub fn sum(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn difference(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Scalar> for Vector {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}
