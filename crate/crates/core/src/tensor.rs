//! Sparse structure constants of even multilinear brackets.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::map::GradedMap;
use crate::scalar::{Parity, Scalar};
use crate::space::{SuperSpace, Vector};

/// An even `N`-linear map `g x ... x g -> g`, stored as the images of basis
/// tuples. Only nonzero images are kept, so equal tensors compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureTensor<const N: usize> {
    space: SuperSpace,
    entries: BTreeMap<[usize; N], Vector>,
}

pub type StructureTensor2 = StructureTensor<2>;
pub type StructureTensor3 = StructureTensor<3>;

/// All tuples in `{0..dim}^N`, in lexicographic order.
pub fn basis_tuples<const N: usize>(dim: usize) -> impl Iterator<Item = [usize; N]> {
    let total = dim.checked_pow(N as u32).expect("tuple count overflows");
    (0..total).map(move |mut n| {
        let mut t = [0; N];
        for slot in t.iter_mut().rev() {
            *slot = n % dim;
            n /= dim;
        }
        t
    })
}

impl<const N: usize> StructureTensor<N> {
    pub fn zero(space: &SuperSpace) -> Self {
        StructureTensor { space: space.clone(), entries: BTreeMap::new() }
    }

    /// Build from `(inputs, output, coefficient)` triples. Repeated keys add up.
    pub fn from_entries<I>(space: &SuperSpace, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = ([usize; N], usize, Scalar)>,
    {
        let dim = space.dim();
        let mut map: BTreeMap<[usize; N], Vector> = BTreeMap::new();
        for (inputs, output, c) in entries {
            for &i in &inputs {
                space.check_index(i)?;
            }
            space.check_index(output)?;
            if c.is_zero() {
                continue;
            }
            check_parity(space, &inputs, output)?;
            map.entry(inputs).or_insert_with(|| Vector::zeros(dim))[output] += c;
        }
        map.retain(|_, v| !v.is_zero());
        Ok(StructureTensor { space: space.clone(), entries: map })
    }

    /// Build by evaluating `f` on every basis tuple.
    pub fn from_fn<F>(space: &SuperSpace, mut f: F) -> Result<Self, Error>
    where
        F: FnMut([usize; N]) -> Vector,
    {
        let mut map = BTreeMap::new();
        for t in basis_tuples::<N>(space.dim()) {
            let v = f(t);
            if v.len() != space.dim() {
                return Err(Error::DimensionMismatch { expected: space.dim(), found: v.len() });
            }
            if v.is_zero() {
                continue;
            }
            for (k, _) in v.support() {
                check_parity(space, &t, k)?;
            }
            map.insert(t, v);
        }
        Ok(StructureTensor { space: space.clone(), entries: map })
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of basis tuples with a nonzero image.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// Nonzero structure constants `(inputs, output, c)` in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = ([usize; N], usize, &Scalar)> + '_ {
        self.entries
            .iter()
            .flat_map(|(t, v)| v.support().map(move |(k, c)| (*t, k, c)))
    }

    pub fn eval_basis(&self, inputs: [usize; N]) -> Result<Vector, Error> {
        for &i in &inputs {
            self.space.check_index(i)?;
        }
        Ok(self.image(&inputs))
    }

    pub(crate) fn image(&self, inputs: &[usize; N]) -> Vector {
        match self.entries.get(inputs) {
            Some(v) => v.clone(),
            None => self.space.zero(),
        }
    }

    /// Multilinear extension to arbitrary coefficient vectors.
    pub fn eval(&self, args: [&Vector; N]) -> Result<Vector, Error> {
        for a in &args {
            if a.len() != self.space.dim() {
                return Err(Error::DimensionMismatch { expected: self.space.dim(), found: a.len() });
            }
        }
        let mut out = self.space.zero();
        for (t, v) in &self.entries {
            let mut c = Scalar::one();
            for (slot, &i) in t.iter().enumerate() {
                let a = &args[slot][i];
                if a.is_zero() {
                    c = Scalar::zero();
                    break;
                }
                c *= a;
            }
            out.add_scaled(&c, v);
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return StructureTensor::zero(&self.space);
        }
        let entries = self.entries.iter().map(|(t, v)| (*t, v.scaled(c))).collect();
        StructureTensor { space: self.space.clone(), entries }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.space.check_same(&other.space)?;
        let mut entries = self.entries.clone();
        for (t, v) in &other.entries {
            entries.entry(*t).or_insert_with(|| self.space.zero()).add_assign(v);
        }
        entries.retain(|_, v| !v.is_zero());
        Ok(StructureTensor { space: self.space.clone(), entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.scaled(&-Scalar::one()))
    }

    /// `m ∘ T`.
    pub fn then(&self, m: &GradedMap) -> Result<Self, Error> {
        self.space.check_same(m.space())?;
        if !m.is_even() {
            return Err(Error::NotEven { name: "output map" });
        }
        let mut entries = BTreeMap::new();
        for (t, v) in &self.entries {
            let w = m.apply(v)?;
            if !w.is_zero() {
                entries.insert(*t, w);
            }
        }
        Ok(StructureTensor { space: self.space.clone(), entries })
    }

    /// `T ∘ (m_1 ⊗ ... ⊗ m_N)` for even maps.
    pub fn precompose(&self, maps: [&GradedMap; N]) -> Result<Self, Error> {
        for m in &maps {
            self.space.check_same(m.space())?;
            if !m.is_even() {
                return Err(Error::NotEven { name: "input map" });
            }
        }
        let images: Vec<Vec<Vector>> = maps
            .iter()
            .map(|m| (0..self.space.dim()).map(|i| m.image(i)).collect())
            .collect();
        StructureTensor::from_fn(&self.space, |t| {
            let args: [&Vector; N] = core::array::from_fn(|s| &images[s][t[s]]);
            self.eval(args).expect("dimensions checked")
        })
    }
}

fn check_parity<const N: usize>(space: &SuperSpace, inputs: &[usize; N], output: usize) -> Result<(), Error> {
    let total: Parity = inputs.iter().map(|&i| space.parity(i)).sum();
    if total == space.parity(output) {
        Ok(())
    } else {
        Err(Error::TensorParity { inputs: inputs.to_vec(), output })
    }
}

impl StructureTensor2 {
    pub fn eval2(&self, x: &Vector, y: &Vector) -> Vector {
        self.eval([x, y]).expect("arguments live on the tensor's space")
    }
}

impl StructureTensor3 {
    pub fn eval3(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.eval([x, y, z]).expect("arguments live on the tensor's space")
    }
}

/// `x_1 ∧ x_2`, an element of the exterior square used as a composite argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgePair {
    pub first: Vector,
    pub second: Vector,
}

impl WedgePair {
    pub fn new(first: Vector, second: Vector) -> Self {
        WedgePair { first, second }
    }

    pub fn basis(space: &SuperSpace, i: usize, j: usize) -> Self {
        WedgePair { first: space.basis(i), second: space.basis(j) }
    }

    /// `|x_1| + |x_2|`, or an error when either factor is inhomogeneous.
    pub fn parity(&self, space: &SuperSpace) -> Result<Parity, Error> {
        let a = space.parity_of(&self.first).ok_or(Error::Inhomogeneous)?;
        let b = space.parity_of(&self.second).ok_or(Error::Inhomogeneous)?;
        Ok(a + b)
    }

    /// Apply `m` to both factors.
    pub fn map(&self, m: &GradedMap) -> Result<WedgePair, Error> {
        Ok(WedgePair { first: m.apply(&self.first)?, second: m.apply(&self.second)? })
    }

    /// `x_2 ∧ x_1` together with the sign it carries: `x_1 ∧ x_2 = -(-1)^{|x_1||x_2|} x_2 ∧ x_1`.
    pub fn swapped(&self, space: &SuperSpace) -> Result<(Parity, WedgePair), Error> {
        let a = space.parity_of(&self.first).ok_or(Error::Inhomogeneous)?;
        let b = space.parity_of(&self.second).ok_or(Error::Inhomogeneous)?;
        let sign = Parity::Odd + Parity::koszul(a, b);
        Ok((sign, WedgePair { first: self.second.clone(), second: self.first.clone() }))
    }
}
