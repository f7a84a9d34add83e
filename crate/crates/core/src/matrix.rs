//! Dense exact matrices and fraction-free row reduction.
//!
//! Elimination runs over integers: every row is first cleared of
//! denominators, then reduced with `row_j <- p * row_j - f * row_i` and
//! divided by the gcd of its entries, so no intermediate fractions appear.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::scalar::Scalar;
use crate::space::Vector;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Integer entries, row-major. Panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_integer(x)).collect())
                .collect(),
        )
        .expect("rows must have equal length")
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let mut out = Vector::zeros(self.rows);
        for (j, c) in v.support() {
            for i in 0..self.rows {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    out[i] += a * c;
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, Error> {
        self.check_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, Error> {
        self.check_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scaled(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    fn check_shape(&self, other: &Matrix) -> Result<(), Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        IntegerEchelon::reduce(self, self.cols).pivots.len()
    }

    /// Exact inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let ech = IntegerEchelon::reduce(&aug, n);
        if ech.pivots.len() != n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for (r, &c) in ech.pivots.iter().enumerate() {
            let p = &ech.rows[r][c];
            for j in 0..n {
                inv[(c, j)] = ratio(&ech.rows[r][n + j], p);
            }
        }
        Ok(inv)
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.rows {
            list.entry(&self.row(i));
        }
        list.finish()
    }
}

fn ratio(num: &BigInt, den: &BigInt) -> Scalar {
    Scalar::from_big(num.clone(), den.clone()).expect("pivot is nonzero")
}

/// Reduced row echelon form with integer rows. Each pivot row has a nonzero
/// pivot and zeros in every other pivot column.
struct IntegerEchelon {
    rows: Vec<Vec<BigInt>>,
    /// Pivot column of row `r`, ascending.
    pivots: Vec<usize>,
}

impl IntegerEchelon {
    /// Reduce `m`, choosing pivots only among the first `pivot_limit` columns.
    fn reduce(m: &Matrix, pivot_limit: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| integer_row(m.row(i))).collect();
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..pivot_limit.min(m.cols()) {
            if next == rows.len() {
                break;
            }
            // Smallest nonzero entry keeps growth down.
            let Some(p) = (next..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by_key(|&r| rows[r][col].abs())
            else {
                continue;
            };
            rows.swap(next, p);
            let (before, rest) = rows.split_at_mut(next);
            let (pivot_row, after) = rest.split_first_mut().expect("next < rows.len()");
            for row in before.iter_mut().chain(after.iter_mut()) {
                eliminate(row, pivot_row, col);
            }
            pivots.push(col);
            next += 1;
        }
        rows.truncate(pivots.len());
        IntegerEchelon { rows, pivots }
    }
}

/// Scale a rational row by the lcm of its denominators.
fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive(out)
}

fn primitive(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut row {
            *x /= &g;
        }
    }
    row
}

/// `row <- p * row - f * pivot_row` so that `row[col]` becomes zero.
fn eliminate(row: &mut Vec<BigInt>, pivot_row: &[BigInt], col: usize) {
    let f = row[col].clone();
    if f.is_zero() {
        return;
    }
    let p = &pivot_row[col];
    let g = p.gcd(&f);
    let (pm, fm) = (p / &g, &f / &g);
    for (x, y) in row.iter_mut().zip(pivot_row) {
        *x = &*x * &pm - y * &fm;
    }
    let reduced = primitive(core::mem::take(row));
    *row = reduced;
}

/// A basis of `{v : a v = 0}`, one vector per free column, in ascending
/// order of free column. Each vector has integer, coprime entries and a
/// positive coordinate at its free column.
pub fn kernel_basis(a: &Matrix) -> Vec<Vector> {
    let n = a.cols();
    let ech = IntegerEchelon::reduce(a, n);
    let mut is_pivot = vec![false; n];
    for &c in &ech.pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        // v_free = L, v_pivot(r) = -L * row[r][free] / row[r][pivot(r)]
        let lcm = ech
            .pivots
            .iter()
            .enumerate()
            .filter(|(r, _)| !ech.rows[*r][free].is_zero())
            .fold(BigInt::one(), |acc, (r, &c)| acc.lcm(&ech.rows[r][c].abs()));
        let mut v = vec![BigInt::zero(); n];
        v[free] = lcm.clone();
        for (r, &c) in ech.pivots.iter().enumerate() {
            let entry = &ech.rows[r][free];
            if !entry.is_zero() {
                v[c] = -(&lcm * entry) / &ech.rows[r][c];
            }
        }
        let v = primitive(v);
        basis.push(v.into_iter().map(|x| Scalar::from_big(x, BigInt::one()).unwrap()).collect());
    }
    basis
}

/// One solution of `a x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero, so the answer is determined by the
/// pivot order (leftmost columns first).
pub fn solve_affine(a: &Matrix, b: &Vector) -> Result<Option<Vector>, Error> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let ech = IntegerEchelon::reduce(&aug, n + 1);
    if ech.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = Vector::zeros(n);
    for (r, &c) in ech.pivots.iter().enumerate() {
        x[c] = ratio(&ech.rows[r][n], &ech.rows[r][c]);
    }
    Ok(Some(x))
}
