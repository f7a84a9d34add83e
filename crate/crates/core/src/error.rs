use alloc::boxed::Box;
use core::fmt;

use crate::report::VerificationReport;
use crate::scalar::Parity;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    EmptySpace,
    IndexOutOfRange { index: usize, dim: usize },
    DimensionMismatch { expected: usize, found: usize },
    /// Two objects live on different superspaces.
    SpaceMismatch,
    /// A map entry `(row, col)` would break homogeneity of the declared parity.
    MapParity { row: usize, col: usize, parity: Parity },
    /// A structure constant whose output parity is not the sum of the input parities.
    TensorParity { inputs: alloc::vec::Vec<usize>, output: usize },
    /// A linear form with a nonzero coefficient on an odd basis vector.
    OddFormCoefficient { index: usize },
    /// A twisting map that is required to be even is not.
    NotEven { name: &'static str },
    Inhomogeneous,
    Singular,
    NotIdempotent,
    /// A hypothesis of an operation failed; the report names it and carries witnesses.
    Precondition(Box<VerificationReport>),
}

impl Error {
    pub(crate) fn precondition(report: VerificationReport) -> Self {
        Error::Precondition(Box::new(report))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySpace => f.write_str("superspace must have dimension at least 1"),
            Error::IndexOutOfRange { index, dim } => {
                write!(f, "basis index {} out of range for dimension {dim}", index + 1)
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::SpaceMismatch => f.write_str("operands live on different superspaces"),
            Error::MapParity { row, col, parity } => write!(
                f,
                "entry ({}, {}) is nonzero but violates the declared {parity} parity",
                row + 1,
                col + 1
            ),
            Error::TensorParity { inputs, output } => {
                f.write_str("structure constant [")?;
                for (n, i) in inputs.iter().enumerate() {
                    if n > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "e{}", i + 1)?;
                }
                write!(f, "] -> e{} violates parity additivity", output + 1)
            }
            Error::OddFormCoefficient { index } => {
                write!(f, "linear form must vanish on odd basis vector e{}", index + 1)
            }
            Error::NotEven { name } => write!(f, "{name} must be an even map"),
            Error::Inhomogeneous => f.write_str("argument is not homogeneous"),
            Error::Singular => f.write_str("map is not invertible"),
            Error::NotIdempotent => f.write_str("map is not idempotent"),
            Error::Precondition(report) => write!(
                f,
                "precondition `{}` failed with {} violation(s)",
                report.identity,
                report.violations.len()
            ),
        }
    }
}
