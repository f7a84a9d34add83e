//! Exact construction and verification of BiHom-Lie superalgebras and
//! 3-BiHom-Lie superalgebras over the rationals.
//!
//! Everything is described by structure constants on a homogeneous basis.
//! Identities are checked on every basis tuple; by multilinearity that
//! decides them on the whole algebra.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod derivation;
pub mod error;
pub mod fixtures;
pub mod map;
pub mod matrix;
pub mod nijenhuis;
pub mod report;
pub mod rota_baxter;
pub mod scalar;
pub mod space;
pub mod tau;
pub mod tensor;

pub use algebra::{BiHomLieSuperalgebra, ThreeBiHomLieSuperalgebra};
pub use error::Error;
pub use map::{GradedMap, LinearForm};
pub use matrix::{kernel_basis, solve_affine, Matrix};
pub use report::{Equivalence, Scan, TheoremCheck, VerificationReport, Violation};
pub use scalar::{Parity, ParseScalarError, Scalar};
pub use space::{SuperSpace, Vector};
pub use tensor::{StructureTensor, StructureTensor2, StructureTensor3, WedgePair};
