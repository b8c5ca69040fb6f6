//! Exact-arithmetic workbench for rank decompositions of the matrix
//! multiplication tensor: named seven-term decompositions of the 2x2 tensor,
//! their symmetry groups and stabilizers, and the invariant-subspace
//! computations that pin down the decomposition's structure.
//!
//! ```
//! use mmdec::catalog;
//! use mmdec::symmetry::stabilizer_within;
//! use mmdec::Rational;
//!
//! let dec = catalog::strassen_projective::<Rational>();
//! assert!(dec.verify_equals_matmul().ok);
//!
//! let candidate = catalog::builtin_group::<Rational>("s3xd3", None).unwrap();
//! let stabilizer = stabilizer_within(&dec, &candidate).unwrap();
//! assert_eq!(stabilizer.order(), 36);
//! ```

pub mod catalog;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod perm;
pub mod sampling;
pub mod scalar;
pub mod symmetry;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::{Cyclotomic12, Field, FieldKind, Rational};
pub use tensor::{matmul_tensor, Decomposition, Mat, RankOneTerm, Tensor3};
