//! Finite truncations of Toeplitz and weighted composition operators on the
//! weighted Bergman spaces `L²_a(dA_α)` of the unit disk, their numerical
//! ranges, and a registry of named numerical checks.
//!
//! The crate is split along four layers:
//!
//! - [`bergman`]: the orthonormal basis `e_n = √r_n zⁿ`, truncated power
//!   series, reproducing kernels and quadrature against `dA_α`.
//! - [`operators`]: dense matrix truncations in the basis `{e_n}` together
//!   with compressions, kernel quadratic forms and block analysis.
//! - [`numrange`]: support-function sweeps, convex hulls and the
//!   disc/ellipse/polygon geometry used to compare ranges with shapes.
//! - [`suite`]: parameterized checks returning structured reports.

// Negated float comparisons deliberately treat NaN as failure.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bergman;
pub mod error;
pub mod matrix;
pub mod numrange;
pub mod operators;
pub mod suite;

pub use error::{Error, Result};
pub use matrix::CMatrix;
pub use num_complex::Complex64;
