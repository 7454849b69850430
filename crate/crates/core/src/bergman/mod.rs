//! Weighted Bergman space fundamentals.
//!
//! Throughout, `dA_α(z) = (α+1)(1−|z|²)^α dA(z)` with `dA` the normalized
//! area measure, so that `∫_D dA_α = 1`. The orthonormal basis is
//! `e_n = √r_n zⁿ` with `r_n = Γ(n+α+2)/(n!Γ(α+2))` and `‖zⁿ‖² = 1/r_n`.

pub mod kernel;
pub mod quadrature;
pub mod series;
pub mod weight;

pub use kernel::{kernel_coeffs, KernelVector};
pub use quadrature::{bipoly_moment, disk_quadrature, DiskQuadrature, GaussJacobiRule, QuadratureBudget};
pub use series::TruncatedSeries;
pub use weight::{ln_norm_ratio, monomial_norm_sq, norm_ratio, AlphaWeight};
