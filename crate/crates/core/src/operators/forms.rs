//! Kernel quadratic forms and integral functionals of `C_{ψ,φ}`.

use num_complex::Complex64;

use super::truncation::OperatorTruncation;
use crate::bergman::kernel::kernel_coeffs_with;
use crate::bergman::{kernel_coeffs, AlphaWeight, DiskQuadrature, QuadratureBudget, TruncatedSeries};
use crate::error::{Error, Result};
use crate::matrix::vec_norm;

fn check_in_disk(name: &str, w: Complex64) -> Result<()> {
    if !(w.norm() < 1.0) {
        return Err(Error::domain(format!("{name} must lie in the open unit disk, got {w}")));
    }
    Ok(())
}

/// `⟨C_{ψ,φ} k̂_w, k̂_w⟩ = ψ(w)(1−|w|²)^{α+2}/(1−w̄φ(w))^{α+2}`.
pub fn kernel_form_closed(psi: &TruncatedSeries, phi: &TruncatedSeries, w: Complex64, alpha: f64) -> Result<Complex64> {
    check_in_disk("w", w)?;
    let pw = phi.eval(w);
    check_in_disk("phi(w)", pw)?;
    crate::bergman::weight::check_alpha(alpha)?;
    let e = alpha + 2.0;
    let denom = (Complex64::new(1.0, 0.0) - w.conj() * pw).powf(e);
    Ok(psi.eval(w) * (1.0 - w.norm_sqr()).powf(e) / denom)
}

/// `v*Av` for the normalized truncated kernel vector `v` at `w`.
pub fn kernel_form_matrix(a: &OperatorTruncation, w: Complex64) -> Result<Complex64> {
    let v = kernel_coeffs(w, a.alpha, a.size(), true)?;
    Ok(a.matrix.quadratic_form(&v.coeffs_in_basis))
}

/// `‖A*κ_w − conj(ψ(w))·κ_{φ(w)}‖` with unnormalized truncated kernels.
pub fn adjoint_kernel_residual(
    a: &OperatorTruncation,
    psi: &TruncatedSeries,
    phi: &TruncatedSeries,
    w: Complex64,
) -> Result<f64> {
    let n = a.size();
    let weight = AlphaWeight::new(a.alpha, n - 1)?;
    let kw = kernel_coeffs_with(&weight, w, n, false)?;
    let kpw = kernel_coeffs_with(&weight, phi.eval(w), n, false)?;
    let lhs = a.matrix.adjoint_mul_vec(&kw.coeffs_in_basis);
    let s = psi.eval(w).conj();
    let diff: Vec<Complex64> = lhs.iter().zip(&kpw.coeffs_in_basis).map(|(x, y)| x - s * y).collect();
    Ok(vec_norm(&diff))
}

/// `I_{φ,α}(ψ)(a) = ∫_D ((1−|a|²)/|1−āφ(w)|²)^{α+2} |ψ(w)|² dA_α(w)`.
pub fn boundedness_functional(
    psi: &TruncatedSeries,
    phi: &TruncatedSeries,
    alpha: f64,
    a: Complex64,
    budget: QuadratureBudget,
) -> Result<f64> {
    check_in_disk("a", a)?;
    let quad = DiskQuadrature::new(alpha, budget)?;
    let e = alpha + 2.0;
    let num = 1.0 - a.norm_sqr();
    let ac = a.conj();
    let v = quad.integrate(|w| {
        let d = (Complex64::new(1.0, 0.0) - ac * phi.eval(w)).norm_sqr();
        Complex64::new((num / d).powf(e) * psi.eval(w).norm_sqr(), 0.0)
    })?;
    Ok(v.re)
}
