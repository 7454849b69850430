use num_complex::Complex64;
use serde::Serialize;

use super::weight::AlphaWeight;
use crate::error::{Error, Result};

/// Coordinates of the reproducing kernel `k_w(z) = (1 − w̄z)^{−(α+2)}` in the
/// basis `{e_n}`: entry `n` is `√r_n · conj(w)ⁿ`. The normalized kernel
/// carries the extra factor `(1 − |w|²)^{α/2+1}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelVector {
    pub base_point: Complex64,
    pub alpha: f64,
    pub coeffs_in_basis: Vec<Complex64>,
    pub normalized: bool,
}

impl KernelVector {
    pub fn len(&self) -> usize {
        self.coeffs_in_basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs_in_basis.is_empty()
    }

    pub fn norm_sq(&self) -> f64 {
        self.coeffs_in_basis.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// Kernel coordinates `n = 0, …, len−1` at `w`.
pub fn kernel_coeffs(w: Complex64, alpha: f64, len: usize, normalized: bool) -> Result<KernelVector> {
    let weight = AlphaWeight::new(alpha, len.saturating_sub(1))?;
    kernel_coeffs_with(&weight, w, len, normalized)
}

pub(crate) fn kernel_coeffs_with(
    weight: &AlphaWeight,
    w: Complex64,
    len: usize,
    normalized: bool,
) -> Result<KernelVector> {
    if !(w.norm() < 1.0) {
        return Err(Error::domain(format!(
            "kernel base point must satisfy |w| < 1, got {w}"
        )));
    }
    let scale = if normalized {
        (1.0 - w.norm_sqr()).powf(weight.alpha() / 2.0 + 1.0)
    } else {
        1.0
    };
    let wb = w.conj();
    let mut power = Complex64::new(scale, 0.0);
    let mut coeffs = Vec::with_capacity(len);
    for n in 0..len {
        coeffs.push(power * weight.ratio(n).sqrt());
        power *= wb;
    }
    Ok(KernelVector {
        base_point: w,
        alpha: weight.alpha(),
        coeffs_in_basis: coeffs,
        normalized,
    })
}
