use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::weight::{check_alpha, monomial_norm_sq};
use crate::error::{Error, Result};
use crate::numrange::tridiag::eigen_first_components;

/// Gauss rule on `[0, 1]` for the probability weight `(α+1)(1−t)^α dt`.
///
/// Built by Golub–Welsch from the Jacobi recurrence with parameters
/// `(α, 0)` mapped from `[−1, 1]`; exact for polynomials in `t` of degree up
/// to `2·len − 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussJacobiRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussJacobiRule {
    pub fn new(alpha: f64, len: usize) -> Result<Self> {
        check_alpha(alpha)?;
        if len == 0 {
            return Err(Error::usage("quadrature needs at least one node"));
        }
        let (a, b) = (alpha, 0.0_f64);
        let mut diag = Vec::with_capacity(len);
        let mut off = Vec::with_capacity(len.saturating_sub(1));
        for k in 0..len {
            let kf = k as f64;
            let s = 2.0 * kf + a + b;
            let dk = if k == 0 {
                (b - a) / (a + b + 2.0)
            } else {
                (b * b - a * a) / (s * (s + 2.0))
            };
            diag.push(dk);
            if k + 1 < len {
                let j = kf + 1.0;
                let sj = 2.0 * j + a + b;
                let beta = 4.0 * j * (j + a) * (j + b) * (j + a + b) / (sj * sj * (sj + 1.0) * (sj - 1.0));
                off.push(beta.sqrt());
            }
        }
        let (x, w) = eigen_first_components(&diag, &off)?;
        let total: f64 = w.iter().sum();
        Ok(GaussJacobiRule {
            nodes: x.iter().map(|x| 0.5 * (x + 1.0)).collect(),
            weights: w.iter().map(|w| w / total).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Node counts for [`DiskQuadrature`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadratureBudget {
    pub radial: usize,
    pub angular: usize,
}

impl Default for QuadratureBudget {
    fn default() -> Self {
        QuadratureBudget {
            radial: 64,
            angular: 128,
        }
    }
}

/// Product rule for `∫_D f dA_α`: Gauss–Jacobi in `t = r²` and the uniform
/// rule in angle.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskQuadrature {
    alpha: f64,
    radii: Vec<f64>,
    radial_weights: Vec<f64>,
    angles: Vec<Complex64>,
}

impl DiskQuadrature {
    pub fn new(alpha: f64, budget: QuadratureBudget) -> Result<Self> {
        if budget.angular == 0 {
            return Err(Error::usage("quadrature needs at least one angular node"));
        }
        let rule = GaussJacobiRule::new(alpha, budget.radial)?;
        let m = budget.angular;
        Ok(DiskQuadrature {
            alpha,
            radii: rule.nodes.iter().map(|t| t.sqrt()).collect(),
            radial_weights: rule.weights,
            angles: (0..m)
                .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / m as f64))
                .collect(),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// All sample points `r_j e^{iθ_k}` with their weights.
    pub fn points(&self) -> impl Iterator<Item = (Complex64, f64)> + '_ {
        let m = self.angles.len() as f64;
        self.radii
            .iter()
            .zip(&self.radial_weights)
            .flat_map(move |(&r, &w)| self.angles.iter().map(move |u| (u * r, w / m)))
    }

    pub fn integrate(&self, mut f: impl FnMut(Complex64) -> Complex64) -> Result<Complex64> {
        let mut total = Complex64::new(0.0, 0.0);
        for (z, w) in self.points() {
            let v = f(z);
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::numeric(format!("integrand is not finite at z = {z}")));
            }
            total += v * w;
        }
        Ok(total)
    }
}

/// `∫_D f dA_α` with the given node counts.
pub fn disk_quadrature(
    f: impl FnMut(Complex64) -> Complex64,
    alpha: f64,
    radial_nodes: usize,
    angular_nodes: usize,
) -> Result<Complex64> {
    DiskQuadrature::new(
        alpha,
        QuadratureBudget {
            radial: radial_nodes,
            angular: angular_nodes,
        },
    )?
    .integrate(f)
}

/// `∫_D z^p z̄^q dA_α`: zero off the diagonal, `‖z^p‖²` on it.
pub fn bipoly_moment(p: usize, q: usize, alpha: f64) -> Result<Complex64> {
    if p != q {
        check_alpha(alpha)?;
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(Complex64::new(monomial_norm_sq(p, alpha)?, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn moment_examples() {
        assert_eq!(bipoly_moment(1, 0, 0.7).unwrap(), c(0.0, 0.0));
        assert!((bipoly_moment(1, 1, 0.0).unwrap() - c(0.5, 0.0)).norm() < 1e-15);
        assert!((bipoly_moment(2, 2, 1.0).unwrap() - c(1.0 / 6.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn radial_rule_integrates_beta_moments() {
        // ∫_0^1 (α+1)(1−t)^α t^k dt = k!Γ(α+2)/Γ(k+α+2)
        for &alpha in &[-0.5, 0.0, 1.0, 2.5] {
            let rule = GaussJacobiRule::new(alpha, 6).unwrap();
            for k in 0..12 {
                let q: f64 = rule.nodes.iter().zip(&rule.weights).map(|(t, w)| w * t.powi(k)).sum();
                let exact = monomial_norm_sq(k as usize, alpha).unwrap();
                assert!((q - exact).abs() < 1e-13, "alpha={alpha} k={k}: {q} vs {exact}");
            }
        }
    }

    #[test]
    fn disk_examples() {
        let one = disk_quadrature(|_| c(1.0, 0.0), 1.5, 4, 4).unwrap();
        assert!((one - c(1.0, 0.0)).norm() < 1e-14);
        let r2 = disk_quadrature(|z| c(z.norm_sqr(), 0.0), 0.0, 16, 32).unwrap();
        assert!((r2 - c(0.5, 0.0)).norm() < 1e-12);
        let w = c(0.3, 0.0);
        let mobius = disk_quadrature(|z| c(((w - z) / (1.0 - w.conj() * z)).re, 0.0), 0.0, 64, 128).unwrap();
        assert!((mobius - c(0.3, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn non_finite_integrand_is_numeric_error() {
        let r = disk_quadrature(|_| c(f64::NAN, 0.0), 0.0, 2, 2);
        assert!(matches!(r, Err(Error::Numeric(_))));
    }
}
