use serde::Serialize;

use crate::error::{Error, Result};

/// Basis coefficient sequences for a fixed weight parameter α.
///
/// `norm_ratio[n] = r_n = Γ(n+α+2)/(n!Γ(α+2))` is the square of the
/// coefficient in `e_n = √r_n zⁿ`, and `monomial_norm_sq[n] = ‖zⁿ‖² = 1/r_n`.
/// Both are built by their own multiplicative recurrences; no Gamma function
/// is ever evaluated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaWeight {
    alpha: f64,
    norm_ratio: Vec<f64>,
    monomial_norm_sq: Vec<f64>,
}

impl AlphaWeight {
    pub fn new(alpha: f64, max_index: usize) -> Result<Self> {
        check_alpha(alpha)?;
        let mut norm_ratio = Vec::with_capacity(max_index + 1);
        let mut monomial_norm_sq = Vec::with_capacity(max_index + 1);
        let (mut r, mut w) = (1.0_f64, 1.0_f64);
        norm_ratio.push(r);
        monomial_norm_sq.push(w);
        for n in 1..=max_index {
            let n = n as f64;
            r *= (n + alpha + 1.0) / n;
            w *= n / (n + alpha + 1.0);
            norm_ratio.push(r);
            monomial_norm_sq.push(w);
        }
        Ok(AlphaWeight {
            alpha,
            norm_ratio,
            monomial_norm_sq,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn max_index(&self) -> usize {
        self.norm_ratio.len() - 1
    }

    /// `r_n`; panics past `max_index`.
    pub fn ratio(&self, n: usize) -> f64 {
        self.norm_ratio[n]
    }

    /// `‖zⁿ‖² = 1/r_n`; panics past `max_index`.
    pub fn norm_sq(&self, n: usize) -> f64 {
        self.monomial_norm_sq[n]
    }

    pub fn ratios(&self) -> &[f64] {
        &self.norm_ratio
    }

    pub fn norms_sq(&self) -> &[f64] {
        &self.monomial_norm_sq
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha.is_finite() && alpha > -1.0) {
        return Err(Error::domain(format!("alpha must be finite and > -1, got {alpha}")));
    }
    Ok(())
}

/// `r_n = Γ(n+α+2)/(n!Γ(α+2))` via `r_n = r_{n−1}(n+α+1)/n`.
///
/// The value itself overflows `f64` once `r_n ≳ 1e308` (for `n = 10⁶` that
/// happens from α ≈ 66 on); [`ln_norm_ratio`] stays finite everywhere.
pub fn norm_ratio(n: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok((1..=n).fold(1.0, |r, k| {
        let k = k as f64;
        r * ((k + alpha + 1.0) / k)
    }))
}

/// `ln r_n` by summing the logarithms of the recurrence factors.
pub fn ln_norm_ratio(n: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok((1..=n).map(|k| ((alpha + 1.0) / k as f64).ln_1p()).sum())
}

/// `‖zⁿ‖²_{dA_α} = n!Γ(α+2)/Γ(n+α+2) = 1/r_n`.
pub fn monomial_norm_sq(n: usize, alpha: f64) -> Result<f64> {
    norm_ratio(n, alpha).map(|r| 1.0 / r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn norm_ratio_examples() {
        assert_eq!(norm_ratio(0, 3.7).unwrap(), 1.0);
        assert_relative_eq!(norm_ratio(3, 0.0).unwrap(), 4.0, max_relative = 1e-15);
        assert_relative_eq!(norm_ratio(1, 1.0).unwrap(), 3.0, max_relative = 1e-15);
    }

    #[test]
    fn monomial_norm_examples() {
        assert_eq!(monomial_norm_sq(0, -0.5).unwrap(), 1.0);
        assert_relative_eq!(monomial_norm_sq(2, 0.0).unwrap(), 1.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(monomial_norm_sq(1, 0.5).unwrap(), 0.4, max_relative = 1e-15);
    }

    #[test]
    fn alpha_domain() {
        assert!(matches!(norm_ratio(2, -1.0), Err(Error::Domain(_))));
        assert!(matches!(AlphaWeight::new(-1.5, 4), Err(Error::Domain(_))));
        assert!(AlphaWeight::new(f64::NAN, 4).is_err());
    }

    #[test]
    fn weight_tables_are_reciprocal_and_increasing() {
        for alpha in [-0.9, -0.5, 0.0, 1.0, 2.5, 40.0] {
            let w = AlphaWeight::new(alpha, 600).unwrap();
            assert_eq!(w.ratio(0), 1.0);
            for n in 0..=600 {
                assert!((w.ratio(n) * w.norm_sq(n) - 1.0).abs() <= 1e-14);
                if n >= 1 {
                    assert!(w.ratio(n) > w.ratio(n - 1));
                }
            }
        }
    }

    #[test]
    fn large_index_stays_finite() {
        for alpha in [0.0, 10.0, 60.0] {
            assert!(norm_ratio(1_000_000, alpha).unwrap().is_finite());
        }
        assert!(ln_norm_ratio(1_000_000, 100.0).unwrap().is_finite());
        let direct = norm_ratio(500, 3.0).unwrap().ln();
        assert_relative_eq!(ln_norm_ratio(500, 3.0).unwrap(), direct, max_relative = 1e-12);
    }
}
