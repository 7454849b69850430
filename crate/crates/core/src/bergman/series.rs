use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Taylor coefficients `c_0, …, c_N` of an analytic function, truncated at
/// degree `N`. Products discard everything above degree `N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Series from explicit coefficients; the truncation is `coeffs.len() − 1`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::usage("a truncated series needs at least one coefficient"));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Polynomial coefficients padded (or cut) to the given truncation.
    pub fn from_poly(coeffs: &[Complex64], truncation: usize) -> Self {
        let mut c = vec![ZERO; truncation + 1];
        for (dst, src) in c.iter_mut().zip(coeffs) {
            *dst = *src;
        }
        TruncatedSeries { coeffs: c }
    }

    pub fn from_real(coeffs: &[f64], truncation: usize) -> Self {
        let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_poly(&c, truncation)
    }

    pub fn zero(truncation: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![ZERO; truncation + 1],
        }
    }

    pub fn constant(c: Complex64, truncation: usize) -> Self {
        Self::from_poly(&[c], truncation)
    }

    /// The identity map `z`.
    pub fn identity(truncation: usize) -> Self {
        Self::from_poly(&[ZERO, ONE], truncation)
    }

    /// `c·z^k`.
    pub fn monomial(k: usize, c: Complex64, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if k <= truncation {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero past the truncation.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    /// Index of the highest non-zero coefficient, `None` for the zero series.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| *c != ZERO)
    }

    /// Smallest `k` with `c_k ≠ 0`.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| *c != ZERO)
    }

    pub fn with_truncation(&self, truncation: usize) -> Self {
        Self::from_poly(&self.coeffs, truncation)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: Complex64) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Cauchy product truncated at the common truncation.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.coeffs.len();
        let mut out = vec![ZERO; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == ZERO {
                continue;
            }
            for (o, b) in out[i..].iter_mut().zip(&other.coeffs) {
                *o += a * b;
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self^k` by repeated squaring; `self^0` is the constant 1.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::constant(ONE, self.truncation());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same truncation");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same truncation");
            }
        }
        result
    }

    /// `f ∘ g` for `g` with the same truncation, by Horner's scheme in the
    /// series ring.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_same(inner)?;
        let t = self.truncation();
        let mut acc = Self::zero(t);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, c| acc * z + c)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::usage(format!(
                "series truncations differ: {} vs {}",
                self.truncation(),
                other.truncation()
            )));
        }
        Ok(())
    }
}
