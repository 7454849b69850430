use std::collections::BTreeSet;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bergman::TruncatedSeries;
use crate::error::{Error, Result};

/// One term `c·z^p·z̄^q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BiPolyTerm {
    pub p: usize,
    pub q: usize,
    pub c: Complex64,
}

/// Finite symbol `φ(z) = Σ c·z^p·z̄^q` with distinct exponent pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BiPolySymbol {
    terms: Vec<BiPolyTerm>,
}

impl BiPolySymbol {
    pub fn new(terms: Vec<BiPolyTerm>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for t in &terms {
            if !seen.insert((t.p, t.q)) {
                return Err(Error::usage(format!("duplicate symbol term z^{} conj(z)^{}", t.p, t.q)));
            }
        }
        Ok(BiPolySymbol { terms })
    }

    /// Convenience constructor from `(p, q, c)` triples.
    pub fn from_triples(triples: &[(usize, usize, Complex64)]) -> Result<Self> {
        Self::new(triples.iter().map(|&(p, q, c)| BiPolyTerm { p, q, c }).collect())
    }

    /// The analytic symbol with the coefficients of `s`.
    pub fn analytic(s: &TruncatedSeries) -> Self {
        BiPolySymbol {
            terms: s
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != Complex64::new(0.0, 0.0))
                .map(|(p, &c)| BiPolyTerm { p, q: 0, c })
                .collect(),
        }
    }

    /// `Re z = (z + z̄)/2`.
    pub fn real_part_of_z() -> Self {
        let half = Complex64::new(0.5, 0.0);
        BiPolySymbol {
            terms: vec![BiPolyTerm { p: 1, q: 0, c: half }, BiPolyTerm { p: 0, q: 1, c: half }],
        }
    }

    pub fn terms(&self) -> &[BiPolyTerm] {
        &self.terms
    }

    fn coeff(&self, p: usize, q: usize) -> Option<Complex64> {
        self.terms.iter().find(|t| t.p == p && t.q == q).map(|t| t.c)
    }

    /// Real-valued iff every term is matched by its conjugate mirror.
    pub fn is_real(&self) -> bool {
        self.terms
            .iter()
            .filter(|t| t.c != Complex64::new(0.0, 0.0))
            .all(|t| self.coeff(t.q, t.p) == Some(t.c.conj()))
    }

    /// No mixed terms `z^p z̄^q` with both exponents positive.
    pub fn is_harmonic(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.p == 0 || t.q == 0 || t.c == Complex64::new(0.0, 0.0))
    }

    pub fn max_degree(&self) -> usize {
        self.terms.iter().map(|t| t.p + t.q).max().unwrap_or(0)
    }

    pub fn max_p(&self) -> usize {
        self.terms.iter().map(|t| t.p).max().unwrap_or(0)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let zb = z.conj();
        self.terms
            .iter()
            .map(|t| t.c * z.powu(t.p as u32) * zb.powu(t.q as u32))
            .sum()
    }

    pub fn conj(&self) -> Self {
        BiPolySymbol {
            terms: self
                .terms
                .iter()
                .map(|t| BiPolyTerm {
                    p: t.q,
                    q: t.p,
                    c: t.c.conj(),
                })
                .collect(),
        }
    }
}
