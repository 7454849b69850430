//! JSON job configuration.

use std::path::Path;

use bergman_numrange::bergman::TruncatedSeries;
use bergman_numrange::operators::{
    build_toeplitz, build_weighted_composition, operator_sum, BiPolySymbol, BiPolyTerm, OperatorTruncation,
};
use bergman_numrange::{Complex64, Error};
use serde::Deserialize;

/// `{"alpha", "truncation", "operator", "angles"?, "seed"?}`; unknown keys
/// are rejected.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub alpha: f64,
    pub truncation: usize,
    pub operator: OperatorConfig,
    #[serde(default = "default_angles")]
    pub angles: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

fn default_angles() -> usize {
    bergman_numrange::numrange::DEFAULT_ANGLES
}

fn default_seed() -> u64 {
    bergman_numrange::suite::DEFAULT_SEED
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum OperatorConfig {
    Toeplitz { terms: Vec<(usize, usize, f64, f64)> },
    WeightedComposition { psi: Vec<[f64; 2]>, phi: Vec<[f64; 2]> },
    Sum(Vec<OperatorConfig>),
}

fn coeffs(v: &[[f64; 2]]) -> Vec<Complex64> {
    v.iter().map(|[re, im]| Complex64::new(*re, *im)).collect()
}

impl OperatorConfig {
    fn build(&self, n: usize, alpha: f64) -> bergman_numrange::Result<OperatorTruncation> {
        match self {
            OperatorConfig::Toeplitz { terms } => {
                let terms = terms
                    .iter()
                    .map(|&(p, q, re, im)| BiPolyTerm {
                        p,
                        q,
                        c: Complex64::new(re, im),
                    })
                    .collect();
                build_toeplitz(&BiPolySymbol::new(terms)?, n, alpha)
            }
            OperatorConfig::WeightedComposition { psi, phi } => {
                if psi.is_empty() || phi.is_empty() {
                    return Err(Error::Usage(
                        "operator.weighted_composition: psi and phi must be non-empty".into(),
                    ));
                }
                let psi = TruncatedSeries::from_poly(&coeffs(psi), n - 1);
                let phi = TruncatedSeries::from_poly(&coeffs(phi), n - 1);
                build_weighted_composition(&psi, &phi, n, alpha)
            }
            OperatorConfig::Sum(parts) => {
                let (first, rest) = parts
                    .split_first()
                    .ok_or_else(|| Error::Usage("operator.sum: needs at least one operator".into()))?;
                rest.iter()
                    .try_fold(first.build(n, alpha)?, |acc, p| operator_sum(&acc, &p.build(n, alpha)?))
            }
        }
    }
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let cfg: JobConfig = serde_json::from_str(text).map_err(|e| Error::Usage(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !(self.alpha.is_finite() && self.alpha > -1.0) {
            return Err(Error::Usage(format!(
                "config field `alpha`: must exceed -1, got {}",
                self.alpha
            )));
        }
        if self.truncation < 2 {
            return Err(Error::Usage(format!(
                "config field `truncation`: must be >= 2, got {}",
                self.truncation
            )));
        }
        if self.angles < 8 {
            return Err(Error::Usage(format!(
                "config field `angles`: must be >= 8, got {}",
                self.angles
            )));
        }
        Ok(())
    }

    pub fn build(&self) -> bergman_numrange::Result<OperatorTruncation> {
        self.operator.build(self.truncation, self.alpha)
    }
}
