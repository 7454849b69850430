use num_complex::Complex64;
use serde::Serialize;

use super::symbol::BiPolySymbol;
use crate::bergman::{AlphaWeight, TruncatedSeries};
use crate::error::{Error, Result};
use crate::matrix::CMatrix;

/// What a truncation was built from.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    Toeplitz { symbol: BiPolySymbol },
    WeightedComposition { psi: Vec<Complex64>, phi: Vec<Complex64> },
    Multiplication { psi: Vec<Complex64> },
    Sum { parts: Vec<OperatorKind> },
}

/// `N×N` matrix with entry `(m, n) = ⟨A e_n, e_m⟩`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OperatorTruncation {
    pub matrix: CMatrix,
    pub alpha: f64,
    pub description: OperatorKind,
}

impl OperatorTruncation {
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::usage("truncation size must be at least 1"));
    }
    Ok(())
}

/// `T_φ` on `span{e_0, …, e_{N−1}}` from exact moments:
/// `(m, n) ↦ Σ c·δ_{n+p, m+q}·√(r_n r_m)·‖z^{n+p}‖²`.
pub fn build_toeplitz(symbol: &BiPolySymbol, n: usize, alpha: f64) -> Result<OperatorTruncation> {
    check_size(n)?;
    let weight = AlphaWeight::new(alpha, n - 1 + symbol.max_p())?;
    let mut matrix = CMatrix::zeros(n, n);
    for t in symbol.terms() {
        for col in 0..n {
            let k = col + t.p;
            if k < t.q || k - t.q >= n {
                continue;
            }
            let row = k - t.q;
            let scale = (weight.ratio(col) * weight.ratio(row)).sqrt() * weight.norm_sq(k);
            matrix[(row, col)] += t.c * scale;
        }
    }
    Ok(OperatorTruncation {
        matrix,
        alpha,
        description: OperatorKind::Toeplitz { symbol: symbol.clone() },
    })
}

/// Number of boundary-adjacent samples in the self-map test.
pub const SELF_MAP_SAMPLES: usize = 256;
/// Radius of the self-map sampling circle.
pub const SELF_MAP_RADIUS: f64 = 1.0 - 1e-3;

/// Rejects `φ` with `|φ(z)| ≥ 1` somewhere on the sampling circle.
pub fn check_self_map(phi: &TruncatedSeries) -> Result<()> {
    for k in 0..SELF_MAP_SAMPLES {
        let z = Complex64::from_polar(
            SELF_MAP_RADIUS,
            std::f64::consts::TAU * k as f64 / SELF_MAP_SAMPLES as f64,
        );
        let v = phi.eval(z);
        if !(v.norm() < 1.0) {
            return Err(Error::domain(format!(
                "phi is not a self-map of the disk: |phi({z})| = {} >= 1",
                v.norm()
            )));
        }
    }
    Ok(())
}

fn composition_matrix(psi: &TruncatedSeries, phi: &TruncatedSeries, n: usize, weight: &AlphaWeight) -> CMatrix {
    let t = n - 1;
    let psi_t = psi.with_truncation(t);
    let phi_t = phi.with_truncation(t);
    let mut matrix = CMatrix::zeros(n, n);
    let mut column = psi_t;
    for col in 0..n {
        for row in 0..n {
            let c = column.coeff(row);
            if c != Complex64::new(0.0, 0.0) {
                matrix[(row, col)] = c * (weight.ratio(col) / weight.ratio(row)).sqrt();
            }
        }
        if col + 1 < n {
            column = column.mul(&phi_t).expect("same truncation");
        }
    }
    matrix
}

/// `C_{ψ,φ} f = ψ·(f∘φ)`: column `n` holds the coefficients of `ψφⁿ`, the
/// `z^m` coefficient scaled by `√(r_n/r_m)`.
pub fn build_weighted_composition(
    psi: &TruncatedSeries,
    phi: &TruncatedSeries,
    n: usize,
    alpha: f64,
) -> Result<OperatorTruncation> {
    check_size(n)?;
    check_self_map(phi)?;
    let weight = AlphaWeight::new(alpha, n - 1)?;
    Ok(OperatorTruncation {
        matrix: composition_matrix(psi, phi, n, &weight),
        alpha,
        description: OperatorKind::WeightedComposition {
            psi: psi.coeffs().to_vec(),
            phi: phi.coeffs().to_vec(),
        },
    })
}

/// `M_ψ`, the weighted composition with `φ = z`.
pub fn build_multiplication(psi: &TruncatedSeries, n: usize, alpha: f64) -> Result<OperatorTruncation> {
    check_size(n)?;
    let weight = AlphaWeight::new(alpha, n - 1)?;
    let id = TruncatedSeries::identity(n.max(2) - 1);
    Ok(OperatorTruncation {
        matrix: composition_matrix(psi, &id, n, &weight),
        alpha,
        description: OperatorKind::Multiplication {
            psi: psi.coeffs().to_vec(),
        },
    })
}

/// Submatrix on strictly increasing in-range `indices`.
pub fn compress(a: &OperatorTruncation, indices: &[usize]) -> Result<CMatrix> {
    if indices.is_empty() {
        return Err(Error::usage("compression needs at least one index"));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::usage(format!(
            "compression indices must be strictly increasing: {indices:?}"
        )));
    }
    if let Some(bad) = indices.iter().find(|&&i| i >= a.size()) {
        return Err(Error::usage(format!(
            "compression index {bad} out of range for truncation size {}",
            a.size()
        )));
    }
    Ok(a.matrix.select(indices))
}

pub fn operator_sum(a: &OperatorTruncation, b: &OperatorTruncation) -> Result<OperatorTruncation> {
    if a.alpha != b.alpha {
        return Err(Error::usage(format!(
            "cannot add operators with alpha {} and {}",
            a.alpha, b.alpha
        )));
    }
    Ok(OperatorTruncation {
        matrix: a.matrix.try_add(&b.matrix)?,
        alpha: a.alpha,
        description: OperatorKind::Sum {
            parts: vec![a.description.clone(), b.description.clone()],
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlockReport {
    pub is_block: bool,
    pub max_violation: f64,
}

/// Threshold below which an entry counts as zero in [`block_structure_report`].
pub const BLOCK_THRESHOLD: f64 = 1e-12;

/// Whether `A` maps each residue class `L_j = span{e_k : k ≡ j mod n}` into
/// itself.
pub fn block_structure_report(a: &OperatorTruncation, n: usize) -> Result<BlockReport> {
    if n == 0 {
        return Err(Error::usage("block modulus must be at least 1"));
    }
    let size = a.size();
    let mut worst = 0.0_f64;
    for row in 0..size {
        for col in 0..size {
            if row % n != col % n {
                worst = worst.max(a.matrix[(row, col)].norm());
            }
        }
    }
    Ok(BlockReport {
        is_block: worst <= BLOCK_THRESHOLD,
        max_violation: worst,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn bergman_shift_entries() {
        let z = BiPolySymbol::from_triples(&[(1, 0, c(1.0, 0.0))]).unwrap();
        let a = build_toeplitz(&z, 8, 0.0).unwrap();
        for m in 0..8 {
            for n in 0..8 {
                let expected = if m == n + 1 {
                    ((n as f64 + 1.0) / (n as f64 + 2.0)).sqrt()
                } else {
                    0.0
                };
                assert!((a.matrix[(m, n)] - c(expected, 0.0)).norm() < 1e-15);
            }
        }
        let zb = BiPolySymbol::from_triples(&[(0, 1, c(1.0, 0.0))]).unwrap();
        assert_eq!(build_toeplitz(&zb, 8, 0.0).unwrap().matrix, a.matrix.adjoint());
    }

    #[test]
    fn abs_z_squared_is_diagonal() {
        let s = BiPolySymbol::from_triples(&[(1, 1, c(1.0, 0.0))]).unwrap();
        let alpha = 1.5;
        let a = build_toeplitz(&s, 10, alpha).unwrap();
        for m in 0..10 {
            for n in 0..10 {
                let expected = if m == n {
                    (n as f64 + 1.0) / (n as f64 + alpha + 2.0)
                } else {
                    0.0
                };
                assert!((a.matrix[(m, n)] - c(expected, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn composition_examples() {
        let one = TruncatedSeries::constant(c(1.0, 0.0), 4);
        let id = TruncatedSeries::identity(4);
        assert_eq!(
            build_weighted_composition(&one, &id, 6, 0.3).unwrap().matrix,
            CMatrix::identity(6)
        );
        let lambda = Complex64::from_polar(1.0, 0.7);
        let rot = TruncatedSeries::monomial(1, lambda, 4);
        let a = build_weighted_composition(&one, &rot, 6, 0.0).unwrap();
        for k in 0..6 {
            assert!((a.matrix[(k, k)] - lambda.powu(k as u32)).norm() < 1e-14);
        }
        let z = TruncatedSeries::identity(3);
        let zero = TruncatedSeries::zero(3);
        let b = build_weighted_composition(&z, &zero, 4, 0.0).unwrap();
        assert!((b.matrix[(1, 0)] - c(std::f64::consts::FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert_eq!(b.matrix.as_slice().iter().filter(|x| x.norm() > 0.0).count(), 1);
    }

    #[test]
    fn self_map_violation_names_point() {
        let one = TruncatedSeries::constant(c(1.0, 0.0), 2);
        let phi = TruncatedSeries::from_real(&[0.5, 0.6], 2);
        match build_weighted_composition(&one, &phi, 4, 0.0) {
            Err(Error::Domain(msg)) => assert!(msg.contains("phi(")),
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn multiplication_matches_toeplitz() {
        let psi = TruncatedSeries::from_poly(&[c(0.2, 0.0), c(0.5, 0.0), c(0.0, 0.3)], 2);
        let m = build_multiplication(&psi, 20, 0.7).unwrap();
        let t = build_toeplitz(&BiPolySymbol::analytic(&psi), 20, 0.7).unwrap();
        assert!(m.matrix.max_abs_diff(&t.matrix) < 1e-13);
    }

    #[test]
    fn compress_validates_indices() {
        let a = build_multiplication(&TruncatedSeries::identity(1), 5, 0.0).unwrap();
        assert!(compress(&a, &[0, 5]).is_err());
        assert!(compress(&a, &[2, 1]).is_err());
        assert_eq!(compress(&a, &[0, 1, 2, 3, 4]).unwrap(), a.matrix);
    }

    #[test]
    fn block_examples() {
        let psi = TruncatedSeries::from_real(&[1.0, 0.0, 1.0], 2);
        let flip = TruncatedSeries::from_real(&[0.0, -1.0], 1);
        let a = build_weighted_composition(&psi, &flip, 12, 0.0).unwrap();
        assert!(block_structure_report(&a, 2).unwrap().is_block);
        assert!(block_structure_report(&a, 1).unwrap().is_block);
        let b = build_weighted_composition(&TruncatedSeries::identity(1), &flip, 12, 0.0).unwrap();
        assert!(!block_structure_report(&b, 2).unwrap().is_block);
    }

    #[test]
    fn sum_requires_matching_alpha() {
        let a = build_multiplication(&TruncatedSeries::identity(1), 4, 0.0).unwrap();
        let b = build_multiplication(&TruncatedSeries::identity(1), 4, 1.0).unwrap();
        assert!(operator_sum(&a, &b).is_err());
        let c3 = build_multiplication(&TruncatedSeries::identity(1), 3, 0.0).unwrap();
        assert!(operator_sum(&a, &c3).is_err());
    }
}
