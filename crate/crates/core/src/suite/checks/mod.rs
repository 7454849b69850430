mod kernels;
mod rotation;
mod shapes;
mod spectral;
mod zeros;

use num_complex::Complex64;

use super::Entry;
use crate::bergman::{AlphaWeight, TruncatedSeries};
use crate::error::Result;
use crate::matrix::CMatrix;
use crate::numrange::{boundary_points, BoundaryPoint};
use crate::operators::{build_weighted_composition, OperatorTruncation};

pub(crate) static REGISTRY: &[Entry] = &[
    Entry {
        id: "t1_spectrum",
        anchor: "the spectrum of T_φ for real harmonic φ is [inf φ, sup φ]",
        defaults: spectral::t1_defaults,
        run: spectral::t1_spectrum,
    },
    Entry {
        id: "t3_harmonic_range",
        anchor: "W(T_φ) for nonconstant harmonic φ is the relative interior of the closed convex hull of φ(D)",
        defaults: spectral::t3_defaults,
        run: spectral::t3_harmonic_range,
    },
    Entry {
        id: "c1_multiplication",
        anchor: "the closure of W(M_ψ) is the closed convex hull of ψ(D)",
        defaults: spectral::c1_defaults,
        run: spectral::c1_multiplication,
    },
    Entry {
        id: "zsq_diagonal",
        anchor: "T_{|z|²} is diagonal with eigenvalues (n+1)/(n+α+2)",
        defaults: spectral::zsq_defaults,
        run: spectral::zsq_diagonal,
    },
    Entry {
        id: "l11_bounded",
        anchor: "n!Γ(nm+c)/((nm)!Γ(n+c)) is bounded for integer m ≥ 1 and c > 1",
        defaults: rotation::l11_defaults,
        run: rotation::l11_bounded,
    },
    Entry {
        id: "block_decomposition",
        anchor: "C_{g(zⁿ), e^{2πi/n}z} maps each L_j = span{e_k : k ≡ j mod n} into itself",
        defaults: rotation::block_defaults,
        run: rotation::block_decomposition,
    },
    Entry {
        id: "th1_rotation_hull",
        anchor: "the closure of W(C_{ψ,λz}), λ = e^{2πi/n}, ψ = g(zⁿ), is the closed convex hull of ψ(D) ∪ λψ(D) ∪ … ∪ λ^{n−1}ψ(D)",
        defaults: rotation::th1_defaults,
        run: rotation::th1_rotation_hull,
    },
    Entry {
        id: "c2_polygon",
        anchor: "W(C_{1,λz}), λ = e^{2πi/n}, is the regular n-gon inscribed in the unit circle",
        defaults: rotation::c2_defaults,
        run: rotation::c2_polygon,
    },
    Entry {
        id: "th2_symmetric",
        anchor: "W(C_{f(zⁿ),λz}) equals the n-fold symmetric convex set f(D)",
        defaults: rotation::th2_defaults,
        run: rotation::th2_symmetric,
    },
    Entry {
        id: "theo1_kernel_sum",
        anchor: "0 ∈ W(M_{ψ₁} + M_{ψ₂}) when ψ₁, ψ₂ share a zero; 0 ∈ closure of W(C_{ψ₁,φ₁} + C_{ψ₂,φ₂}) when φ₁, φ₂ are not the identity",
        defaults: kernels::theo1_defaults,
        run: kernels::theo1_kernel_sum,
    },
    Entry {
        id: "pro1_rank_one",
        anchor: "for φ ≡ w, W(C_{ψ,φ}) is a segment from 0, a disc centred at 0, or an ellipse with foci 0 and ψ(w)",
        defaults: kernels::pro1_defaults,
        run: kernels::pro1_rank_one,
    },
    Entry {
        id: "theo2_zero_interior",
        anchor: "φ(0) = 0 and φ not of the form tz imply 0 ∈ int W(C_{ψ,φ})",
        defaults: zeros::theo2_defaults,
        run: zeros::theo2_zero_interior,
    },
    Entry {
        id: "theo3_zero_interior",
        anchor: "ψ nonconstant and φ(z) = tz with −1 ≤ t ≤ 0 imply 0 ∈ int W(C_{ψ,φ})",
        defaults: zeros::theo3_defaults,
        run: zeros::theo3_zero_interior,
    },
    Entry {
        id: "remark_counterexample",
        anchor: "for ψ = 1 + z/4 and φ = z/2 the origin is not in W(C_{ψ,φ})",
        defaults: zeros::remark_defaults,
        run: zeros::remark_counterexample,
    },
    Entry {
        id: "th_disc_TH1",
        anchor: "φ(0) = 0 and ord₀ψ = m: W(C_{ψ,φ}) contains the disc of radius m!Γ(α+2)|ψ̂_m|/(Γ(m+α+2)+m!Γ(α+2)) about 0",
        defaults: shapes::th1_disc_defaults,
        run: shapes::th_disc_th1,
    },
    Entry {
        id: "th_disc_TH2",
        anchor: "φ = λz, ψ(0) = 0, m ≥ 2: W(C_{ψ,φ}) contains the disc of radius ½√(m!Γ(α+3)/Γ(m+α+2))|λψ̂_{m−1}| about 0",
        defaults: shapes::th2_disc_defaults,
        run: shapes::th_disc_th2,
    },
    Entry {
        id: "th_circle_3x3",
        anchor: "the compression of C_{ψ,e^{2πi/n}z} to span{e_0, e_{nm₁}, e_{nm₂}} has a circular numerical range centred at ψ̂_0",
        defaults: shapes::circle_defaults,
        run: shapes::th_circle_3x3,
    },
    Entry {
        id: "th_ellipse_rotation",
        anchor: "W(C_{ψ,λz}), λ = e^{2πi/n}, contains the ellipse with foci ψ̂_0, λ^{np+j}ψ̂_0 and minor axis √((np+j)!Γ(α+2)/Γ(np+j+α+2))|ψ̂_{np+j}|",
        defaults: shapes::ellipse_rotation_defaults,
        run: shapes::th_ellipse_rotation,
    },
    Entry {
        id: "th_ellipse_irrational",
        anchor: "W(C_{ψ,e^{2πiθ}z}) contains the ellipse with foci e^{2πinθ}ψ̂_0, e^{2πi(n+m)θ}ψ̂_0 and minor axis √((n+m)!Γ(n+α+2)/(n!Γ(n+m+α+2)))|ψ̂_m|",
        defaults: shapes::ellipse_irrational_defaults,
        run: shapes::th_ellipse_irrational,
    },
    Entry {
        id: "mobius_mean_value",
        anchor: "∫_D h∘φ_w dA_α = h(w) for harmonic h and the disc automorphism φ_w(z) = (w−z)/(1−w̄z)",
        defaults: kernels::mobius_defaults,
        run: kernels::mobius_mean_value,
    },
    Entry {
        id: "adjoint_kernel",
        anchor: "C*_{ψ,φ} k_w = conj(ψ(w)) k_{φ(w)}",
        defaults: kernels::adjoint_defaults,
        run: kernels::adjoint_kernel,
    },
];

pub(super) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub(super) fn composition(
    psi: &TruncatedSeries,
    phi: &TruncatedSeries,
    n: usize,
    alpha: f64,
) -> Result<OperatorTruncation> {
    build_weighted_composition(psi, phi, n, alpha)
}

pub(super) fn sweep(a: &CMatrix, angles: usize) -> Result<Vec<BoundaryPoint>> {
    boundary_points(a, angles)
}

pub(super) fn weight(alpha: f64, max_index: usize) -> Result<AlphaWeight> {
    AlphaWeight::new(alpha, max_index)
}

/// `λz` as a series.
pub(super) fn rotation_map(lambda: Complex64, truncation: usize) -> TruncatedSeries {
    TruncatedSeries::monomial(1, lambda, truncation.max(1))
}

/// `‖f‖² = Σ |f̂_k|²/r_k`.
pub(super) fn series_norm_sq(s: &TruncatedSeries, alpha: f64) -> Result<f64> {
    let w = weight(alpha, s.truncation())?;
    Ok(s.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c.norm_sqr() * w.norm_sq(k))
        .sum())
}
