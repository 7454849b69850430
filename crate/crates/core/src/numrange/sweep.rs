use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::eigen::{hermitian_extreme_eig, DEFAULT_EIG_TOL};
use super::geometry::{convex_hull, EllipseSpec, HullPolygon};
use crate::bergman::TruncatedSeries;
use crate::error::{Error, Result};
use crate::matrix::CMatrix;

/// Default number of sweep angles.
pub const DEFAULT_ANGLES: usize = 360;

fn check_square(a: &CMatrix) -> Result<()> {
    if !a.is_square() || a.rows() == 0 {
        return Err(Error::usage(format!(
            "numerical range needs a non-empty square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(())
}

/// `h(θ) = λ_max((e^{iθ}A + e^{−iθ}A*)/2) = max Re(e^{iθ}W(A))`.
pub fn support_function(a: &CMatrix, theta: f64) -> Result<f64> {
    check_square(a)?;
    Ok(hermitian_extreme_eig(&a.rotated_hermitian_part(theta), DEFAULT_EIG_TOL)?.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryPoint {
    pub theta: f64,
    pub point: Complex64,
    pub support: f64,
}

/// The `k`-th of `count` equally spaced sweep angles.
pub fn sweep_angle(k: usize, count: usize) -> f64 {
    TAU * k as f64 / count as f64
}

/// Support value and boundary point of `W(A)` in direction `θ`.
pub fn boundary_point(a: &CMatrix, theta: f64) -> Result<BoundaryPoint> {
    check_square(a)?;
    let (support, v) = hermitian_extreme_eig(&a.rotated_hermitian_part(theta), DEFAULT_EIG_TOL)?;
    Ok(BoundaryPoint {
        theta,
        point: a.quadratic_form(&v),
        support,
    })
}

/// Points `v*Av` of the numerical range boundary for `count` equally spaced
/// angles, in angle order. Angles are processed in parallel.
pub fn boundary_points(a: &CMatrix, count: usize) -> Result<Vec<BoundaryPoint>> {
    check_square(a)?;
    if count < 3 {
        return Err(Error::usage(format!("a sweep needs at least 3 angles, got {count}")));
    }
    (0..count)
        .into_par_iter()
        .map(|k| boundary_point(a, sweep_angle(k, count)))
        .collect()
}

pub fn hull_of_boundary(points: &[BoundaryPoint]) -> Result<HullPolygon> {
    convex_hull(&points.iter().map(|b| b.point).collect::<Vec<_>>())
}

/// Inscribed polygon approximation of `W(A)`.
pub fn numerical_range_hull(a: &CMatrix, count: usize) -> Result<HullPolygon> {
    hull_of_boundary(&boundary_points(a, count)?)
}

/// `min_k (h(θ_k) − Re(e^{iθ_k}z))`. Negative proves `z ∉ W(A)`; for points
/// of `W(A)` it is non-negative up to eigensolver accuracy.
pub fn support_margin(points: &[BoundaryPoint], z: Complex64) -> f64 {
    points
        .iter()
        .map(|b| b.support - (Complex64::from_polar(1.0, b.theta) * z).re)
        .fold(f64::INFINITY, f64::min)
}

/// Elliptical range of a 2×2 matrix: foci at the eigenvalues and minor axis
/// `√(tr(M*M) − |λ₁|² − |λ₂|²)`.
pub fn ellipse_from_2x2(m: &CMatrix) -> Result<EllipseSpec> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::usage(format!(
            "expected a 2x2 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let half_tr = (m[(0, 0)] + m[(1, 1)]) * 0.5;
    let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
    let disc = (half_tr * half_tr - det).sqrt();
    let (l1, l2) = (half_tr + disc, half_tr - disc);
    let fro2 = m.as_slice().iter().map(|z| z.norm_sqr()).sum::<f64>();
    let minor_sq = fro2 - l1.norm_sqr() - l2.norm_sqr();
    EllipseSpec::new(l1, l2, minor_sq.max(0.0).sqrt())
}

/// `f` on the polar grid `r_j e^{iθ_k}`, `r_j = (1 − 10⁻³)(j+1)/radial`,
/// together with `f(0)`.
pub fn image_samples(f: impl Fn(Complex64) -> Complex64, radial: usize, angular: usize) -> Vec<Complex64> {
    let rmax = 1.0 - 1e-3;
    let mut pts = Vec::with_capacity(radial * angular + 1);
    pts.push(f(Complex64::new(0.0, 0.0)));
    for j in 0..radial {
        let r = rmax * (j + 1) as f64 / radial as f64;
        for k in 0..angular {
            pts.push(f(Complex64::from_polar(r, sweep_angle(k, angular))));
        }
    }
    pts
}

/// Hull of [`image_samples`].
pub fn sample_map_hull(f: impl Fn(Complex64) -> Complex64, radial: usize, angular: usize) -> Result<HullPolygon> {
    if radial == 0 || angular == 0 {
        return Err(Error::usage(
            "image sampling needs at least one radial and one angular node",
        ));
    }
    convex_hull(&image_samples(f, radial, angular))
}

/// Hull of `f` on `count` equally spaced points of the unit circle; for
/// continuous `f` this approximates the closed hull of `f(D)` from inside.
pub fn circle_image_hull(f: impl Fn(Complex64) -> Complex64, count: usize) -> Result<HullPolygon> {
    let pts: Vec<Complex64> = (0..count)
        .map(|k| f(Complex64::from_polar(1.0, sweep_angle(k, count))))
        .collect();
    convex_hull(&pts)
}

/// `min` over the points of `inner` of [`support_margin`] against `outer`.
/// Non-negative (up to rounding) when `W(inner) ⊆ W(outer)`.
pub fn nesting_margin(inner: &[BoundaryPoint], outer: &[BoundaryPoint]) -> f64 {
    inner
        .iter()
        .map(|b| support_margin(outer, b.point))
        .fold(f64::INFINITY, f64::min)
}

/// Hull of the sampled image of the disc under an analytic series.
pub fn sample_image_hull(phi: &TruncatedSeries, radial: usize, angular: usize) -> Result<HullPolygon> {
    sample_map_hull(|z| phi.eval(z), radial, angular)
}
