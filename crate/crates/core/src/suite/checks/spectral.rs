use std::f64::consts::PI;

use serde_json::{json, Value};

use super::{c, sweep, weight};
use crate::bergman::{DiskQuadrature, QuadratureBudget};
use crate::error::{Error, Result};
use crate::numrange::{
    circle_image_hull, hermitian_extreme_eig, hull_hausdorff, hull_of_boundary, sample_image_hull, sample_map_hull,
    sweep_angle, HullPolygon, DEFAULT_EIG_TOL,
};
use crate::operators::{build_multiplication, build_toeplitz, BiPolySymbol};
use crate::suite::params::Params;
use crate::suite::Outcome;

/// Angular resolution of the circle images standing in for `φ(∂D)`.
const CIRCLE_SAMPLES: usize = 1440;

pub(super) fn t1_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "truncation": 128,
        "symbol": [[1, 0, 0.5, 0.0], [0, 1, 0.5, 0.0]],
        "coverage": 0.97,
    })
}

pub(super) fn t1_spectrum(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let n = p.usize_min("truncation", 2)?;
    let symbol = p.symbol("symbol")?;
    let coverage = p.positive_f64("coverage")?;
    if !(symbol.is_real() && symbol.is_harmonic()) {
        return Err(Error::usage("parameter `symbol`: must be real-valued and harmonic"));
    }
    let a = build_toeplitz(&symbol, n, alpha)?;
    let (top, _) = hermitian_extreme_eig(&a.matrix, DEFAULT_EIG_TOL)?;
    let (neg_bottom, _) = hermitian_extreme_eig(&a.matrix.scale(c(-1.0, 0.0)), DEFAULT_EIG_TOL)?;
    let bottom = -neg_bottom;

    // Harmonic functions attain their extremes on the boundary circle.
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for k in 0..4 * CIRCLE_SAMPLES {
        let v = symbol.eval(c(0.0, sweep_angle(k, 4 * CIRCLE_SAMPLES)).exp()).re;
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let tol = 1e-9;
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut out = Outcome::new(tol);
    out.metric("lambda_min", bottom);
    out.metric("lambda_max", top);
    out.metric("inf_phi", lo);
    out.metric("sup_phi", hi);
    let excess = (top - hi).max(lo - bottom).max(0.0);
    out.require("containment_excess", excess, excess <= tol);
    let cov_low = (mid - bottom) / half;
    let cov_high = (top - mid) / half;
    out.require("coverage_low", cov_low, cov_low >= coverage);
    out.require("coverage_high", cov_high, cov_high >= coverage);
    Ok(out)
}

pub(super) fn t3_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "truncation": 200,
        "angles": 360,
        "symbol": [[1, 0, 1.0, 0.0]],
        "hausdorff_tol": 0.02,
        "schedule": [32, 64, 128, 200],
        "delta": 0.02,
    })
}

/// Vertex of `hull` maximizing `Re(e^{iθ}z)`.
fn support_vertex(hull: &HullPolygon, theta: f64) -> num_complex::Complex64 {
    let rot = c(0.0, theta).exp();
    *hull
        .vertices()
        .iter()
        .max_by(|a, b| (rot * **a).re.total_cmp(&(rot * **b).re))
        .expect("non-empty hull")
}

pub(super) fn t3_harmonic_range(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let n = p.usize_min("truncation", 2)?;
    let angles = p.usize_min("angles", 8)?;
    let symbol = p.symbol("symbol")?;
    let tol = p.positive_f64("hausdorff_tol")?;
    let schedule = p.usize_list("schedule", 2)?;
    let delta = p.positive_f64("delta")?;
    if !symbol.is_harmonic() || symbol.terms().iter().all(|t| t.p + t.q == 0) {
        return Err(Error::usage("parameter `symbol`: must be harmonic and nonconstant"));
    }
    let f = |z| symbol.eval(z);
    let image = sample_map_hull(f, 64, 720)?;
    let closure = circle_image_hull(f, CIRCLE_SAMPLES)?;

    let mut out = Outcome::new(tol);
    let a = build_toeplitz(&symbol, n, alpha)?;
    let pts = sweep(&a.matrix, angles)?;
    let hull = hull_of_boundary(&pts)?;
    let hd = hull_hausdorff(&hull, &image);
    out.require("hausdorff", hd, hd <= tol);
    let max_support = pts.iter().map(|b| b.support).fold(f64::NEG_INFINITY, f64::max);
    out.metric("max_support", max_support);
    out.metric("support_theta0", pts[0].support);
    let excess = pts
        .iter()
        .map(|b| b.support - closure.support(b.theta))
        .fold(f64::NEG_INFINITY, f64::max);
    out.require("max_support_excess", excess, excess < 0.0);

    // Openness proxy: boundary points of the closed hull stay outside every
    // truncated range; points δ inside reach the largest truncation.
    for &m in &schedule {
        let hull_m = if m == n {
            hull.clone()
        } else {
            hull_of_boundary(&sweep(&build_toeplitz(&symbol, m, alpha)?.matrix, angles)?)?
        };
        let exclusion = closure
            .vertices()
            .iter()
            .map(|v| -hull_m.signed_distance(*v))
            .fold(f64::INFINITY, f64::min);
        out.require(format!("boundary_exclusion_n{m}"), exclusion, exclusion > 0.0);
    }
    let depth = (0..angles)
        .map(|k| {
            let theta = sweep_angle(k, angles);
            let s = support_vertex(&closure, theta);
            hull.signed_distance(s - c(0.0, -theta).exp() * delta)
        })
        .fold(f64::INFINITY, f64::min);
    out.require("interior_min_depth", depth, depth > 0.0);
    Ok(out)
}

pub(super) fn c1_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "truncation": 128,
        "angles": 360,
        "psi": [[0.2, 0.0], [0.5, 0.0], [0.0, 0.3]],
        "hausdorff_tol": 0.03,
    })
}

pub(super) fn c1_multiplication(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let n = p.usize_min("truncation", 2)?;
    let angles = p.usize_min("angles", 8)?;
    let psi = p.series("psi", 1)?;
    let tol = p.positive_f64("hausdorff_tol")?;
    let a = build_multiplication(&psi, n, alpha)?;
    let pts = sweep(&a.matrix, angles)?;
    let hull = hull_of_boundary(&pts)?;
    let image = sample_image_hull(&psi, 64, 720)?;
    let closure = circle_image_hull(|z| psi.eval(z), CIRCLE_SAMPLES)?;
    let mut out = Outcome::new(tol);
    let hd = hull_hausdorff(&hull, &image);
    out.require("hausdorff", hd, hd <= tol);
    // Chords of the sampled circle image cut off at most ~1e-5 here.
    let outside = pts.iter().map(|b| closure.distance(b.point)).fold(0.0, f64::max);
    out.require("max_outside_closure", outside, outside <= 1e-4);
    Ok(out)
}

pub(super) fn zsq_defaults() -> Value {
    json!({ "alpha": 0.0, "truncation": 64 })
}

pub(super) fn zsq_diagonal(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let n = p.usize_min("truncation", 1)?;
    let symbol = BiPolySymbol::from_triples(&[(1, 1, c(1.0, 0.0))])?;
    let a = build_toeplitz(&symbol, n, alpha)?;
    let w = weight(alpha, n)?;
    let mut out = Outcome::new(1e-10);

    let mut off = 0.0_f64;
    let mut closed = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off = off.max(a.matrix[(i, j)].norm());
            }
        }
        let lambda = (i as f64 + 1.0) / (i as f64 + alpha + 2.0);
        closed = closed.max((a.matrix[(i, i)] - c(lambda, 0.0)).norm());
    }
    out.require("offdiag_max", off, off <= 1e-12);
    out.require("diag_closed_form_err", closed, closed <= 1e-10);

    // Independent route: ⟨|z|² e_j, e_i⟩ = √(r_i r_j) ∫ |z|² z^j z̄^i dA_α.
    let quad = DiskQuadrature::new(
        alpha,
        QuadratureBudget {
            radial: n / 2 + 4,
            angular: 32,
        },
    )?;
    let mut diag_err = 0.0_f64;
    for i in 0..n {
        let v = quad.integrate(|z| c(z.norm_sqr().powi(i as i32 + 1), 0.0))? * w.ratio(i);
        diag_err = diag_err.max((v - a.matrix[(i, i)]).norm());
    }
    out.require("diag_quadrature_err", diag_err, diag_err <= 1e-10);
    let spot = n.min(8);
    let mut off_err = 0.0_f64;
    for i in 0..spot {
        for j in 0..spot {
            let v = quad.integrate(|z| z.norm_sqr() * z.powu(j as u32) * z.conj().powu(i as u32))?
                * (w.ratio(i) * w.ratio(j)).sqrt();
            off_err = off_err.max((v - a.matrix[(i, j)]).norm());
        }
    }
    out.require("entry_quadrature_err", off_err, off_err <= 1e-10);
    out.metric("lambda_0", a.matrix[(0, 0)].re);
    out.metric("lambda_0_with_pi_factor", PI / (alpha + 2.0));
    out.note(format!(
        "Normalization discrepancy: a π-scaled eigenvalue formula π(n+1)/(n+α+2) would give λ_0 = {:.6}, \
         but with the normalized measure dA_α (total mass 1) both the moment formula and quadrature give \
         (n+1)/(n+α+2), λ_0 = {:.6}; the factor π is not adopted.",
        PI / (alpha + 2.0),
        a.matrix[(0, 0)].re
    ));
    Ok(out)
}
