use num_complex::Complex64;
use serde_json::{json, Value};

use super::{c, composition, sweep};
use crate::bergman::TruncatedSeries;
use crate::error::{Error, Result};
use crate::numrange::{hull_of_boundary, positive_definite_margin, support_margin};
use crate::suite::params::Params;
use crate::suite::Outcome;

const ORIGIN: Complex64 = Complex64::new(0.0, 0.0);

/// Signed distance of 0 to each `hull(A_N)` and the support margin at 0.
fn origin_margins(
    psi: &[Complex64],
    phi: &[Complex64],
    alpha: f64,
    schedule: &[usize],
    angles: usize,
    out: &mut Outcome,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let (mut inner, mut support) = (Vec::new(), Vec::new());
    for &n in schedule {
        let psi = TruncatedSeries::from_poly(psi, n);
        let phi = TruncatedSeries::from_poly(phi, n);
        let pts = sweep(&composition(&psi, &phi, n, alpha)?.matrix, angles)?;
        let d = hull_of_boundary(&pts)?.signed_distance(ORIGIN);
        let s = support_margin(&pts, ORIGIN);
        out.metric(format!("inner_margin_n{n}"), d);
        out.metric(format!("support_margin_n{n}"), s);
        inner.push(d);
        support.push(s);
    }
    Ok((inner, support))
}

/// Largest decrease of the support margin along the schedule; ranges nest,
/// so this is rounding-level when the schedule increases.
fn margin_drop(support: &[f64]) -> f64 {
    support.windows(2).map(|w| w[0] - w[1]).fold(0.0, f64::max)
}

fn zero_interior(p: &Params, psi: &[Complex64], phi: &[Complex64]) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let schedule = p.usize_list("schedule", 2)?;
    let angles = p.usize_min("angles", 8)?;
    let margin = p.positive_f64("margin")?;
    let mut out = Outcome::new(margin);
    let (inner, support) = origin_margins(psi, phi, alpha, &schedule, angles, &mut out)?;
    let best = inner.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    out.require("best_inner_margin", best, best >= margin);
    if schedule.windows(2).all(|w| w[0] < w[1]) {
        let drop = margin_drop(&support);
        out.require("support_margin_drop", drop, drop <= 1e-9);
    }
    Ok(out)
}

pub(super) fn theo2_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "psi": [1.0],
        "phi": [0.0, 0.45, 0.45],
        "schedule": [16, 32, 64, 128],
        "angles": 360,
        "margin": 1e-3,
    })
}

pub(super) fn theo2_zero_interior(p: &Params) -> Result<Outcome> {
    let psi = p.complex_list("psi")?;
    let phi = p.complex_list("phi")?;
    if phi[0] != ORIGIN {
        return Err(Error::usage("parameter `phi`: must satisfy phi(0) = 0"));
    }
    if phi.iter().enumerate().all(|(k, a)| k == 1 || *a == ORIGIN) {
        return Err(Error::usage("parameter `phi`: must not be of the form t·z"));
    }
    zero_interior(p, &psi, &phi)
}

pub(super) fn theo3_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "psi": [1.0, 1.0],
        "t": -1.0,
        "schedule": [16, 32, 64, 128],
        "angles": 360,
        "margin": 1e-3,
    })
}

pub(super) fn theo3_zero_interior(p: &Params) -> Result<Outcome> {
    let psi = p.complex_list("psi")?;
    let t = p.f64("t")?;
    if !(-1.0..=0.0).contains(&t) {
        return Err(Error::usage("parameter `t`: expected a number in [-1, 0]"));
    }
    if psi.iter().skip(1).all(|a| *a == ORIGIN) {
        return Err(Error::usage("parameter `psi`: must be nonconstant"));
    }
    zero_interior(p, &psi, &[ORIGIN, c(t, 0.0)])
}

pub(super) fn remark_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "psi": [1.0, 0.25],
        "phi": [0.0, 0.5],
        "schedule": [16, 32, 64, 128],
        "angles": 360,
    })
}

pub(super) fn remark_counterexample(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let psi = p.complex_list("psi")?;
    let phi = p.complex_list("phi")?;
    let schedule = p.usize_list("schedule", 2)?;
    let angles = p.usize_min("angles", 8)?;
    let mut out = Outcome::new(0.0);
    for &n in &schedule {
        let a = composition(
            &TruncatedSeries::from_poly(&psi, n),
            &TruncatedSeries::from_poly(&phi, n),
            n,
            alpha,
        )?;
        let pts = sweep(&a.matrix, angles)?;
        let separation = -support_margin(&pts, ORIGIN);
        out.metric(format!("separation_n{n}"), separation);
        // 0 ∉ W(A) iff Re(e^{iθ}A) is negative definite for some θ. The gap
        // decays geometrically with N and drops below ε‖A‖, so definiteness
        // in the direction of least support is certified by a diagonally
        // scaled Cholesky factorization instead of the eigenvalue sign.
        let least = pts
            .iter()
            .min_by(|a, b| a.support.total_cmp(&b.support))
            .expect("non-empty sweep");
        let cert = positive_definite_margin(&a.matrix.rotated_hermitian_part(least.theta).scale(c(-1.0, 0.0)))?;
        out.metric(format!("certificate_theta_n{n}"), least.theta);
        out.require(format!("certificate_pivot_n{n}"), cert, cert > 0.0);
    }
    out.note(
        "Each truncation is certified to exclude 0; whether 0 lies in the closure of the full range is a \
         limit statement that finite truncations cannot decide.",
    );
    Ok(out)
}
