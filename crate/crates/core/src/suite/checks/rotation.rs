use std::f64::consts::TAU;

use num_complex::Complex64;
use serde_json::{json, Value};

use super::{c, composition, rotation_map, sweep};
use crate::bergman::TruncatedSeries;
use crate::error::{Error, Result};
use crate::numrange::{
    circle_image_hull, convex_hull, hull_hausdorff, hull_of_boundary, image_samples, regular_polygon,
};
use crate::operators::block_structure_report;
use crate::suite::params::Params;
use crate::suite::Outcome;

fn root_of_unity(n: usize) -> Complex64 {
    Complex64::from_polar(1.0, TAU / n as f64)
}

pub(super) fn l11_defaults() -> Value {
    json!({ "m": 2, "c": 1.5, "n_max": 64 })
}

/// `x_n = n!Γ(nm+c)/((nm)!Γ(n+c))` for `n = 0..=n_max`, by the ratio
/// `x_n/x_{n−1} = n/(n−1+c) · Π_{i<m} ((n−1)m+c+i)/((n−1)m+i+1)`.
pub(crate) fn l11_sequence(m: usize, cc: f64, n_max: usize) -> Vec<f64> {
    let mut x = Vec::with_capacity(n_max + 1);
    x.push(1.0);
    for n in 1..=n_max {
        let base = ((n - 1) * m) as f64;
        let mut ratio = n as f64 / (n as f64 - 1.0 + cc);
        for i in 0..m {
            ratio *= (base + cc + i as f64) / (base + i as f64 + 1.0);
        }
        x.push(x[n - 1] * ratio);
    }
    x
}

pub(super) fn l11_bounded(p: &Params) -> Result<Outcome> {
    let m = p.usize_min("m", 1)?;
    let cc = p.f64("c")?;
    let n_max = p.usize_min("n_max", 1)?;
    if cc <= 1.0 {
        return Err(Error::usage("parameter `c`: expected a number greater than 1"));
    }
    let x = l11_sequence(m, cc, n_max);
    let limit = (m as f64).powf(cc - 1.0);
    let sup = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let drop = x.windows(2).map(|w| w[0] - w[1]).fold(0.0, f64::max);
    let mut out = Outcome::new(1e-12);
    out.metric("x_last", x[n_max]);
    out.metric("limit", limit);
    out.require("sup", sup, sup.is_finite() && sup <= limit * (1.0 + 1e-12));
    out.require("max_decrease", drop, drop <= 1e-12 * limit);
    Ok(out)
}

pub(super) fn block_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "truncation": 48,
        "orders": [2, 3, 4, 6],
        "g": [1.0, 0.5, -0.25],
    })
}

/// `g(zⁿ)` as a series.
fn compose_power(g: &[Complex64], n: usize, truncation: usize) -> TruncatedSeries {
    let mut coeffs = vec![c(0.0, 0.0); (g.len() - 1) * n + 1];
    for (k, gk) in g.iter().enumerate() {
        coeffs[k * n] = *gk;
    }
    TruncatedSeries::from_poly(&coeffs, truncation)
}

pub(super) fn block_decomposition(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let size = p.usize_min("truncation", 2)?;
    let orders = p.usize_list("orders", 2)?;
    let g = p.complex_list("g")?;
    let mut out = Outcome::new(crate::operators::BLOCK_THRESHOLD);
    for &n in &orders {
        let phi = rotation_map(root_of_unity(n), size);
        let psi = compose_power(&g, n, size);
        let r = block_structure_report(&composition(&psi, &phi, size, alpha)?, n)?;
        out.require(format!("violation_n{n}"), r.max_violation, r.is_block);
        // z·g(zⁿ) shifts every residue class by one.
        let control = psi.mul(&TruncatedSeries::identity(size))?;
        let r = block_structure_report(&composition(&control, &phi, size, alpha)?, n)?;
        out.require(format!("control_violation_n{n}"), r.max_violation, !r.is_block);
    }
    Ok(out)
}

pub(super) fn th1_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "truncation": 128,
        "angles": 360,
        "n": 3,
        "g": [0.4, 0.5],
        "hausdorff_tol": 0.03,
    })
}

pub(super) fn th1_rotation_hull(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let size = p.usize_min("truncation", 2)?;
    let angles = p.usize_min("angles", 8)?;
    let n = p.usize_min("n", 1)?;
    let psi = compose_power(&p.complex_list("g")?, n, size);
    let tol = p.positive_f64("hausdorff_tol")?;
    let lambda = root_of_unity(n);
    let a = composition(&psi, &rotation_map(lambda, size), size, alpha)?;
    let pts = sweep(&a.matrix, angles)?;
    let hull = hull_of_boundary(&pts)?;

    let f = |z| psi.eval(z);
    let mut samples = Vec::new();
    let mut rim = Vec::new();
    for k in 0..n {
        let rot = lambda.powu(k as u32);
        samples.extend(image_samples(f, 64, 720).into_iter().map(|w| rot * w));
        rim.extend(circle_image_hull(f, 1440)?.vertices().iter().map(|w| rot * w));
    }
    let target = convex_hull(&samples)?;
    let closure = convex_hull(&rim)?;
    let mut out = Outcome::new(tol);
    let hd = hull_hausdorff(&hull, &target);
    out.require("hausdorff", hd, hd <= tol);
    let outside = pts.iter().map(|b| closure.distance(b.point)).fold(0.0, f64::max);
    out.require("max_outside_closure", outside, outside <= 1e-4);
    Ok(out)
}

pub(super) fn c2_defaults() -> Value {
    json!({ "alpha": 0.0, "truncation": 16, "n": 4, "angles": 360 })
}

fn match_vertices(found: &[Complex64], expected: &[Complex64]) -> f64 {
    if found.len() != expected.len() {
        return f64::INFINITY;
    }
    expected
        .iter()
        .map(|e| found.iter().map(|f| (f - e).norm()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

pub(super) fn c2_polygon(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let size = p.usize_min("truncation", 1)?;
    let n = p.usize_min("n", 1)?;
    let angles = p.usize_min("angles", 8)?;
    if size < n {
        return Err(Error::usage(format!(
            "parameter `truncation`: must be >= n = {n} so every vertex appears"
        )));
    }
    let lambda = root_of_unity(n);
    let one = TruncatedSeries::constant(c(1.0, 0.0), size.max(2) - 1);
    let a = composition(&one, &rotation_map(lambda, size), size.max(2), alpha)?;
    let a = if size == 1 { a.matrix.top_left(1) } else { a.matrix };

    // The truncation is diagonal, hence normal: its range is the hull of the
    // diagonal.
    let mut off = 0.0_f64;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if i != j {
                off = off.max(a[(i, j)].norm());
            }
        }
    }
    let mut out = Outcome::new(1e-12);
    out.require("offdiag_max", off, off <= 1e-14);
    let hull = convex_hull(&a.diagonal())?;
    let expected: Vec<Complex64> = (0..n).map(|k| lambda.powu(k as u32)).collect();
    let vertex_err = match_vertices(hull.vertices(), &expected);
    out.require("vertex_error", vertex_err, vertex_err <= 1e-12);
    out.metric("vertex_count", hull.len() as f64);
    if n == 2 {
        let width = hull.vertices().iter().map(|v| v.im.abs()).fold(0.0, f64::max);
        out.require("segment_width", width, width <= 1e-12);
    }
    if n >= 3 {
        let swept = hull_of_boundary(&sweep(&a, angles)?)?;
        let hd = hull_hausdorff(&swept, &regular_polygon(n, 1.0, 0.0)?);
        out.require("sweep_hausdorff", hd, hd <= 1e-8);
    }
    Ok(out)
}

pub(super) fn th2_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "truncation": 128,
        "angles": 360,
        "n": 3,
        "f": [0.0, 0.8, 0.0, 0.0, 0.1],
        "hausdorff_tol": 0.03,
    })
}

pub(super) fn th2_symmetric(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let size = p.usize_min("truncation", 2)?;
    let angles = p.usize_min("angles", 8)?;
    let n = p.usize_min("n", 1)?;
    let f = p.complex_list("f")?;
    let tol = p.positive_f64("hausdorff_tol")?;
    if angles % n != 0 {
        return Err(Error::usage(format!(
            "parameter `angles`: must be a multiple of n = {n}"
        )));
    }
    if let Some(k) = (0..f.len()).find(|&k| f[k] != c(0.0, 0.0) && k % n != 1 % n) {
        return Err(Error::usage(format!(
            "parameter `f`: coefficient {k} must vanish; only k ≡ 1 mod n keeps f(D) n-fold symmetric"
        )));
    }
    let lambda = root_of_unity(n);
    let psi = compose_power(&f, n, size);
    let a = composition(&psi, &rotation_map(lambda, size), size, alpha)?;
    let hull = hull_of_boundary(&sweep(&a.matrix, angles)?)?;
    let mut out = Outcome::new(tol);
    let rotated = hull.map(|z| lambda * z)?;
    let sym = hull_hausdorff(&hull, &rotated);
    out.require("symmetry_hausdorff", sym, sym <= 1e-8);
    let fs = TruncatedSeries::from_poly(&f, f.len().max(2) - 1);
    let image = convex_hull(&image_samples(|z| fs.eval(z), 64, 720))?;
    let hd = hull_hausdorff(&hull, &image);
    out.require("hausdorff", hd, hd <= tol);
    Ok(out)
}
