use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{c, composition, series_norm_sq, sweep};
use crate::bergman::{DiskQuadrature, QuadratureBudget, TruncatedSeries};
use crate::error::{Error, Result};
use crate::numrange::EllipseSpec;
use crate::operators::{
    adjoint_kernel_residual, build_multiplication, kernel_form_closed, kernel_form_matrix, operator_sum,
};
use crate::suite::params::Params;
use crate::suite::Outcome;

pub(super) fn theo1_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "truncation": 128,
        "w0": [0.3, 0.2],
        "g1": [1.0],
        "g2": [0.5, 1.0],
        "psi1": [1.0],
        "phi1": [0.0, 0.5],
        "psi2": [1.0, 0.5],
        "phi2": [0.3, 0.4],
        "zeta_angle": 0.0,
        "radii": [0.9, 0.99, 0.999, 0.9999],
        "matrix_radius": 0.8,
    })
}

pub(super) fn theo1_kernel_sum(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let size = p.usize_min("truncation", 2)?;
    let w0 = p.complex("w0")?;
    let mut out = Outcome::new(1e-8);

    // (i) ψ_i = (z − w₀)g_i share the zero w₀.
    let factor = TruncatedSeries::from_poly(&[-w0, c(1.0, 0.0)], size);
    let g1 = p.series("g1", size)?;
    let g2 = p.series("g2", size)?;
    let m1 = build_multiplication(&factor.mul(&g1)?, size, alpha)?;
    let m2 = build_multiplication(&factor.mul(&g2)?, size, alpha)?;
    let at_zero = kernel_form_matrix(&operator_sum(&m1, &m2)?, w0)?.norm();
    out.require("common_zero_form", at_zero, at_zero <= 1e-8);

    // (ii) φ₁, φ₂ ≠ id: the kernel form tends to 0 radially.
    let psi1 = p.series("psi1", size)?;
    let phi1 = p.series("phi1", size)?;
    let psi2 = p.series("psi2", size)?;
    let phi2 = p.series("phi2", size)?;
    let zeta = Complex64::from_polar(1.0, p.f64("zeta_angle")?);
    let radii = p.f64_list("radii")?;
    if radii.iter().any(|r| !(0.0..1.0).contains(r)) || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::usage("parameter `radii`: expected increasing radii in [0, 1)"));
    }
    let closed = |w: Complex64| -> Result<Complex64> {
        Ok(kernel_form_closed(&psi1, &phi1, w, alpha)? + kernel_form_closed(&psi2, &phi2, w, alpha)?)
    };
    let values: Vec<f64> = radii
        .iter()
        .map(|r| closed(zeta * *r).map(|v| v.norm()))
        .collect::<Result<_>>()?;
    for (r, v) in radii.iter().zip(&values) {
        out.metric(format!("abs_form_r{r}"), *v);
    }
    let increase = values.windows(2).map(|w| w[1] - w[0]).fold(f64::NEG_INFINITY, f64::max);
    out.require("max_step_change", increase, increase < 0.0);
    let last = *values.last().expect("radii are non-empty");
    out.require("last_abs_form", last, last <= 1e-5);

    let r = p.f64("matrix_radius")?;
    let sum = operator_sum(
        &composition(&psi1, &phi1, size, alpha)?,
        &composition(&psi2, &phi2, size, alpha)?,
    )?;
    let w = zeta * r;
    let agree = (kernel_form_matrix(&sum, w)? - closed(w)?).norm();
    out.require("matrix_vs_closed", agree, agree <= 1e-6);
    out.note(
        "Part (i) is run with the zero shared by the weights ψ₁, ψ₂; a hypothesis on a common zero of φ₁, φ₂ \
         cannot be meant once both are the identity.",
    );
    Ok(out)
}

pub(super) fn pro1_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "truncation": 64,
        "angles": 360,
        "psi_segment": [[0.7, 0.4]],
        "w_segment": 0.0,
        "psi_disc": [-0.5, 1.0],
        "w_disc": 0.5,
        "psi_ellipse": [1.0, 0.5],
        "w_ellipse": 0.3,
    })
}

/// Range of `f ↦ f(w)ψ = ⟨f, k_w⟩ψ`: foci `0`, `ψ(w)`, minor axis
/// `√(‖ψ‖²‖k_w‖² − |ψ(w)|²)`.
fn rank_one_ellipse(psi: &TruncatedSeries, w: Complex64, alpha: f64) -> Result<EllipseSpec> {
    let kw = (1.0 - w.norm_sqr()).powf(-(alpha + 2.0));
    let pw = psi.eval(w);
    let minor_sq = series_norm_sq(psi, alpha)? * kw - pw.norm_sqr();
    EllipseSpec::new(c(0.0, 0.0), pw, minor_sq.max(0.0).sqrt())
}

pub(super) fn pro1_rank_one(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let size = p.usize_min("truncation", 2)?;
    let angles = p.usize_min("angles", 8)?;
    let mut out = Outcome::new(1e-8);
    for case in ["segment", "disc", "ellipse"] {
        let psi = p.series(&format!("psi_{case}"), size)?;
        let w = p.complex(&format!("w_{case}"))?;
        let phi = TruncatedSeries::constant(w, size);
        let shape = rank_one_ellipse(&psi, w, alpha)?;
        let pts = sweep(&composition(&psi, &phi, size, alpha)?.matrix, angles)?;
        let mut on_curve = 0.0_f64;
        let mut support = 0.0_f64;
        for b in &pts {
            on_curve = on_curve.max(shape.focal_excess(b.point).abs());
            let s = (Complex64::from_polar(1.0, b.theta) * shape.support_point(b.theta)).re;
            support = support.max((s - b.support).abs());
        }
        out.require(format!("{case}_focal_excess"), on_curve, on_curve <= 1e-8);
        out.require(format!("{case}_support_error"), support, support <= 1e-8);
        out.metric(format!("{case}_minor_axis"), shape.minor_axis);
        out.metric(format!("{case}_major_axis"), shape.major_axis());
    }
    Ok(out)
}

pub(super) fn mobius_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "radial": 64,
        "angular": 128,
        "degree": 8,
        "centers": [[0.3, 0.0], [0.0, 0.5], [-0.6, 0.0]],
        "instances": 4,
    })
}

pub(super) fn mobius_mean_value(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let budget = QuadratureBudget {
        radial: p.usize_min("radial", 1)?,
        angular: p.usize_min("angular", 1)?,
    };
    let degree = p.usize("degree")?;
    let centers = p.complex_list("centers")?;
    let instances = p.usize_min("instances", 1)?;
    if let Some(w) = centers.iter().find(|w| w.norm() >= 1.0) {
        return Err(Error::domain(format!("Möbius center {w} is not in the open unit disk")));
    }
    let quad = DiskQuadrature::new(alpha, budget)?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed()?);
    let mut worst = 0.0_f64;
    for _ in 0..instances {
        // h = Σ a_k z^k + Σ_{k≥1} b_k z̄^k
        let mut draw = || c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let a: Vec<Complex64> = (0..=degree).map(|_| draw()).collect();
        let b: Vec<Complex64> = (0..=degree)
            .map(|k| if k == 0 { c(0.0, 0.0) } else { draw() })
            .collect();
        let h = |z: Complex64| {
            let zb = z.conj();
            let (mut s, mut zp, mut zbp) = (c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0));
            for k in 0..=degree {
                s += a[k] * zp + b[k] * zbp;
                zp *= z;
                zbp *= zb;
            }
            s
        };
        for &w in &centers {
            let v = quad.integrate(|z| h((w - z) / (c(1.0, 0.0) - w.conj() * z)))?;
            worst = worst.max((v - h(w)).norm());
        }
    }
    let mut out = Outcome::new(1e-8);
    out.require("max_error", worst, worst <= 1e-8);
    Ok(out)
}

pub(super) fn adjoint_defaults() -> Value {
    json!({
        "alpha": 0.0,
        "truncation": 128,
        "family": [
            [[1.0], [0.0, 0.5]],
            [[1.0, 0.25], [0.0, 0.5]],
            [[0.0, 1.0], [0.3, 0.5]],
            [[1.0, 0.0, -0.5], [0.0, 0.5, 0.4]],
            [[0.5, 1.0], [0.0, -0.8]],
            [[1.0], [0.6, 0.0, -0.3]],
        ],
        "points": [0.0, 0.3, [0.0, 0.5], -0.7, [0.4, 0.4]],
        "form_point": 0.5,
    })
}

pub(super) fn adjoint_kernel(p: &Params) -> Result<Outcome> {
    let alpha = p.alpha()?;
    let size = p.usize_min("truncation", 2)?;
    let family = p.series_pairs("family")?;
    let points = p.complex_list("points")?;
    let mut worst = 0.0_f64;
    for (psi, phi) in &family {
        let psi = TruncatedSeries::from_poly(psi, size);
        let phi = TruncatedSeries::from_poly(phi, size);
        let a = composition(&psi, &phi, size, alpha)?;
        for &w in &points {
            worst = worst.max(adjoint_kernel_residual(&a, &psi, &phi, w)?);
        }
    }
    let mut out = Outcome::new(1e-5);
    out.require("max_residual", worst, worst <= 1e-5);

    // Normalized kernel form of the first family member against its closed form.
    let w = p.complex("form_point")?;
    let psi = TruncatedSeries::from_poly(&family[0].0, size);
    let phi = TruncatedSeries::from_poly(&family[0].1, size);
    let closed = kernel_form_closed(&psi, &phi, w, alpha)?;
    let matrix = kernel_form_matrix(&composition(&psi, &phi, size, alpha)?, w)?;
    out.metric("kernel_form_closed_re", closed.re);
    out.metric("kernel_form_closed_im", closed.im);
    let err = (matrix - closed).norm();
    out.require("kernel_form_error", err, err <= 1e-6);
    Ok(out)
}
