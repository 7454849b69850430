//! Acceptance criteria, one line each. Exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use bergman_numrange::bergman::TruncatedSeries;
use bergman_numrange::numrange::{
    boundary_points, convex_hull, ellipse_from_2x2, hull_hausdorff, hull_of_boundary, nesting_margin, regular_polygon,
};
use bergman_numrange::operators::{build_multiplication, build_toeplitz, build_weighted_composition, BiPolySymbol};
use bergman_numrange::suite::{run_check, CheckReport};
use bergman_numrange::{CMatrix, Complex64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

type Verdict = (bool, String);
type Criterion = (&'static str, fn() -> Verdict);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn check(id: &str, overrides: Value) -> CheckReport {
    let map: Map<String, Value> = match overrides {
        Value::Object(m) => m,
        _ => Map::new(),
    };
    run_check(id, &map).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn metric(r: &CheckReport, name: &str) -> f64 {
    *r.metrics
        .get(name)
        .unwrap_or_else(|| panic!("{}: no metric {name}", r.id))
}

fn bergman_shift() -> Verdict {
    let a = build_multiplication(&TruncatedSeries::identity(199), 200, 0.0).unwrap();
    let pts = boundary_points(&a.matrix, 360).unwrap();
    let hull = hull_of_boundary(&pts).unwrap();
    let hd = hull_hausdorff(&hull, &regular_polygon(4096, 1.0, 0.0).unwrap());
    let max = pts.iter().map(|b| b.support).fold(f64::NEG_INFINITY, f64::max);
    let s0 = pts[0].support;
    (
        hd <= 0.02 && max < 1.0 && s0 >= 0.98,
        format!("hausdorff={hd:.3e} max_support={max:.6} support_theta0={s0:.6}"),
    )
}

fn polygon() -> Verdict {
    let square = check("c2_polygon", json!({"n": 4, "truncation": 16, "alpha": 0.0}));
    let segment = check("c2_polygon", json!({"n": 2, "truncation": 16, "alpha": 0.0}));
    let (v4, v2, w) = (
        metric(&square, "vertex_error"),
        metric(&segment, "vertex_error"),
        metric(&segment, "segment_width"),
    );
    (
        square.pass && segment.pass && v4 <= 1e-12 && v2 <= 1e-12 && w <= 1e-12,
        format!("square vertex_error={v4:.1e}; segment vertex_error={v2:.1e} width={w:.1e}"),
    )
}

fn zsq() -> Verdict {
    let mut ok = true;
    let mut detail = Vec::new();
    for alpha in [0.0, 1.0] {
        let r = check("zsq_diagonal", json!({"alpha": alpha, "truncation": 64}));
        let off = metric(&r, "offdiag_max");
        let quad = metric(&r, "diag_quadrature_err");
        let closed = metric(&r, "diag_closed_form_err");
        ok &= r.pass && off <= 1e-12 && quad <= 1e-10 && closed <= 1e-10 && r.notes.contains('π');
        detail.push(format!(
            "alpha={alpha}: offdiag={off:.1e} quad_err={quad:.1e} lambda_0={}",
            metric(&r, "lambda_0")
        ));
    }
    (ok, detail.join("; "))
}

fn spectrum() -> Verdict {
    let r = check(
        "t1_spectrum",
        json!({"alpha": 0.0, "truncation": 128, "symbol": [[1, 0, 0.5, 0.0], [0, 1, 0.5, 0.0]]}),
    );
    let (lo, hi) = (metric(&r, "lambda_min"), metric(&r, "lambda_max"));
    (
        lo >= -1.0 && hi <= 1.0 && lo <= -0.97 && hi >= 0.97,
        format!("[lambda_min, lambda_max] = [{lo:.6}, {hi:.6}]"),
    )
}

fn disc_th1() -> Verdict {
    let r = check(
        "th_disc_TH1",
        json!({"m": 1, "alpha": 0.0, "psi": [0.0, 1.0], "phi": [0.0, 0.0, 1.0], "truncation": 64, "lambdas": 32}),
    );
    let radius = metric(&r, "radius");
    let err = metric(&r, "witness_matrix_error").max(metric(&r, "witness_series_error"));
    let margin = metric(&r, "disc_min_signed_distance");
    (
        (radius - 1.0 / 3.0).abs() <= 1e-15 && err <= 1e-10 && margin >= -1e-9,
        format!("radius={radius} witness_err={err:.1e} disc_margin={margin:.4}"),
    )
}

fn disc_th2() -> Verdict {
    let r = check(
        "th_disc_TH2",
        json!({"m": 2, "alpha": 0.0, "lambda": [1.0, 0.0], "psi": [0.0, 1.0]}),
    );
    let expected = 0.5 * (2.0f64 / 3.0).sqrt();
    let e = metric(&r, "expected_radius");
    let err = metric(&r, "radius_max_error").max(metric(&r, "radius_min_error"));
    (
        (e - expected).abs() <= 1e-15 && err <= 1e-10,
        format!("radius={e:.12} sweep_err={err:.1e}"),
    )
}

fn ellipses() -> Verdict {
    let rot = check(
        "th_ellipse_rotation",
        json!({"n": 2, "p": 0, "j": 1, "psi": [1.0, 1.0], "alpha": 0.0, "truncation": 64}),
    );
    let minor = metric(&rot, "minor_axis");
    let major = metric(&rot, "major_axis");
    let shape_ok = (minor - 0.5f64.sqrt()).abs() <= 1e-10 && (major - 4.5f64.sqrt()).abs() <= 1e-10;
    let irr = check(
        "th_ellipse_irrational",
        json!({"theta": std::f64::consts::FRAC_1_SQRT_2, "n": 0, "m": 1}),
    );
    (
        rot.pass && shape_ok && irr.pass,
        format!(
            "rotation: foci_err={:.1e} minor={minor:.12} major={major:.12}; irrational: foci_err={:.1e} minor_err={:.1e}",
            metric(&rot, "foci_error"),
            metric(&irr, "foci_error"),
            metric(&irr, "minor_axis_error"),
        ),
    )
}

fn circle() -> Verdict {
    let r = check(
        "th_circle_3x3",
        json!({"psi": [1.0, 0.0, 1.0], "n": 2, "m1": 1, "m2": 2, "alpha": 0.0}),
    );
    let center = metric(&r, "center_dev");
    let matched = metric(&r, "formula_conventions_matched");
    (
        center <= 1e-8 && matched == 1.0,
        format!(
            "center_dev={center:.1e} radius={:.6} formula(printed index)={:.6} formula(mirrored index)={:.6} conventions_matched={matched}",
            metric(&r, "radius"),
            metric(&r, "radius_formula_printed_index"),
            metric(&r, "radius_formula_mirrored_index"),
        ),
    )
}

fn kernels() -> Verdict {
    let r = check(
        "adjoint_kernel",
        json!({"alpha": 0.0, "truncation": 128, "form_point": 0.5}),
    );
    let closed = metric(&r, "kernel_form_closed_re");
    let err = metric(&r, "kernel_form_error");
    let residual = metric(&r, "max_residual");
    (
        (closed - 36.0 / 49.0).abs() <= 1e-12 && err <= 1e-6 && residual <= 1e-5,
        format!("closed={closed:.12} matrix_err={err:.1e} adjoint_residual={residual:.1e}"),
    )
}

fn zeros() -> Verdict {
    let t3 = check("theo3_zero_interior", json!({"psi": [1.0, 1.0], "t": -1.0}));
    let margin = metric(&t3, "inner_margin_n32");
    let remark = check(
        "remark_counterexample",
        json!({"psi": [1.0, 0.25], "phi": [0.0, 0.5], "schedule": [16, 32, 64, 128]}),
    );
    let pivots: Vec<String> = [16, 32, 64, 128]
        .iter()
        .map(|n| format!("{:.3}", metric(&remark, &format!("certificate_pivot_n{n}"))))
        .collect();
    (
        margin >= 1e-3 && remark.pass,
        format!(
            "theo3 margin(N=32)={margin:.4}; counterexample certified outside for N=16..128 (scaled pivots {})",
            pivots.join(", ")
        ),
    )
}

fn mobius() -> Verdict {
    let r = check(
        "mobius_mean_value",
        json!({"degree": 8, "radial": 64, "angular": 128, "centers": [0.3, [0.0, 0.5], -0.6]}),
    );
    let err = metric(&r, "max_error");
    (r.pass && err <= 1e-8, format!("max_error={err:.1e}"))
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

/// Gram–Schmidt on the columns of a random matrix.
fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
    let m = random_matrix(rng, n);
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v: Vec<Complex64> = (0..n).map(|i| m[(i, j)]).collect();
        for q in &cols {
            let d: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            v.iter_mut().zip(q).for_each(|(x, y)| *x -= d * y);
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        v.iter_mut().for_each(|z| *z /= norm);
        cols.push(v);
    }
    CMatrix::from_fn(n, n, |i, j| cols[j][i])
}

fn properties() -> Verdict {
    // Monotone nesting of truncations.
    let re_z = BiPolySymbol::real_part_of_z();
    let psi = TruncatedSeries::from_real(&[1.0, 0.25, 0.1], 200);
    let phi = TruncatedSeries::from_poly(&[c(0.1, 0.1), c(0.5, 0.0), c(0.0, 0.2)], 200);
    let mut nesting = f64::INFINITY;
    for n in [16, 48, 80] {
        let pairs = [
            (
                build_toeplitz(&re_z, n, 0.5).unwrap(),
                build_toeplitz(&re_z, n + 32, 0.5).unwrap(),
            ),
            (
                build_weighted_composition(&psi, &phi, n, 0.0).unwrap(),
                build_weighted_composition(&psi, &phi, n + 32, 0.0).unwrap(),
            ),
        ];
        for (small, large) in pairs {
            let inner = boundary_points(&small.matrix, 180).unwrap();
            let outer = boundary_points(&large.matrix, 180).unwrap();
            nesting = nesting.min(nesting_margin(&inner, &outer));
        }
    }

    // Unitary invariance.
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut unitary = 0.0_f64;
    for _ in 0..5 {
        let a = random_matrix(&mut rng, 16);
        let u = random_unitary(&mut rng, 16);
        let b = u.adjoint().matmul(&a).unwrap().matmul(&u).unwrap();
        let ha = hull_of_boundary(&boundary_points(&a, 360).unwrap()).unwrap();
        let hb = hull_of_boundary(&boundary_points(&b, 360).unwrap()).unwrap();
        unitary = unitary.max(hull_hausdorff(&ha, &hb));
    }

    // 2×2 elliptical range oracle: analytic support points at the sweep angles.
    let mut oracle = 0.0_f64;
    for _ in 0..100 {
        let m = random_matrix(&mut rng, 2);
        let e = ellipse_from_2x2(&m).unwrap();
        let pts = boundary_points(&m, 360).unwrap();
        let predicted = convex_hull(&pts.iter().map(|b| e.support_point(b.theta)).collect::<Vec<_>>()).unwrap();
        oracle = oracle.max(hull_hausdorff(&hull_of_boundary(&pts).unwrap(), &predicted));
    }

    // Boundedness of n!Γ(nm+c)/((nm)!Γ(n+c)).
    let mut bounded = true;
    for m in [1, 2, 3, 5] {
        for cc in [1.1, 1.5, 2.0, 3.5] {
            bounded &= check("l11_bounded", json!({"m": m, "c": cc, "n_max": 64})).pass;
        }
    }
    (
        nesting >= -1e-9 && unitary <= 1e-8 && oracle <= 1e-7 && bounded,
        format!(
            "nesting_margin={nesting:.1e} unitary_hausdorff={unitary:.1e} oracle_hausdorff={oracle:.1e} l11_bounded={bounded}"
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("Bergman shift range at N=200", bergman_shift),
        ("regular polygon and segment ranges", polygon),
        ("|z|^2 Toeplitz diagonal", zsq),
        ("spectrum of T_{Re z}", spectrum),
        ("disc in W(C_{z,z^2})", disc_th1),
        ("disc from 2x2 compression", disc_th2),
        ("ellipses from 2x2 compressions", ellipses),
        ("3x3 circular compression", circle),
        ("kernel identities", kernels),
        ("zero containment", zeros),
        ("Mobius mean value", mobius),
        ("property suites", properties),
    ];
    let mut failed = Vec::new();
    for (k, (title, f)) in criteria.iter().enumerate() {
        let (ok, detail) = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(v) => v,
            Err(p) => {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                (false, format!("panicked: {msg}"))
            }
        };
        println!(
            "criterion {:>2} {} {title}: {detail}",
            k + 1,
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            failed.push(k + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
