use num_complex::Complex64;

use super::tridiag::{eigenvector, largest_eigenvalue};
use crate::error::{Error, Result};
use crate::matrix::CMatrix;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Default relative residual tolerance for [`hermitian_extreme_eig`].
pub const DEFAULT_EIG_TOL: f64 = 1e-12;

/// Largest eigenvalue of a Hermitian matrix and a unit eigenvector.
///
/// Householder reduction to tridiagonal form, a diagonal phase change that
/// makes the off-diagonal real, Sturm bisection for the eigenvalue and
/// inverse iteration for the vector. The returned eigenvalue is the Rayleigh
/// quotient of the returned vector, and the residual `‖Hv − λv‖` is checked
/// against `tol·‖H‖_F`.
pub fn hermitian_extreme_eig(h: &CMatrix, tol: f64) -> Result<(f64, Vec<Complex64>)> {
    let n = h.rows();
    if !h.is_square() || n == 0 {
        return Err(Error::usage(format!(
            "eigensolver needs a non-empty square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let scale = h.frobenius_norm();
    if !scale.is_finite() {
        return Err(Error::numeric("matrix has non-finite entries"));
    }
    if h.hermitian_defect() > 1e-12 * scale {
        return Err(Error::usage(format!(
            "matrix is not Hermitian: defect {:e} exceeds 1e-12·‖H‖",
            h.hermitian_defect()
        )));
    }
    if scale == 0.0 {
        let mut v = vec![ZERO; n];
        v[0] = Complex64::new(1.0, 0.0);
        return Ok((0.0, v));
    }

    let (diag, sub, reflectors) = tridiagonalize(h);
    let mut phase = vec![Complex64::new(1.0, 0.0); n];
    let mut off = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n.saturating_sub(1) {
        let b = sub[k];
        let m = b.norm();
        phase[k + 1] = if m > 0.0 { phase[k] * (b / m) } else { phase[k] };
        off.push(m);
    }
    let top = largest_eigenvalue(&diag, &off);
    let x = eigenvector(&diag, &off, top);
    let mut v: Vec<Complex64> = x.iter().zip(&phase).map(|(x, d)| d * *x).collect();
    for (start, u) in reflectors.iter().rev() {
        let tail = &mut v[*start..];
        let dot: Complex64 = u.iter().zip(tail.iter()).map(|(a, b)| a.conj() * b).sum();
        for (t, a) in tail.iter_mut().zip(u) {
            *t -= a * dot * 2.0;
        }
    }
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if !(norm.is_finite() && norm > 0.0) {
        return Err(Error::numeric("inverse iteration produced a degenerate vector"));
    }
    v.iter_mut().for_each(|z| *z /= norm);

    let hv = h.mul_vec(&v);
    let lambda: f64 = v.iter().zip(&hv).map(|(a, b)| (a.conj() * b).re).sum();
    let residual = hv
        .iter()
        .zip(&v)
        .map(|(a, b)| (a - b * lambda).norm_sqr())
        .sum::<f64>()
        .sqrt();
    if !(residual <= tol * scale) {
        return Err(Error::numeric(format!(
            "eigenvector residual {residual:e} exceeds {tol:e}·‖H‖ = {:e}",
            tol * scale
        )));
    }
    Ok((lambda, v))
}

/// Smallest scaled Cholesky pivot `d_k / h_kk` of a Hermitian matrix with
/// positive diagonal; positive iff `H` is positive definite. The diagonal
/// scaling keeps the test reliable on strongly graded matrices whose
/// smallest eigenvalue is far below `ε‖H‖`. Returns the first non-positive
/// scaled pivot on failure.
pub fn positive_definite_margin(h: &CMatrix) -> Result<f64> {
    let n = h.rows();
    if !h.is_square() || n == 0 {
        return Err(Error::usage("definiteness test needs a non-empty square matrix"));
    }
    let diag: Vec<f64> = (0..n).map(|i| h[(i, i)].re).collect();
    if let Some(d) = diag.iter().find(|d| !(**d > 0.0)) {
        return Ok(d.min(0.0));
    }
    // Factor D^{-1/2} H D^{-1/2} = L L*.
    let s: Vec<f64> = diag.iter().map(|d| d.sqrt()).collect();
    let mut l = vec![ZERO; n * n];
    let mut worst = f64::INFINITY;
    for j in 0..n {
        let mut pivot = 1.0;
        for k in 0..j {
            pivot -= l[j * n + k].norm_sqr();
        }
        worst = worst.min(pivot);
        if !(pivot > 0.0) {
            return Ok(pivot);
        }
        let root = pivot.sqrt();
        l[j * n + j] = Complex64::new(root, 0.0);
        for i in j + 1..n {
            let mut v = h[(i, j)] / (s[i] * s[j]);
            for k in 0..j {
                v -= l[i * n + k] * l[j * n + k].conj();
            }
            l[i * n + j] = v / root;
        }
    }
    Ok(worst)
}

type Reflector = (usize, Vec<Complex64>);

/// Unitary reduction `H = Q T Q*` with `Q = P_0 P_1 ⋯`, each
/// `P_k = I − 2uu*` acting on indices `start..`. Returns the real diagonal,
/// the complex subdiagonal and the reflectors.
fn tridiagonalize(h: &CMatrix) -> (Vec<f64>, Vec<Complex64>, Vec<Reflector>) {
    let n = h.rows();
    let mut a: Vec<Complex64> = h.as_slice().to_vec();
    let mut reflectors = Vec::new();
    let mut p = vec![ZERO; n];
    for k in 0..n.saturating_sub(2) {
        let start = k + 1;
        let m = n - start;
        let x0 = a[start * n + k];
        let tail_sq: f64 = (start + 1..n).map(|i| a[i * n + k].norm_sqr()).sum();
        if tail_sq == 0.0 {
            continue;
        }
        let xnorm = (x0.norm_sqr() + tail_sq).sqrt();
        let ph = if x0.norm() > 0.0 {
            x0 / x0.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let alpha = -ph * xnorm;
        let mut u: Vec<Complex64> = (start..n).map(|i| a[i * n + k]).collect();
        u[0] -= alpha;
        let unorm = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        u.iter_mut().for_each(|z| *z /= unorm);

        // p = B u, K = u*Bu, q = p − K u, B ← B − 2(u q* + q u*)
        let p = &mut p[..m];
        for (i, pi) in p.iter_mut().enumerate() {
            let row = &a[(start + i) * n + start..(start + i) * n + n];
            *pi = row.iter().zip(&u).map(|(b, x)| b * x).sum();
        }
        let kk: f64 = u.iter().zip(p.iter()).map(|(x, y)| (x.conj() * y).re).sum();
        for (pi, ui) in p.iter_mut().zip(&u) {
            *pi -= ui * kk;
        }
        for i in 0..m {
            let ui2 = u[i] * 2.0;
            let qi2 = p[i] * 2.0;
            let row = &mut a[(start + i) * n + start..(start + i) * n + n];
            for ((b, uj), qj) in row.iter_mut().zip(&u).zip(p.iter()) {
                *b -= ui2 * qj.conj() + qi2 * uj.conj();
            }
        }
        a[start * n + k] = alpha;
        a[k * n + start] = alpha.conj();
        for i in start + 1..n {
            a[i * n + k] = ZERO;
            a[k * n + i] = ZERO;
        }
        reflectors.push((start, u));
    }
    let diag = (0..n).map(|i| a[i * n + i].re).collect();
    let sub = (0..n.saturating_sub(1)).map(|i| a[(i + 1) * n + i]).collect();
    (diag, sub, reflectors)
}
