//! Real symmetric tridiagonal kernels: Sturm bisection, inverse iteration and
//! an implicit QL sweep that tracks only the first eigenvector row.

use crate::error::{Error, Result};

/// Number of eigenvalues strictly below `x` (Sturm sequence count).
fn count_below(diag: &[f64], off: &[f64], x: f64, pivmin: f64) -> usize {
    let mut count = 0;
    let mut q = diag[0] - x;
    if q.abs() < pivmin {
        q = -pivmin;
    }
    if q < 0.0 {
        count += 1;
    }
    for k in 1..diag.len() {
        q = diag[k] - x - off[k - 1] * off[k - 1] / q;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn gershgorin(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for k in 0..n {
        let left = if k > 0 { off[k - 1].abs() } else { 0.0 };
        let right = if k + 1 < n { off[k].abs() } else { 0.0 };
        lo = lo.min(diag[k] - left - right);
        hi = hi.max(diag[k] + left + right);
    }
    (lo, hi)
}

/// Largest eigenvalue of the tridiagonal matrix with diagonal `diag` and
/// sub/super-diagonal `off` (`off.len() == diag.len() − 1`).
pub(crate) fn largest_eigenvalue(diag: &[f64], off: &[f64]) -> f64 {
    let n = diag.len();
    if n == 1 {
        return diag[0];
    }
    let (mut lo, mut hi) = gershgorin(diag, off);
    let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
    let pivmin = f64::MIN_POSITIVE.max(f64::EPSILON * f64::EPSILON * scale * scale) / scale.max(1.0);
    lo -= 2.0 * f64::EPSILON * scale;
    hi += 2.0 * f64::EPSILON * scale;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 2.0 * f64::EPSILON * scale {
            break;
        }
        if count_below(diag, off, mid, pivmin) < n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Solves `(T − λI) x = b` in place with partial pivoting; tiny pivots are
/// replaced by `tiny` so that inverse iteration at an exact eigenvalue still
/// produces a finite, dominant eigenvector component.
fn shifted_solve(diag: &[f64], off: &[f64], lambda: f64, b: &mut [f64], tiny: f64) {
    let n = diag.len();
    // Row k of U holds (u0, u1, u2) at columns (k, k+1, k+2).
    let mut u = vec![[0.0_f64; 3]; n];
    let mut cur = [diag[0] - lambda, if n > 1 { off[0] } else { 0.0 }, 0.0];
    for k in 0..n {
        if k + 1 == n {
            if cur[0].abs() < tiny {
                cur[0] = tiny;
            }
            u[k] = cur;
            break;
        }
        let next = [off[k], diag[k + 1] - lambda, if k + 2 < n { off[k + 1] } else { 0.0 }];
        if next[0].abs() > cur[0].abs() {
            // swap rows k and k+1
            let factor = cur[0] / next[0];
            u[k] = next;
            b.swap(k, k + 1);
            b[k + 1] -= factor * b[k];
            cur = [cur[1] - factor * next[1], cur[2] - factor * next[2], 0.0];
        } else {
            if cur[0].abs() < tiny {
                cur[0] = tiny;
            }
            let factor = next[0] / cur[0];
            u[k] = cur;
            b[k + 1] -= factor * b[k];
            cur = [next[1] - factor * cur[1], next[2] - factor * cur[2], 0.0];
        }
    }
    for k in (0..n).rev() {
        let mut s = b[k];
        if k + 1 < n {
            s -= u[k][1] * b[k + 1];
        }
        if k + 2 < n {
            s -= u[k][2] * b[k + 2];
        }
        b[k] = s / u[k][0];
    }
}

/// Unit eigenvector for the eigenvalue `lambda` by inverse iteration.
pub(crate) fn eigenvector(diag: &[f64], off: &[f64], lambda: f64) -> Vec<f64> {
    let n = diag.len();
    if n == 1 {
        return vec![1.0];
    }
    let norm = diag
        .iter()
        .map(|d| d.abs())
        .chain(off.iter().map(|e| e.abs()))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let tiny = f64::EPSILON * norm;
    // A non-symmetric start avoids accidental orthogonality to the target.
    let mut x: Vec<f64> = (0..n).map(|k| 1.0 + 0.1 * ((k * 7919) % 13) as f64 / 13.0).collect();
    for _ in 0..4 {
        shifted_solve(diag, off, lambda, &mut x, tiny);
        let s = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !(s.is_finite() && s > 0.0) {
            break;
        }
        x.iter_mut().for_each(|v| *v /= s);
    }
    x
}

/// Eigenvalues and squared first eigenvector components of a symmetric
/// tridiagonal matrix (Golub–Welsch needs nothing else). Implicit QL with
/// Wilkinson shifts; eigenvalues returned in ascending order.
pub(crate) fn eigen_first_components(diag: &[f64], off: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::numeric("tridiagonal QL iteration did not converge"));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let values = idx.iter().map(|&k| d[k]).collect();
    let weights = idx.iter().map(|&k| z[k] * z[k]).collect();
    Ok((values, weights))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laplacian_extremes() {
        // tridiag(−1, 2, −1) has eigenvalues 2 − 2cos(kπ/(n+1))
        let n = 40;
        let d = vec![2.0; n];
        let e = vec![-1.0; n - 1];
        let top = largest_eigenvalue(&d, &e);
        let exact = 2.0 - 2.0 * (n as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos();
        assert!((top - exact).abs() < 1e-13);
        let v = eigenvector(&d, &e, top);
        for k in 0..n {
            let mut r = d[k] * v[k] - top * v[k];
            if k > 0 {
                r += e[k - 1] * v[k - 1];
            }
            if k + 1 < n {
                r += e[k] * v[k + 1];
            }
            assert!(r.abs() < 1e-12);
        }
        let (vals, w) = eigen_first_components(&d, &e).unwrap();
        assert!((vals[n - 1] - exact).abs() < 1e-12);
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn split_matrix_eigenvector() {
        let d = [1.0, 3.0, 3.0];
        let e = [0.0, 0.0];
        let top = largest_eigenvalue(&d, &e);
        assert!((top - 3.0).abs() < 1e-14);
        let v = eigenvector(&d, &e, top);
        assert!(v[0].abs() < 1e-12);
        assert!((v[1] * v[1] + v[2] * v[2] - 1.0).abs() < 1e-12);
    }
}
