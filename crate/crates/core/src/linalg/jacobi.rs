use super::SquareMatrix;
use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-12;
const RELATIVE_OFF_NORM: f64 = 1e-11;
const MAX_SWEEPS: usize = 60;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sorted descending.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// `1e-11 · ‖m‖_F`.
pub fn sym_eigenvalues(m: &SquareMatrix) -> Result<Vec<f64>> {
    let n = m.order();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (m.get(i, j), m.get(j, i));
            if (a - b).abs() > SYMMETRY_TOL * a.abs().max(b.abs()).max(1.0) {
                return Err(Error::Contract(format!(
                    "matrix is not symmetric at ({i}, {j}): {a} vs {b}"
                )));
            }
        }
    }

    let mut a = m.as_slice().to_vec();
    let threshold = RELATIVE_OFF_NORM * m.frobenius_norm();
    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        if off_diagonal_norm(&a, n) <= threshold {
            converged = true;
            break;
        }
        sweep(&mut a, n);
    }
    if !converged {
        return Err(Error::Numeric(format!(
            "Jacobi did not converge in {MAX_SWEEPS} sweeps (order {n})"
        )));
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    sum.sqrt()
}

fn sweep(a: &mut [f64], n: usize) {
    for p in 0..n {
        for q in p + 1..n {
            let apq = a[p * n + q];
            if apq == 0.0 {
                continue;
            }
            let app = a[p * n + p];
            let aqq = a[q * n + q];
            let theta = (aqq - app) / (2.0 * apq);
            let t = if theta.is_finite() {
                let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                sign / (theta.abs() + theta.hypot(1.0))
            } else {
                0.0
            };
            if t == 0.0 {
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                continue;
            }
            let c = 1.0 / t.hypot(1.0);
            let s = t * c;

            a[p * n + p] = app - t * apq;
            a[q * n + q] = aqq + t * apq;
            a[p * n + q] = 0.0;
            a[q * n + p] = 0.0;
            for k in 0..n {
                if k == p || k == q {
                    continue;
                }
                let akp = a[k * n + p];
                let akq = a[k * n + q];
                let new_p = c * akp - s * akq;
                let new_q = s * akp + c * akq;
                a[k * n + p] = new_p;
                a[p * n + k] = new_p;
                a[k * n + q] = new_q;
                a[q * n + k] = new_q;
            }
        }
    }
}
