//! Characteristic polynomials and Durand–Kerner root finding for the small
//! (possibly non-symmetric) quotient matrices.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::SquareMatrix;
use crate::error::{Error, Result};

const MAX_ORDER: usize = 8;
const MAX_ITERATIONS: usize = 500;
const RESIDUAL_TOL: f64 = 1e-12;
const IMAGINARY_TOL: f64 = 1e-7;
/// Relative distance under which root approximations are candidates for one
/// multiple root. A root of multiplicity `m` scatters by about `eps^(1/m)`.
const CLUSTER_TOL: f64 = 2e-2;
/// A candidate cluster of size `m` is merged only if its polished centre
/// has relative residual below this for `p` and its first `m - 1`
/// derivatives.
const MULTIPLICITY_TOL: f64 = 1e-9;

/// Coefficients of `det(xI - m)`, lowest degree first; the last entry is 1.
///
/// Faddeev–LeVerrier recursion. Integer matrices of the sizes used here give
/// exactly integral coefficients.
pub fn characteristic_polynomial(m: &SquareMatrix) -> Vec<f64> {
    let n = m.order();
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut aux = SquareMatrix::zeros(n);
    for k in 1..=n {
        let mut next = m.mul(&aux);
        for i in 0..n {
            next.set(i, i, next.get(i, i) + coeffs[n - k + 1]);
        }
        coeffs[n - k] = -m.mul(&next).trace() / k as f64;
        aux = next;
    }
    coeffs
}

fn eval(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| k as f64 * c)
        .collect()
}

/// `|p(z)| / Σ|c_k| max(1,|z|)^k`, the backward error of `z` as a root.
/// Clamping `|z|` at 1 keeps the measure meaningful for roots at zero.
fn relative_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let m = z.norm().max(1.0);
    let scale = coeffs.iter().rev().fold(0.0, |acc, &c| acc * m + c.abs());
    if scale == 0.0 {
        0.0
    } else {
        eval(coeffs, z).norm() / scale
    }
}

/// All complex roots of a monic polynomial (lowest degree first) by
/// simultaneous Durand–Kerner iteration.
///
/// Starting points are the n-th roots of unity scaled by `1 + max|c_k|`.
/// Approximations that cluster around a multiple root are replaced by the
/// cluster mean, refined by Newton steps on the matching derivative.
pub fn polynomial_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    if coeffs[n] != 1.0 {
        return Err(Error::Contract("polynomial must be monic".to_string()));
    }
    let radius = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64))
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut biggest_step = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(f64::EPSILON, f64::EPSILON);
            }
            let step = eval(coeffs, z[i]) / denom;
            z[i] -= step;
            biggest_step = biggest_step.max(step.norm() / (1.0 + z[i].norm()));
        }
        if biggest_step < 1e-15 {
            break;
        }
    }

    let worst = z
        .iter()
        .map(|&r| relative_residual(coeffs, r))
        .fold(0.0f64, f64::max);
    if worst.is_nan() || worst >= RESIDUAL_TOL {
        return Err(Error::Numeric(format!(
            "Durand-Kerner residual {worst:e} above {RESIDUAL_TOL:e}"
        )));
    }

    Ok(polish_clusters(coeffs, z))
}

fn polish_clusters(coeffs: &[f64], mut z: Vec<Complex64>) -> Vec<Complex64> {
    let n = z.len();
    let mut cluster: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while c[r] != r {
            r = c[r];
        }
        c[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let scale = 1.0 + z[i].norm().max(z[j].norm());
            if (z[i] - z[j]).norm() < CLUSTER_TOL * scale {
                let (a, b) = (find(&mut cluster, i), find(&mut cluster, j));
                cluster[a.max(b)] = a.min(b);
            }
        }
    }
    for root in 0..n {
        let members: Vec<usize> = (0..n).filter(|&i| find(&mut cluster, i) == root).collect();
        if members.len() < 2 {
            continue;
        }
        let mean = members.iter().map(|&i| z[i]).sum::<Complex64>() / members.len() as f64;
        // A root of multiplicity m is a simple root of the (m-1)-th derivative.
        let mut chain = vec![coeffs.to_vec()];
        for _ in 1..=members.len() {
            let next = derivative(chain.last().expect("non-empty"));
            chain.push(next);
        }
        let (target, slope) = (&chain[members.len() - 1], &chain[members.len()]);
        let mut x = mean;
        for _ in 0..50 {
            let d = eval(slope, x);
            if d.norm() == 0.0 {
                break;
            }
            let step = eval(target, x) / d;
            let size = step.norm();
            if size.is_nan() || size >= CLUSTER_TOL * (1.0 + x.norm()) {
                break;
            }
            x -= step;
            if step.norm() <= f64::EPSILON * (1.0 + x.norm()) {
                break;
            }
        }
        let multiple = chain[..members.len()]
            .iter()
            .all(|c| relative_residual(c, x) < MULTIPLICITY_TOL);
        if multiple {
            for &i in &members {
                z[i] = x;
            }
        }
    }
    z
}

/// Eigenvalues of a small general matrix whose spectrum is known to be
/// real, sorted descending.
///
/// Fails with a contract error for orders above 8 or when a root has an
/// imaginary part above `1e-7`, which for a quotient matrix signals a
/// partition that was not equitable.
pub fn small_eigenvalues(m: &SquareMatrix) -> Result<Vec<f64>> {
    if m.order() > MAX_ORDER {
        return Err(Error::Contract(format!(
            "small eigensolver handles order <= {MAX_ORDER}, got {}",
            m.order()
        )));
    }
    let roots = polynomial_roots(&characteristic_polynomial(m))?;
    if let Some(bad) = roots.iter().find(|r| r.im.abs() >= IMAGINARY_TOL) {
        return Err(Error::Contract(format!(
            "complex eigenvalue {} {:+}i in a spectrum expected to be real",
            bad.re, bad.im
        )));
    }
    let mut values: Vec<f64> = roots.iter().map(|r| r.re).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_two_by_two() {
        let m = SquareMatrix::from_rows(&[[0.0, 1.0], [2.0, 0.0]]).unwrap();
        assert_eq!(characteristic_polynomial(&m), vec![-2.0, 0.0, 1.0]);
    }

    #[test]
    fn scalar_and_sqrt_two() {
        let one = SquareMatrix::from_rows(&[[2.0]]).unwrap();
        assert_eq!(small_eigenvalues(&one).unwrap(), vec![2.0]);
        let m = SquareMatrix::from_rows(&[[0.0, 1.0], [2.0, 0.0]]).unwrap();
        let ev = small_eigenvalues(&m).unwrap();
        assert!((ev[0] - 2f64.sqrt()).abs() < 1e-12);
        assert!((ev[1] + 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn cone_over_regular_graph_quotient() {
        // Quotient of a regular graph joined to one apex, p = 6, r = 3.
        let m = SquareMatrix::from_rows(&[[4.0, 1.0], [6.0, 0.0]]).unwrap();
        let ev = small_eigenvalues(&m).unwrap();
        let s = 10f64.sqrt();
        assert!((ev[0] - (2.0 + s)).abs() < 1e-12);
        assert!((ev[1] - (2.0 - s)).abs() < 1e-12);
    }

    #[test]
    fn repeated_roots_are_accurate() {
        // (x - 1)^3 (x + 2)^2
        let m = SquareMatrix::from_fn(5, |i, j| {
            if i != j {
                0.0
            } else if i < 3 {
                1.0
            } else {
                -2.0
            }
        });
        let ev = small_eigenvalues(&m).unwrap();
        for (got, want) in ev.iter().zip([1.0, 1.0, 1.0, -2.0, -2.0]) {
            assert!((got - want).abs() < 1e-10, "{ev:?}");
        }
    }

    #[test]
    fn high_multiplicity() {
        // J - I of order 6: 5 and (-1)^5.
        let m = SquareMatrix::from_fn(6, |i, j| if i == j { 0.0 } else { 1.0 });
        let ev = small_eigenvalues(&m).unwrap();
        assert!((ev[0] - 5.0).abs() < 1e-12);
        assert!(ev[1..].iter().all(|v| (v + 1.0).abs() < 1e-12), "{ev:?}");
    }

    #[test]
    fn close_simple_roots_stay_apart() {
        // (x - 1)(x - 1.001)(x + 3)
        let (a, b, c) = (1.0, 1.001, -3.0);
        let coeffs = [-a * b * c, a * b + a * c + b * c, -(a + b + c), 1.0];
        let mut roots: Vec<f64> = polynomial_roots(&coeffs)
            .unwrap()
            .iter()
            .map(|z| z.re)
            .collect();
        roots.sort_by(f64::total_cmp);
        assert!(
            (roots[1] - a).abs() < 1e-9 && (roots[2] - b).abs() < 1e-9,
            "{roots:?}"
        );
    }

    #[test]
    fn zero_root() {
        let m =
            SquareMatrix::from_rows(&[[0.0, 6.0, 0.0], [6.0, 4.0, 6.0], [0.0, 8.0, 0.0]]).unwrap();
        let ev = small_eigenvalues(&m).unwrap();
        // x (x^2 - 4x - 84)
        let r = 88f64.sqrt();
        assert!((ev[0] - (2.0 + r)).abs() < 1e-12);
        assert!(ev[1].abs() < 1e-12);
        assert!((ev[2] - (2.0 - r)).abs() < 1e-12);
    }

    #[test]
    fn rotation_has_complex_spectrum() {
        let m = SquareMatrix::from_rows(&[[0.0, -1.0], [1.0, 0.0]]).unwrap();
        assert!(matches!(small_eigenvalues(&m), Err(Error::Contract(_))));
    }

    #[test]
    fn order_limit() {
        assert!(matches!(
            small_eigenvalues(&SquareMatrix::zeros(9)),
            Err(Error::Contract(_))
        ));
    }
}
