//! One-sided (Hestenes) Jacobi singular value decomposition.
//!
//! Columns of the working matrix are rotated pairwise until every pair is
//! orthogonal to working precision. The column norms are then the singular
//! values, the normalized columns the left singular vectors, and the
//! accumulated rotations the right singular vectors. Left vectors belonging
//! to (numerically) zero singular values are filled in by Gram-Schmidt, so
//! `u` is always a full unitary.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// `a = u * diag(singular_values) * v^dagger`, singular values descending.
///
/// For an `m x n` input, `u` is `m x m`, `v` is `n x n`, and there are
/// `min(m, n)` singular values.
#[derive(Debug, Clone)]
pub struct Svd {
    pub singular_values: Vec<f64>,
    pub u: DMatrix<Complex64>,
    pub v: DMatrix<Complex64>,
}

fn column_dot(a: &DMatrix<Complex64>, p: usize, q: usize) -> Complex64 {
    a.column(p).iter().zip(a.column(q).iter()).map(|(x, y)| x.conj() * y).sum()
}

fn column_norm_sqr(a: &DMatrix<Complex64>, p: usize) -> f64 {
    a.column(p).iter().map(|z| z.norm_sqr()).sum()
}

/// Applies the rotation `[a_p, a_q] <- [c a_p - s w a_q, s a_p + c w a_q]`.
fn rotate(m: &mut DMatrix<Complex64>, p: usize, q: usize, c: f64, s: f64, w: Complex64) {
    for i in 0..m.nrows() {
        let x = m[(i, p)];
        let y = m[(i, q)] * w;
        m[(i, p)] = x * c - y * s;
        m[(i, q)] = x * s + y * c;
    }
}

pub fn jacobi_svd(a: &DMatrix<Complex64>) -> Result<Svd> {
    let (rows, cols) = a.shape();
    if cols > rows {
        // a^dagger = v s u^dagger
        let t = jacobi_svd(&a.adjoint())?;
        return Ok(Svd {
            singular_values: t.singular_values,
            u: t.v,
            v: t.u,
        });
    }
    let mut work = a.clone();
    let mut v = DMatrix::<Complex64>::identity(cols, cols);
    let eps = f64::EPSILON;
    // columns this small are rounding noise; rotating them cannot converge
    let negligible = eps * a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let negligible_sqr = negligible * negligible;

    let mut converged = cols < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..cols {
            for q in p + 1..cols {
                let alpha = column_norm_sqr(&work, p);
                let beta = column_norm_sqr(&work, q);
                let gamma = column_dot(&work, p, q);
                let g = gamma.norm();
                if alpha <= negligible_sqr || beta <= negligible_sqr || g <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // phase that makes the pair's inner product real and positive
                let w = gamma.conj() / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate(&mut work, p, q, c, s, w);
                rotate(&mut v, p, q, c, s, w);
            }
        }
        converged = !rotated;
    }
    if !converged {
        return Err(Error::DecompositionFailure("Jacobi SVD did not converge"));
    }

    let norms: Vec<f64> = (0..cols).map(|p| column_norm_sqr(&work, p).sqrt()).collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&x, &y| norms[y].total_cmp(&norms[x]));

    let k = rows.min(cols);
    let largest = norms.iter().copied().fold(0.0, f64::max);
    let null_threshold = largest * eps * (rows.max(cols) as f64);

    let v_sorted = DMatrix::from_fn(cols, cols, |i, j| v[(i, order[j])]);
    let singular_values: Vec<f64> = order[..k].iter().map(|&j| norms[j]).collect();

    let mut u_cols: Vec<Vec<Complex64>> = Vec::with_capacity(rows);
    for &j in &order[..k] {
        if norms[j] > null_threshold && norms[j] > 0.0 {
            u_cols.push(work.column(j).iter().map(|z| z / norms[j]).collect());
        } else {
            break;
        }
    }
    complete_orthonormal(&mut u_cols, rows);
    let u = DMatrix::from_fn(rows, rows, |i, j| u_cols[j][i]);

    Ok(Svd {
        singular_values,
        u,
        v: v_sorted,
    })
}

/// Extends orthonormal vectors to a basis of `C^dim` using the computational
/// basis vectors in order, with two passes of Gram-Schmidt.
fn complete_orthonormal(basis: &mut Vec<Vec<Complex64>>, dim: usize) {
    let mut candidate = 0;
    while basis.len() < dim && candidate < dim {
        let mut e = vec![Complex64::new(0.0, 0.0); dim];
        e[candidate] = Complex64::new(1.0, 0.0);
        candidate += 1;
        for _ in 0..2 {
            for b in basis.iter() {
                let proj: Complex64 = b.iter().zip(&e).map(|(x, y)| x.conj() * y).sum();
                for (ei, bi) in e.iter_mut().zip(b) {
                    *ei -= proj * bi;
                }
            }
        }
        let norm = e.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.5 / (dim as f64).sqrt() {
            basis.push(e.into_iter().map(|z| z / norm).collect());
        }
    }
}

/// Singular values only, descending.
pub fn singular_values(a: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    Ok(jacobi_svd(a)?.singular_values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::max_abs_diff;

    fn check(a: &DMatrix<Complex64>, tol: f64) -> Svd {
        let svd = jacobi_svd(a).unwrap();
        let (m, n) = a.shape();
        let mut s = DMatrix::zeros(m, n);
        for (i, &x) in svd.singular_values.iter().enumerate() {
            s[(i, i)] = Complex64::new(x, 0.0);
        }
        assert!(max_abs_diff(&(&svd.u * s * svd.v.adjoint()), a) < tol);
        assert!(max_abs_diff(&(svd.u.adjoint() * &svd.u), &DMatrix::identity(m, m)) < tol);
        assert!(max_abs_diff(&(svd.v.adjoint() * &svd.v), &DMatrix::identity(n, n)) < tol);
        assert!(svd.singular_values.windows(2).all(|w| w[0] >= w[1]));
        svd
    }

    fn z(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_and_zero() {
        let d = DMatrix::from_row_slice(2, 2, &[z(0.6, 0.0), z(0.0, 0.0), z(0.0, 0.0), z(0.8, 0.0)]);
        let svd = check(&d, 1e-15);
        assert_eq!(svd.singular_values, vec![0.8, 0.6]);
        let zero = DMatrix::<Complex64>::zeros(3, 3);
        let svd = check(&zero, 1e-15);
        assert_eq!(svd.singular_values, vec![0.0; 3]);
    }

    #[test]
    fn complex_rank_one_with_tiny_tail() {
        // outer product plus an 1e-9 perturbation in an orthogonal direction
        let a = DMatrix::from_row_slice(
            2,
            2,
            &[z(0.3, 0.4), z(-0.2, 0.1), z(0.6, -0.2), z(0.1, 0.5)],
        );
        let svd = check(&a, 1e-15);
        assert!(svd.singular_values[1] > 0.0);
        let u = DMatrix::from_row_slice(2, 1, &[z(0.6, 0.0), z(0.0, 0.8)]);
        let w = DMatrix::from_row_slice(1, 2, &[z(0.8, 0.0), z(0.0, -0.6)]);
        let tail = DMatrix::from_row_slice(2, 1, &[z(0.0, 0.8), z(0.6, 0.0)])
            * DMatrix::from_row_slice(1, 2, &[z(0.6, 0.0), z(0.0, 0.8)]);
        let b = u * w + tail.scale(1e-9);
        let svd = check(&b, 1e-15);
        assert!((svd.singular_values[0] - 1.0).abs() < 1e-15);
        assert!((svd.singular_values[1] - 1e-9).abs() < 1e-22);
    }

    #[test]
    fn rectangular_shapes() {
        let wide = DMatrix::from_fn(2, 5, |i, j| z((i * 5 + j) as f64 * 0.1, (i as f64) - (j as f64) * 0.3));
        let svd = check(&wide, 1e-14);
        assert_eq!(svd.singular_values.len(), 2);
        let tall = wide.adjoint();
        let svd_t = check(&tall, 1e-14);
        for (a, b) in svd.singular_values.iter().zip(&svd_t.singular_values) {
            assert!((a - b).abs() < 1e-14);
        }
    }
}
