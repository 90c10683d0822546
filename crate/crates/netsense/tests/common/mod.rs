//! Shared test oracles, deliberately independent of the library's numerical
//! paths: a Jacobi eigensolver instead of LAPACK, and Gaussian elimination
//! instead of the LU solver.

#![allow(dead_code)]

use ndarray::Array2;
use num_complex::Complex64;

/// Cyclic Jacobi eigensolver for small symmetric matrices. Returns
/// eigenvalues ascending with matching eigenvector columns.
pub fn jacobi_eigh(a: &Array2<f64>) -> (Vec<f64>, Array2<f64>) {
    let n = a.nrows();
    let mut d = a.clone();
    let mut v = Array2::<f64>::eye(n);
    for _sweep in 0..200 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += d[[i, j]] * d[[i, j]];
            }
        }
        if off.sqrt() < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if d[[p, q]].abs() < 1e-300 {
                    continue;
                }
                let theta = (d[[q, q]] - d[[p, p]]) / (2.0 * d[[p, q]]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let dkp = d[[k, p]];
                    let dkq = d[[k, q]];
                    d[[k, p]] = c * dkp - s * dkq;
                    d[[k, q]] = s * dkp + c * dkq;
                }
                for k in 0..n {
                    let dpk = d[[p, k]];
                    let dqk = d[[q, k]];
                    d[[p, k]] = c * dpk - s * dqk;
                    d[[q, k]] = s * dpk + c * dqk;
                }
                for k in 0..n {
                    let vkp = v[[k, p]];
                    let vkq = v[[k, q]];
                    v[[k, p]] = c * vkp - s * vkq;
                    v[[k, q]] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[[i, i]].total_cmp(&d[[j, j]]));
    let values: Vec<f64> = order.iter().map(|&i| d[[i, i]]).collect();
    let mut vectors = Array2::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        vectors.column_mut(dst).assign(&v.column(src));
    }
    (values, vectors)
}

/// Dense complex solve by Gaussian elimination with partial pivoting.
pub fn gauss_solve_complex(mut m: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Vec<Complex64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .unwrap();
        m.swap(col, pivot);
        b.swap(col, pivot);
        assert!(m[col][col].norm() > 1e-300, "singular oracle system");
        for row in (col + 1)..n {
            let factor = m[row][col] / m[col][col];
            for k in col..n {
                let sub = factor * m[col][k];
                m[row][k] -= sub;
            }
            let sub = factor * b[col];
            b[row] -= sub;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in (row + 1)..n {
            acc -= m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    x
}

/// `(g(iw) I - A) x = 1` solved entirely through the oracle path.
pub fn brute_force_node_response(
    a: &Array2<f64>,
    g_at_i_omega: Complex64,
) -> Vec<Complex64> {
    let n = a.nrows();
    let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = Complex64::new(-a[[i, j]], 0.0);
        }
        m[i][i] += g_at_i_omega;
    }
    gauss_solve_complex(m, vec![Complex64::new(1.0, 0.0); n])
}
