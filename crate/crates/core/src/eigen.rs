//! Cyclic Jacobi eigensolver for dense symmetric matrices.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
pub const RELATIVE_TOLERANCE: f64 = 1e-12;

/// Eigenvalues (unsorted, in diagonal order) and optionally the eigenvectors
/// as matrix columns.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Option<DMatrix<f64>>,
    pub sweeps: usize,
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Runs cyclic Jacobi sweeps over `(p, q)` in row order until the
/// off-diagonal Frobenius norm drops below `1e-12 · (1 + ‖M‖_F)`.
///
/// Only the lower triangle matters for the result; the input is read as given
/// and is expected to be exactly symmetric.
pub fn jacobi_eigen(m: &DMatrix<f64>, with_vectors: bool) -> Result<Eigen> {
    let n = m.nrows();
    if n == 0 || m.ncols() != n {
        return Err(Error::Precondition(format!("need a nonempty square matrix, got {}x{}", m.nrows(), m.ncols())));
    }
    // row-major working copy
    let mut a: Vec<f64> = (0..n * n).map(|k| m[(k / n, k % n)]).collect();
    let mut v: Vec<f64> = if with_vectors {
        (0..n * n).map(|k| if k / n == k % n { 1.0 } else { 0.0 }).collect()
    } else {
        Vec::new()
    };
    let threshold = RELATIVE_TOLERANCE * (1.0 + m.norm());

    for sweep in 0..=MAX_SWEEPS {
        if off_diagonal_norm(&a, n) < threshold {
            let values = (0..n).map(|i| a[i * n + i]).collect();
            let vectors = with_vectors.then(|| DMatrix::from_row_slice(n, n, &v));
            return Ok(Eigen { values, vectors, sweeps: sweep });
        }
        if sweep == MAX_SWEEPS {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // A ← A J
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                // A ← Jᵀ A
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                if with_vectors {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}
