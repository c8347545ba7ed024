//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.
//!
//! Each sweep visits every off-diagonal pair `(p, q)` once and applies the
//! plane rotation that zeroes `a[p][q]`. The Frobenius norm is invariant
//! under the rotations, so convergence is measured as the off-diagonal
//! Frobenius norm relative to the (fixed) full norm.

use super::matrix::DenseSymMatrix;
use super::spectrum::SpectrumMultiset;
use crate::error::{Error, Result};

/// Convergence threshold on `off(A) / ||A||_F`.
pub const RELATIVE_OFF_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

fn off_norm(a: &[f64], k: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..k {
        for q in p + 1..k {
            let x = a[p * k + q];
            sum += 2.0 * x * x;
        }
    }
    sum.sqrt()
}

/// All eigenvalues of `m`, ascending.
pub fn symmetric_eigenvalues(m: &DenseSymMatrix) -> Result<SpectrumMultiset> {
    let k = m.order();
    let mut work = m.clone();
    let a = work.data_mut();
    let target = RELATIVE_OFF_TOL * m.frobenius_norm();

    let mut converged = off_norm(a, k) <= target;
    let mut sweep = 0;
    while !converged {
        if sweep == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweep += 1;
        for p in 0..k {
            for q in p + 1..k {
                let apq = a[p * k + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * k + p];
                let aqq = a[q * k + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * k + p] = app - t * apq;
                a[q * k + q] = aqq + t * apq;
                a[p * k + q] = 0.0;
                a[q * k + p] = 0.0;
                for r in 0..k {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * k + p];
                    let arq = a[r * k + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * k + p] = new_rp;
                    a[p * k + r] = new_rp;
                    a[r * k + q] = new_rq;
                    a[q * k + r] = new_rq;
                }
            }
        }
        converged = off_norm(a, k) <= target;
    }

    let values = (0..k).map(|i| a[i * k + i]).collect();
    Ok(SpectrumMultiset::new(values))
}
