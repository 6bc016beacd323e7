//! Cyclic Jacobi diagonalization of complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies the real symmetric Jacobi rotation that annihilates
//! the now-real pivot:
//!
//! ```text
//! G = diag(1, conj(u)) · [[c, s], [-s, c]],   u = a_pq / |a_pq|
//! A ← G^H A G,   V ← V G
//! ```
//!
//! Sweeps visit pivots in row-major order `(0,1), (0,2), …, (d-2,d-1)`, so the
//! result is a deterministic function of the input.

use super::{c, CMatrix, Complex, HERMITIAN_TOL};
use crate::error::{Error, Result};

/// Sweep budget before [`Error::NoConvergence`].
pub const EIG_MAX_SWEEPS: usize = 100;
/// Off-diagonal Frobenius norm (relative to `max(1, ‖M‖_F)`) at which sweeps stop.
pub const EIG_OFF_DIAGONAL_TOL: f64 = 1e-12;
/// Components below this modulus are skipped when fixing eigenvector phases.
const PHASE_THRESHOLD: f64 = 1e-8;

/// Eigenvalues in descending order with matching unit eigenvectors as columns.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMatrix,
}

impl SpectralDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, k: usize) -> Vec<Complex> {
        self.eigenvectors.column(k)
    }

    /// `V · diag(f(λ)) · V^H`.
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let d = self.dim();
        let v = &self.eigenvectors;
        let mut out = CMatrix::zeros(d);
        for (k, &lam) in self.eigenvalues.iter().enumerate() {
            let w = f(lam);
            if w == 0.0 {
                continue;
            }
            for i in 0..d {
                let vik = v[(i, k)] * w;
                for j in 0..d {
                    out[(i, j)] += vik * v[(j, k)].conj();
                }
            }
        }
        out
    }

    /// `V · diag(λ) · V^H`.
    pub fn reconstruct(&self) -> CMatrix {
        self.apply_fn(|x| x)
    }
}

/// Diagonalizes a Hermitian matrix.
///
/// Fails with [`Error::NotHermitian`] when `max |M - M^H| > 1e-9` and with
/// [`Error::NoConvergence`] when the sweep budget runs out.
pub fn hermitian_eig(m: &CMatrix) -> Result<SpectralDecomposition> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let defect = m.hermitian_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let d = m.dim();
    // symmetrize so the iteration only sees an exactly Hermitian matrix
    let mut a = m.add(&m.adjoint())?.scale(c(0.5, 0.0));
    for i in 0..d {
        a[(i, i)] = c(a[(i, i)].re, 0.0);
    }
    let mut v = CMatrix::identity(d);
    let threshold = EIG_OFF_DIAGONAL_TOL * m.frobenius_norm().max(1.0);

    let mut converged = false;
    for _ in 0..=EIG_MAX_SWEEPS {
        if off_diagonal_norm(&a) < threshold {
            converged = true;
            break;
        }
        for p in 0..d {
            for q in (p + 1)..d {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(off_diagonal_norm(&a)));
    }

    let mut order: Vec<usize> = (0..d).collect();
    // stable: equal eigenvalues keep their diagonal position
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));

    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut eigenvectors = CMatrix::zeros(d);
    for (k, &src) in order.iter().enumerate() {
        let col = v.column(src);
        let phase = col
            .iter()
            .find(|z| z.norm() > PHASE_THRESHOLD)
            .map(|z| z.conj() / z.norm())
            .unwrap_or(c(1.0, 0.0));
        for (i, z) in col.into_iter().enumerate() {
            eigenvectors[(i, k)] = z * phase;
        }
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let d = a.dim();
    let mut acc = 0.0;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let u = apq / b;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * b);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let t = 1.0 / (theta.abs() + (theta * theta + 1.0).sqrt());
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let cs = 1.0 / (t * t + 1.0).sqrt();
    let sn = t * cs;
    let d = a.dim();

    // G_pp = c, G_pq = s, G_qp = -s·conj(u), G_qq = c·conj(u)
    let g_qp = -u.conj() * sn;
    let g_qq = u.conj() * cs;
    for k in 0..d {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * cs + akq * g_qp;
        a[(k, q)] = akp * sn + akq * g_qq;
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * cs + vkq * g_qp;
        v[(k, q)] = vkp * sn + vkq * g_qq;
    }
    for k in 0..d {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = apk * cs + aqk * g_qp.conj();
        a[(q, k)] = apk * sn + aqk * g_qq.conj();
    }
    a[(p, q)] = c(0.0, 0.0);
    a[(q, p)] = c(0.0, 0.0);
    a[(p, p)] = c(app - t * b, 0.0);
    a[(q, q)] = c(aqq + t * b, 0.0);
}
