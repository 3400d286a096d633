//! Cyclic Jacobi eigensolver for dense complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies the real symmetric Jacobi rotation, so the
//! accumulated transform stays unitary and the diagonal stays real.

use crate::error::{Error, Result};
use crate::qmat::ComplexMatrix;
use crate::scalar::{c, re, Real};

const MAX_SWEEPS: usize = 64;

/// Eigenvalues in ascending order with eigenvectors stored as columns.
#[derive(Clone, Debug)]
pub struct HermitianEigen<T: Real> {
    pub values: Vec<T>,
    pub vectors: ComplexMatrix<T>,
}

impl<T: Real> HermitianEigen<T> {
    /// `V diag(λ) V†`.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let n = self.values.len();
        let scaled = ComplexMatrix::from_fn(n, n, |i, j| self.vectors[(i, j)] * self.values[j]);
        &scaled * &self.vectors.adjoint()
    }
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn hermitian_eigen<T: Real>(m: &ComplexMatrix<T>) -> Result<HermitianEigen<T>> {
    let (values, vectors) = jacobi(m, true)?;
    Ok(HermitianEigen { values, vectors: vectors.expect("vectors requested") })
}

/// All eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_spectrum<T: Real>(m: &ComplexMatrix<T>) -> Result<Vec<T>> {
    jacobi(m, false).map(|(v, _)| v)
}

fn check_hermitian<T: Real>(m: &ComplexMatrix<T>) -> Result<()> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("eigenproblem needs a square matrix, got {}x{}", m.rows(), m.cols())));
    }
    let defect = m.hermitian_defect();
    let scale = T::one().max(m.max_abs());
    if !(defect <= T::HERMITIAN_TOL * scale) {
        return Err(Error::NotHermitian { defect: defect.to_f64_lossy() });
    }
    Ok(())
}

fn off_diagonal_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi<T: Real>(m: &ComplexMatrix<T>, want_vectors: bool) -> Result<(Vec<T>, Option<ComplexMatrix<T>>)> {
    check_hermitian(m)?;
    let n = m.rows();
    // Work on the exactly Hermitian part.
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * T::lit(0.5));
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n));
    let stop = T::JACOBI_TOL * T::one().max(a.frobenius_norm());

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= stop {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, v.as_mut(), p, q);
            }
        }
    }
    if !converged {
        let off = off_diagonal_norm(&a);
        if off > stop {
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS, off: off.to_f64_lossy() });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).expect("finite eigenvalues"));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = v.map(|v| ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]));
    Ok((values, vectors))
}

fn rotate<T: Real>(a: &mut ComplexMatrix<T>, v: Option<&mut ComplexMatrix<T>>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r <= T::min_positive_value() {
        return;
    }
    let n = a.rows();
    let phase = apq / r; // e^{iφ}
    let phase_conj = phase.conj();

    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (r + r);
    let t = if theta.abs() > T::lit(1e150) {
        T::one() / (theta + theta)
    } else {
        let sign = if theta < T::zero() { -T::one() } else { T::one() };
        sign / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let cs = T::one() / (t * t + T::one()).sqrt();
    let sn = t * cs;

    // G = diag(1, e^{-iφ}) · [[c, s], [-s, c]] on the (p, q) plane.
    let g_qp = phase_conj * (-sn);
    let g_qq = phase_conj * cs;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * cs + akq * g_qp;
        a[(k, q)] = akp * sn + akq * g_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * cs - phase * aqk * sn;
        a[(q, k)] = apk * sn + phase * aqk * cs;
    }
    a[(p, q)] = c(T::zero(), T::zero());
    a[(q, p)] = c(T::zero(), T::zero());
    a[(p, p)] = re(a[(p, p)].re);
    a[(q, q)] = re(a[(q, q)].re);

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * cs + vkq * g_qp;
            v[(k, q)] = vkp * sn + vkq * g_qq;
        }
    }
}
