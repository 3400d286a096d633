//! Effective polarization `θ` of the conditional states and its maximum
//! over the rotated measurement family.

use crate::error::Result;
use crate::qmat::{hermitian_eigen, ComplexMatrix};
use crate::scalar::{re, Real};
use crate::weakmeas::ZVector;

/// `θ = √(Σ c_i² z_i²) · tanh|x|`.
pub fn theta_diag<T: Real>(c: [T; 3], z: &ZVector<T>, x: T) -> T {
    let s: T = (0..3).map(|i| (c[i] * z.0[i]).powi(2)).sum();
    s.sqrt() * x.abs().tanh()
}

/// Index of the largest `|c_i|`, lowest index on ties.
pub fn dominant_index<T: Real>(c: [T; 3]) -> usize {
    let mut best = 0;
    for i in 1..3 {
        if c[i].abs() > c[best].abs() {
            best = i;
        }
    }
    best
}

/// `max_z θ = max|c_i| · tanh|x|`, attained at `z = e_k` for the dominant index.
pub fn theta_diag_max<T: Real>(c: [T; 3], x: T) -> (T, ZVector<T>) {
    let k = dominant_index(c);
    (c[k].abs() * x.abs().tanh(), ZVector::axis(k))
}

/// `θ̄ = ‖Tᵀ z‖ · tanh|x|`.
pub fn theta_bar<T: Real>(t: &[[T; 3]; 3], z: &ZVector<T>, x: T) -> T {
    let s: T = (0..3)
        .map(|j| {
            let v: T = (0..3).map(|i| t[i][j] * z.0[i]).sum();
            v * v
        })
        .sum();
    s.sqrt() * x.abs().tanh()
}

/// Largest Euclidean row norm of `T`.
pub fn max_row_norm<T: Real>(t: &[[T; 3]; 3]) -> T {
    t.iter().map(|r| r.iter().map(|&v| v * v).sum::<T>().sqrt()).fold(T::zero(), T::max)
}

/// Exact `max_z θ̄ = σ_max(T) · tanh|x|` with the maximizing `z` taken as
/// the top eigenvector of `T Tᵀ`.
pub fn theta_bar_max<T: Real>(t: &[[T; 3]; 3], x: T) -> Result<(T, ZVector<T>)> {
    let (s, z) = top_singular(t)?;
    Ok((s * x.abs().tanh(), z))
}

/// `σ_max(T)` and the top eigenvector of `T Tᵀ`.
pub(crate) fn top_singular<T: Real>(t: &[[T; 3]; 3]) -> Result<(T, ZVector<T>)> {
    let gram = ComplexMatrix::from_fn(3, 3, |i, k| re((0..3).map(|j| t[i][j] * t[k][j]).sum::<T>()));
    let eig = hermitian_eigen(&gram)?;
    let top = eig.values[2].max(T::zero());
    let v = eig.vectors.column(2);
    // Real symmetric input keeps eigenvectors real up to a global phase.
    let phase = v.iter().max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap()).map(|z| z.conj() / z.norm()).unwrap();
    let z: [T; 3] = std::array::from_fn(|i| (v[i] * phase).re);
    let n = z.iter().map(|&a| a * a).sum::<T>().sqrt();
    let z = ZVector([z[0] / n, z[1] / n, z[2] / n]);
    Ok((top.sqrt(), z))
}
