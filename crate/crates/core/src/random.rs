//! Seeded random sampling of matrices, states and measurement orientations.
//!
//! Used by the property suites; all draws are made in `f64` and converted.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::qmat::{ComplexMatrix, DensityOperator};
use crate::scalar::{c, Real, C};
use crate::sud_basis::diag3_taus;
use crate::weakmeas::Orientation;

fn gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> C<T> {
    let a: f64 = rng.sample(StandardNormal);
    let b: f64 = rng.sample(StandardNormal);
    c(T::lit(a), T::lit(b))
}

/// Random Hermitian matrix with Gaussian entries.
pub fn hermitian<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix<T> {
    let g = ComplexMatrix::from_fn(n, n, |_, _| gaussian(rng));
    (&g + &g.adjoint()).scale(T::lit(0.5))
}

/// Haar-random unitary from Gram–Schmidt on a complex Ginibre matrix.
pub fn unitary<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix<T> {
    let mut cols: Vec<Vec<C<T>>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<C<T>> = (0..n).map(|_| gaussian(rng)).collect();
        for u in &cols {
            let proj = u.iter().zip(&v).fold(c(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b);
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= proj * ui;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if norm > T::lit(1e-6) {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    ComplexMatrix::from_fn(n, n, |i, j| cols[j][i])
}

/// Full-rank random mixed state `G G† / Tr(G G†)`.
pub fn density<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> DensityOperator<T> {
    let g = ComplexMatrix::from_fn(n, n, |_, _| gaussian(rng));
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    DensityOperator::from_trusted(m.scale(T::one() / tr))
}

/// Uniformly distributed unit quaternion.
pub fn orientation<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Orientation<T> {
    loop {
        let q: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
        let n = q.iter().map(|v| v * v).sum::<f64>().sqrt();
        if n > 1e-6 {
            return Orientation::new(T::lit(q[0] / n), T::lit(q[1] / n), T::lit(q[2] / n), T::lit(q[3] / n))
                .expect("normalized quaternion");
        }
    }
}

/// Coefficients `(c₁, c₂, c₃)` uniform on the admissible region inside `[-1, 1]³`.
pub fn admissible_coeffs<T: Real, R: Rng + ?Sized>(rng: &mut R) -> [T; 3] {
    loop {
        let cs: [T; 3] = std::array::from_fn(|_| T::lit(rng.random_range(-1.0..=1.0)));
        if diag3_taus(cs).iter().all(|&t| t >= T::zero()) {
            return cs;
        }
    }
}
