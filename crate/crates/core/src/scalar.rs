//! Real scalar abstraction shared by every numerical module.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssign};

/// Floating-point type the linear-algebra core can run on.
///
/// The associated tolerances are the thresholds used by default validation;
/// they are tight for `f64` and relaxed to single precision for `f32`.
pub trait Real:
    Float + FloatConst + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Maximum entry of `|M - M†|` accepted as Hermitian.
    const HERMITIAN_TOL: Self;
    /// Maximum `|Tr ρ - 1|` accepted for a density operator.
    const TRACE_TOL: Self;
    /// Most negative eigenvalue accepted as positive semidefinite (magnitude).
    const PSD_TOL: Self;
    /// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
    const JACOBI_TOL: Self;
    /// Operator identities such as `Σ P² = I` or Kraus completeness.
    const IDENTITY_TOL: Self;
    /// Unitarity check for user supplied measurement frames.
    const UNITARY_TOL: Self;

    /// Converts an `f64` literal into this scalar.
    fn lit(v: f64) -> Self;

    fn to_f64_lossy(self) -> f64;
}

impl Real for f64 {
    const HERMITIAN_TOL: Self = 1e-12;
    const TRACE_TOL: Self = 1e-12;
    const PSD_TOL: Self = 1e-10;
    const JACOBI_TOL: Self = 1e-13;
    const IDENTITY_TOL: Self = 1e-12;
    const UNITARY_TOL: Self = 1e-10;

    #[inline]
    fn lit(v: f64) -> Self {
        v
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self
    }
}

impl Real for f32 {
    const HERMITIAN_TOL: Self = 1e-5;
    const TRACE_TOL: Self = 1e-5;
    const PSD_TOL: Self = 1e-4;
    const JACOBI_TOL: Self = 1e-6;
    const IDENTITY_TOL: Self = 1e-5;
    const UNITARY_TOL: Self = 1e-4;

    #[inline]
    fn lit(v: f64) -> Self {
        v as f32
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}

/// Complex amplitude over a [`Real`] scalar.
pub type C<T> = Complex<T>;

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn re<T: Real>(re: T) -> C<T> {
    Complex::new(re, T::zero())
}

/// `v log₂ v` with the `0 log 0 = 0` convention; non-positive inputs give 0.
#[inline]
pub fn xlog2x<T: Real>(v: T) -> T {
    if v > T::zero() {
        v * v.log2()
    } else {
        T::zero()
    }
}
