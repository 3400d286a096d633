use crate::error::{DensityViolation, Error, Result};
use crate::qmat::{hermitian_spectrum, ComplexMatrix};
use crate::scalar::{re, xlog2x, Real, C};

/// Thresholds for [`validate_density`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance<T> {
    pub hermitian: T,
    pub trace: T,
    /// Eigenvalues down to `-psd` are accepted.
    pub psd: T,
}

impl<T: Real> Default for Tolerance<T> {
    fn default() -> Self {
        Self { hermitian: T::HERMITIAN_TOL, trace: T::TRACE_TOL, psd: T::PSD_TOL }
    }
}

impl<T: Real> Tolerance<T> {
    /// Hermiticity and trace at `tol`, PSD at `100 · tol` (the default ratio).
    pub fn scaled(tol: T) -> Self {
        Self { hermitian: tol, trace: tol, psd: tol * T::lit(100.0) }
    }
}

/// Which factor of a bipartite system to keep in a partial trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator<T: Real> {
    mat: ComplexMatrix<T>,
}

impl<T: Real> DensityOperator<T> {
    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.mat
    }

    /// `I / n`.
    pub fn maximally_mixed(n: usize) -> Self {
        Self { mat: ComplexMatrix::identity(n).scale(T::one() / T::from(n).unwrap()) }
    }

    /// `|ψ⟩⟨ψ|` for a (not necessarily normalized) nonzero vector.
    pub fn pure(psi: &[C<T>]) -> Result<Self> {
        let norm2: T = psi.iter().map(|z| z.norm_sqr()).sum();
        if !(norm2 > T::zero()) {
            return Err(Error::Domain("pure state vector has zero norm".into()));
        }
        let n = psi.len();
        let mat = ComplexMatrix::from_fn(n, n, |i, j| psi[i] * psi[j].conj() / norm2);
        Ok(Self { mat })
    }

    pub fn spectrum(&self) -> Result<Vec<T>> {
        hermitian_spectrum(&self.mat)
    }

    pub fn partial_trace(&self, keep: Subsystem, dims: (usize, usize)) -> Result<Self> {
        let mat = partial_trace_matrix(&self.mat, keep, dims)?;
        Ok(Self { mat })
    }

    pub fn entropy(&self) -> Result<T> {
        von_neumann_entropy(self)
    }

    /// Wraps a matrix that is a density operator by construction (e.g. a
    /// product or partial trace of valid operators).
    pub(crate) fn from_trusted(mat: ComplexMatrix<T>) -> Self {
        Self { mat }
    }
}

/// Checks Hermiticity, unit trace and positivity, reporting the first
/// violated invariant with its magnitude.
pub fn validate_density<T: Real>(m: ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<DensityOperator<T>> {
    let violation = |v| Err(Error::InvalidDensity(v));
    if !m.is_square() {
        return violation(DensityViolation::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    if !m.is_finite() {
        return violation(DensityViolation::NonFinite);
    }
    let defect = m.hermitian_defect();
    if defect > tol.hermitian {
        return violation(DensityViolation::Hermiticity {
            defect: defect.to_f64_lossy(),
            tol: tol.hermitian.to_f64_lossy(),
        });
    }
    let tr = m.trace().re;
    if (tr - T::one()).abs() > tol.trace {
        return violation(DensityViolation::Trace { trace: tr.to_f64_lossy(), tol: tol.trace.to_f64_lossy() });
    }
    let spec = hermitian_spectrum(&m)?;
    let min = spec.first().copied().unwrap_or_else(T::zero);
    if min < -tol.psd {
        return violation(DensityViolation::Psd { min_eigenvalue: min.to_f64_lossy(), tol: tol.psd.to_f64_lossy() });
    }
    Ok(DensityOperator { mat: m })
}

/// Partial trace of a matrix on `C^dA ⊗ C^dB` (composite index `a·dB + b`).
pub fn partial_trace_matrix<T: Real>(
    m: &ComplexMatrix<T>,
    keep: Subsystem,
    (da, db): (usize, usize),
) -> Result<ComplexMatrix<T>> {
    if !m.is_square() || da * db != m.rows() {
        return Err(Error::Dimension(format!(
            "partial trace over {da}x{db} does not fit a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let zero = re(T::zero());
    Ok(match keep {
        Subsystem::A => ComplexMatrix::from_fn(da, da, |a, a2| {
            (0..db).fold(zero, |acc, b| acc + m[(a * db + b, a2 * db + b)])
        }),
        Subsystem::B => ComplexMatrix::from_fn(db, db, |b, b2| {
            (0..da).fold(zero, |acc, a| acc + m[(a * db + b, a * db + b2)])
        }),
    })
}

/// `Tr_{other}` of a density operator.
pub fn partial_trace<T: Real>(
    rho: &DensityOperator<T>,
    keep: Subsystem,
    dims: (usize, usize),
) -> Result<DensityOperator<T>> {
    rho.partial_trace(keep, dims)
}

/// Shannon entropy in bits of a list of eigenvalues (negative round-off ignored).
pub fn entropy_of_spectrum<T: Real>(values: &[T]) -> T {
    -values.iter().map(|&v| xlog2x(v)).sum::<T>()
}

/// `-Tr ρ log₂ ρ`.
pub fn von_neumann_entropy<T: Real>(rho: &DensityOperator<T>) -> Result<T> {
    Ok(entropy_of_spectrum(&rho.spectrum()?))
}
