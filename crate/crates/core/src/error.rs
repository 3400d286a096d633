use thiserror::Error;

/// Which density-operator invariant failed and by how much.
#[derive(Debug, Clone, PartialEq)]
pub enum DensityViolation {
    NonSquare { rows: usize, cols: usize },
    NonFinite,
    /// Largest entry of `|M - M†|`.
    Hermiticity { defect: f64, tol: f64 },
    /// Trace deviation from 1.
    Trace { trace: f64, tol: f64 },
    /// Smallest eigenvalue below `-tol`.
    Psd { min_eigenvalue: f64, tol: f64 },
}

impl std::fmt::Display for DensityViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DensityViolation::NonSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            DensityViolation::NonFinite => write!(f, "matrix has non-finite entries"),
            DensityViolation::Hermiticity { defect, tol } => {
                write!(f, "Hermiticity defect {defect:.3e} exceeds {tol:.1e}")
            }
            DensityViolation::Trace { trace, tol } => {
                write!(f, "trace {trace} deviates from 1 by more than {tol:.1e}")
            }
            DensityViolation::Psd { min_eigenvalue, tol } => {
                write!(f, "smallest eigenvalue {min_eigenvalue:.6e} is below -{tol:.1e}")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("invalid density operator: {0}")]
    InvalidDensity(DensityViolation),

    #[error("matrix is not Hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("frame is not unitary (defect {defect:.3e})")]
    NotUnitary { defect: f64 },

    #[error("Kraus operators are not complete (defect {defect:.3e})")]
    IncompleteKraus { defect: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("inadmissible state: {0}")]
    Inadmissible(String),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("empty sample set: {0}")]
    EmptySample(String),
}

impl Error {
    /// True for errors that mean "this state is not a valid density operator".
    pub fn is_inadmissible(&self) -> bool {
        matches!(self, Error::InvalidDensity(DensityViolation::Psd { .. }) | Error::Inadmissible(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
