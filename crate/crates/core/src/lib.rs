//! Super quantum discord for two-qudit states with maximally mixed marginals.
//!
//! The crate builds the Gell-Mann state families, rotated weak-measurement
//! families on subsystem A, and evaluates mutual information, measured
//! (classical) correlation and super-quantum-discord upper bounds, both in
//! closed form and through a dense eigendecomposition pipeline. A bit-flip
//! channel on the `{|0⟩, |1⟩}` block of subsystem A is provided for the
//! dynamics.
//!
//! Numerical modules are generic over [`Real`]; the aliases below fix the
//! scalar to `f64`, which is what the search and statistics layers use.

// `!(a <= b)` rejects NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channels;
pub mod error;
pub mod qmat;
pub mod random;
pub mod scalar;
pub mod sqd;
pub mod sud_basis;
pub mod weakmeas;

pub use error::{DensityViolation, Error, Result};
pub use scalar::Real;

/// `f64` complex matrix.
pub type CMatrix = qmat::ComplexMatrix<f64>;
/// `f64` density operator.
pub type Density = qmat::DensityOperator<f64>;
/// `f64` weak-measurement family.
pub type Family = weakmeas::WeakMeasurementFamily<f64>;
pub type DiagSpec = sud_basis::DiagCorrelationSpec<f64>;
pub type BlockSpec = sud_basis::BlockCorrelationSpec<f64>;
pub type Report = sqd::CorrelationReport<f64>;
pub type Channel = channels::KrausChannel<f64>;
