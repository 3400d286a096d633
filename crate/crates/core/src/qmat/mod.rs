//! Dense complex matrix core: Kronecker products, partial traces, Hermitian
//! spectra and von Neumann entropies.

mod density;
mod eigen;
mod matrix;

pub use density::{
    entropy_of_spectrum, partial_trace, partial_trace_matrix, validate_density, von_neumann_entropy,
    DensityOperator, Subsystem, Tolerance,
};
pub use eigen::{hermitian_eigen, hermitian_spectrum, HermitianEigen};
pub use matrix::{tensor, ComplexMatrix};
