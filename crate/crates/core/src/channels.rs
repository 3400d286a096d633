//! Kraus channels acting locally on subsystem A.
//!
//! The built-in channel keeps the state with probability `γ` and otherwise
//! swaps `|0⟩ ↔ |1⟩` on A, leaving `|2⟩ … |d-1⟩` alone. It is a bit flip on
//! that block; [`phase_damping_kraus`] is kept as an alias of [`bitflip01`]
//! because the same channel goes by both names.

use crate::error::{Error, Result};
use crate::qmat::{tensor, ComplexMatrix, DensityOperator};
use crate::scalar::{c, xlog2x, Real};
use crate::sqd::{sqd_upper_bound_diag, CorrelationReport, SearchOptions};
use crate::sud_basis::{build_diag_state, closed_form_spectrum_diag3, DiagCorrelationSpec};

#[derive(Clone, Debug, PartialEq)]
pub struct KrausChannel<T: Real> {
    d: usize,
    kraus: Vec<ComplexMatrix<T>>,
}

impl<T: Real> KrausChannel<T> {
    /// Validates shapes and `Σ E_i† E_i = I`.
    pub fn new(kraus: Vec<ComplexMatrix<T>>) -> Result<Self> {
        let Some(first) = kraus.first() else {
            return Err(Error::Dimension("a channel needs at least one Kraus operator".into()));
        };
        let d = first.rows();
        if kraus.iter().any(|k| !k.is_square() || k.rows() != d) {
            return Err(Error::Dimension(format!("Kraus operators must all be {d}×{d}")));
        }
        let sum = kraus.iter().fold(ComplexMatrix::zeros(d, d), |acc, k| &acc + &(&k.adjoint() * k));
        let defect = sum.max_abs_diff(&ComplexMatrix::identity(d));
        if !(defect <= T::IDENTITY_TOL) {
            return Err(Error::IncompleteKraus { defect: defect.to_f64_lossy() });
        }
        Ok(Self { d, kraus })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn kraus(&self) -> &[ComplexMatrix<T>] {
        &self.kraus
    }

    /// `‖Σ E_i† E_i - I‖_max`.
    pub fn completeness_defect(&self) -> T {
        let sum = self.kraus.iter().fold(ComplexMatrix::zeros(self.d, self.d), |acc, k| &acc + &(&k.adjoint() * k));
        sum.max_abs_diff(&ComplexMatrix::identity(self.d))
    }
}

/// `E₀ = √γ I`, `E₁ = √(1-γ) (X ⊕ I_{d-2})`.
pub fn bitflip01<T: Real>(gamma: T, d: usize) -> Result<KrausChannel<T>> {
    if !(gamma >= T::zero() && gamma <= T::one()) {
        return Err(Error::Domain(format!("γ must lie in [0, 1], got {gamma}")));
    }
    if d < 2 {
        return Err(Error::Dimension(format!("channel needs d ≥ 2, got {d}")));
    }
    let flip = ComplexMatrix::from_fn(d, d, |i, j| {
        let target = match j {
            0 => 1,
            1 => 0,
            _ => j,
        };
        if i == target { c(T::one(), T::zero()) } else { c(T::zero(), T::zero()) }
    });
    KrausChannel::new(vec![ComplexMatrix::identity(d).scale(gamma.sqrt()), flip.scale((T::one() - gamma).sqrt())])
}

/// Alias of [`bitflip01`].
pub fn phase_damping_kraus<T: Real>(gamma: T, d: usize) -> Result<KrausChannel<T>> {
    bitflip01(gamma, d)
}

/// `Σ_i (E_i ⊗ I) ρ (E_i ⊗ I)†`.
pub fn apply_channel_local_a<T: Real>(rho: &DensityOperator<T>, ch: &KrausChannel<T>) -> Result<DensityOperator<T>> {
    let n = rho.dim();
    if !n.is_multiple_of(ch.d) {
        return Err(Error::Dimension(format!("state of dimension {n} does not factor with d_A = {}", ch.d)));
    }
    let m = n / ch.d;
    let mut out = ComplexMatrix::zeros(n, n);
    let id = ComplexMatrix::identity(m);
    for k in ch.kraus() {
        out = &out + &tensor(k, &id)?.conjugate(rho.matrix());
    }
    let herm = (&out + &out.adjoint()).scale(T::lit(0.5));
    Ok(DensityOperator::from_trusted(herm))
}

/// `(c₁, (2γ-1)c₂, (2γ-1)c₃)`.
pub fn evolved_diag_coeffs<T: Real>(c: [T; 3], gamma: T) -> [T; 3] {
    let f = gamma + gamma - T::one();
    [c[0], f * c[1], f * c[2]]
}

/// The spec after the channel; generators outside `{|0⟩, |1⟩}` are untouched.
pub fn evolved_diag_spec<T: Real>(spec: &DiagCorrelationSpec<T>, gamma: T) -> Result<DiagCorrelationSpec<T>> {
    if !(gamma >= T::zero() && gamma <= T::one()) {
        return Err(Error::Domain(format!("γ must lie in [0, 1], got {gamma}")));
    }
    Ok(spec.with_sigma123(evolved_diag_coeffs(spec.sigma123(), gamma)))
}

/// Closed-form spectrum of the evolved three-coefficient state.
pub fn evolved_spectrum<T: Real>(c: [T; 3], gamma: T, d: usize) -> Vec<(T, usize)> {
    closed_form_spectrum_diag3(evolved_diag_coeffs(c, gamma), d)
}

/// `I(ρ̃) - (2/d²) H(c̄ tanh|x|)` with `c̄ = max{|c₁|, |(2γ-1)c₂|, |(2γ-1)c₃|}`.
pub fn sqd_bound_after_channel<T: Real>(spec: &DiagCorrelationSpec<T>, gamma: T, x: T) -> Result<CorrelationReport<T>> {
    sqd_upper_bound_diag(&evolved_diag_spec(spec, gamma)?, x)
}

/// `bound(ρ) - bound(ρ̃)` from the closed forms.
pub fn channel_gap_general<T: Real>(spec: &DiagCorrelationSpec<T>, gamma: T, x: T) -> Result<T> {
    let before = sqd_upper_bound_diag(spec, x)?;
    let after = sqd_bound_after_channel(spec, gamma, x)?;
    Ok(before.sqd_upper_bound - after.sqd_upper_bound)
}

/// Same gap, with the channel applied numerically, `I` from eigenvalues and
/// `J̃` from the special-family lattice search.
pub fn channel_gap_oracle(spec: &DiagCorrelationSpec<f64>, gamma: f64, x: f64, opts: &SearchOptions) -> Result<f64> {
    let d = spec.d();
    let rho = build_diag_state(spec)?;
    let evolved = apply_channel_local_a(&rho, &bitflip01(gamma, d)?)?;
    let sd = |r: &DensityOperator<f64>| -> Result<f64> {
        let i = crate::sqd::mutual_information(r, (d, d))?;
        let j = crate::sqd::classical_correlation_search(r, x, opts)?.special_value;
        Ok(i - j)
    };
    Ok(sd(&rho)? - sd(&evolved)?)
}

fn check_unit<T: Real>(name: &str, v: T) -> Result<()> {
    if !(v >= T::zero() && v <= T::one()) {
        return Err(Error::Domain(format!("{name} must lie in [0, 1], got {v}")));
    }
    Ok(())
}

/// Werner-state gap
/// `¼[(1-c)log₂(1-c) + (1+3c)log₂(1+3c) - (1-c+4γc)log₂(1-c+4γc) - (1+3c-4γc)log₂(1+3c-4γc)]`.
pub fn werner_gap_t<T: Real>(c: T, gamma: T) -> Result<T> {
    check_unit("c", c)?;
    check_unit("γ", gamma)?;
    let (one, three, four) = (T::one(), T::lit(3.0), T::lit(4.0));
    let g = four * gamma * c;
    let v = xlog2x(one - c) + xlog2x(one + three * c) - xlog2x(one - c + g) - xlog2x(one + three * c - g);
    Ok(v / four)
}

/// `∂T/∂γ = c log₂[(1+3c-4γc)/(1-c+4γc)]`; vanishes at `γ = ½`.
pub fn werner_gap_slope<T: Real>(c: T, gamma: T) -> Result<T> {
    check_unit("c", c)?;
    check_unit("γ", gamma)?;
    let g = T::lit(4.0) * gamma * c;
    let num = T::one() + T::lit(3.0) * c - g;
    let den = T::one() - c + g;
    if c == T::zero() {
        return Ok(T::zero());
    }
    Ok(c * (num / den).log2())
}
