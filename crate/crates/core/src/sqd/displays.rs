//! Correlation triples for pure states and classically correlated states.
//!
//! The stated triples are `(2E, E, E)` and `(I(p), I(p), 0)`; they carry no
//! strength dependence, so finite-`x` numerics are offered separately.

use crate::error::{Error, Result};
use crate::qmat::{DensityOperator, ComplexMatrix};
use crate::scalar::{c, xlog2x, Real};

use super::measures::{classical_mutual_information, mutual_information, validate_distribution};
use super::search::{classical_correlation_search, SearchOptions};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationTriple<T> {
    pub mutual_info: T,
    pub classical: T,
    pub discord: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PureStateCorrelations<T: Real> {
    /// Entanglement entropy `-Σ |a_j|² log₂ |a_j|²`.
    pub entropy: T,
    pub stated: CorrelationTriple<T>,
    pub state: DensityOperator<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalStateCorrelations<T: Real> {
    pub mutual_info_p: T,
    pub stated: CorrelationTriple<T>,
    pub state: DensityOperator<T>,
}

/// `Σ_j a_j |jj⟩` with real Schmidt amplitudes.
pub fn pure_state_correlations<T: Real>(schmidt: &[T]) -> Result<PureStateCorrelations<T>> {
    let d = schmidt.len();
    if d < 2 {
        return Err(Error::Dimension("need at least two Schmidt amplitudes".into()));
    }
    let norm: T = schmidt.iter().map(|&a| a * a).sum();
    if !((norm - T::one()).abs() <= T::TRACE_TOL) {
        return Err(Error::Domain(format!("Schmidt amplitudes have squared norm {norm}, expected 1")));
    }
    let e = T::zero() - schmidt.iter().map(|&a| xlog2x(a * a)).sum::<T>();
    let mut psi = vec![c(T::zero(), T::zero()); d * d];
    for (j, &a) in schmidt.iter().enumerate() {
        psi[j * d + j] = c(a, T::zero());
    }
    Ok(PureStateCorrelations {
        entropy: e,
        stated: CorrelationTriple { mutual_info: e + e, classical: e, discord: e },
        state: DensityOperator::pure(&psi)?,
    })
}

/// `Σ_ij p_ij |i⟩⟨i| ⊗ |j⟩⟨j|` for a square joint distribution.
pub fn classical_state_correlations<T: Real>(p: &[Vec<T>]) -> Result<ClassicalStateCorrelations<T>> {
    validate_distribution(p)?;
    let d = p.len();
    if p[0].len() != d {
        return Err(Error::Dimension(format!("expected a {d}×{d} distribution")));
    }
    let i = classical_mutual_information(p)?;
    let m = ComplexMatrix::from_fn(d * d, d * d, |r, q| if r == q { c(p[r / d][r % d], T::zero()) } else { c(T::zero(), T::zero()) });
    Ok(ClassicalStateCorrelations {
        mutual_info_p: i,
        stated: CorrelationTriple { mutual_info: i, classical: i, discord: T::zero() },
        state: DensityOperator::from_trusted(m),
    })
}

/// Numerical `(I, J, SD)` at strength `x`, with `J` from the search (a lower
/// bound, so `SD` is an upper bound).
pub fn finite_strength_correlations(rho: &DensityOperator<f64>, x: f64, opts: &SearchOptions) -> Result<CorrelationTriple<f64>> {
    let n = rho.dim();
    let d = (n as f64).sqrt().round() as usize;
    let i = mutual_information(rho, (d, d))?;
    let j = classical_correlation_search(rho, x, opts)?.value;
    Ok(CorrelationTriple { mutual_info: i, classical: j, discord: i - j })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_state_examples() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bell = pure_state_correlations(&[h, h]).unwrap();
        assert!((bell.entropy - 1.0).abs() < 1e-14);
        assert!((bell.stated.mutual_info - 2.0).abs() < 1e-14);
        let i = mutual_information(&bell.state, (2, 2)).unwrap();
        assert!((i - 2.0).abs() < 1e-10);
        let prod = pure_state_correlations(&[1.0, 0.0]).unwrap();
        assert_eq!(prod.stated, CorrelationTriple { mutual_info: 0.0, classical: 0.0, discord: 0.0 });
        let u = 1.0 / 3f64.sqrt();
        assert!((pure_state_correlations(&[u, u, u]).unwrap().entropy - 3f64.log2()).abs() < 1e-12);
        assert!(pure_state_correlations(&[0.5, 0.5]).is_err());
    }

    #[test]
    fn classical_state_examples() {
        let diag: Vec<Vec<f64>> = (0..3).map(|i| (0..3).map(|j| if i == j { 1.0 / 3.0 } else { 0.0 }).collect()).collect();
        let r = classical_state_correlations(&diag).unwrap();
        assert!((r.mutual_info_p - 3f64.log2()).abs() < 1e-12);
        assert_eq!(r.stated.discord, 0.0);
        assert!((mutual_information(&r.state, (3, 3)).unwrap() - r.mutual_info_p).abs() < 1e-10);
        let uni = vec![vec![0.25f64; 2]; 2];
        assert!(classical_state_correlations(&uni).unwrap().mutual_info_p.abs() < 1e-15);
    }

    #[test]
    fn finite_strength_bell_is_reported() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bell = pure_state_correlations(&[h, h]).unwrap();
        let opts = SearchOptions { restarts: 2, lattice_points: 200, ..SearchOptions::default() };
        let t = finite_strength_correlations(&bell.state, 30.0, &opts).unwrap();
        assert!((t.mutual_info - 2.0).abs() < 1e-9);
        assert!(t.classical > 0.0 && t.discord > 0.0);
    }
}
