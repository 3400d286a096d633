//! Closed-form mutual information, special-family classical correlation and
//! super-quantum-discord upper bounds, cross-checked against the eigen pipeline.

use crate::error::{Error, Result};
use crate::qmat::DensityOperator;
use crate::scalar::{xlog2x, Real};
use crate::sud_basis::{build_block_state, build_diag_state, diag3_taus, BlockCorrelationSpec, DiagCorrelationSpec};
use crate::weakmeas::{build_special_family, entropic_h, Orientation, ZVector};

use super::measures::{measured_mutual_information, mutual_information};
use super::theta::{dominant_index, max_row_norm, top_singular};

/// Strength above which `tanh` saturates to 1 in both supported precisions.
const SATURATED_X: f64 = 40.0;

/// Prefactor in `J̃ = k(d) H(θ*)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EntropyFactor {
    /// `2/d²`, what the eigendecomposition produces.
    #[default]
    Derived,
    /// `2/d`, kept for comparison only.
    Printed,
}

impl EntropyFactor {
    pub fn value<T: Real>(self, d: usize) -> T {
        let d = T::from(d).unwrap();
        match self {
            Self::Derived => T::lit(2.0) / (d * d),
            Self::Printed => T::lit(2.0) / d,
        }
    }
}

/// Measurement strength: finite `x`, or the projective limit `tanh = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Strength<T> {
    Weak(T),
    Projective,
}

impl<T: Real> Strength<T> {
    pub fn tanh_abs(self) -> T {
        match self {
            Self::Weak(x) => x.abs().tanh(),
            Self::Projective => T::one(),
        }
    }

    /// Strength used to build a concrete family for the oracle check.
    pub fn family_x(self) -> T {
        match self {
            Self::Weak(x) => x.abs(),
            Self::Projective => T::lit(SATURATED_X),
        }
    }
}

/// How the classical correlation was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Analytic,
    Grid,
    Search,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Analytic => "analytic",
            Self::Grid => "grid",
            Self::Search => "search",
        }
    }
}

/// Row-norm variant of the block bound, `I - (2/d²) H(t̄ tanh|x|)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RowNormBound<T> {
    pub t_bar: T,
    pub bound: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationReport<T> {
    pub d: usize,
    /// From the eigendecomposition of the state.
    pub mutual_info: T,
    /// `(1/d²) Σ τ log₂ τ`, when the state is in the three-coefficient family.
    pub mutual_info_closed_form: Option<T>,
    pub classical_corr_special: T,
    pub sqd_upper_bound: T,
    /// Classical correlation with the `2/d` prefactor.
    pub printed_classical_corr: T,
    pub printed_sqd_upper_bound: T,
    pub theta_star: T,
    pub argmax_z: ZVector<T>,
    pub argmax_orientation: Orientation<T>,
    /// `|J̃ - measured MI at the argmax orientation|`.
    pub oracle_residual: T,
    pub row_norm: Option<RowNormBound<T>>,
    pub method: Method,
}

/// `(1/d²) Σ_k τ_k log₂ τ_k` for the three-coefficient state.
pub fn mutual_information_closed_form<T: Real>(c: [T; 3], d: usize) -> Result<T> {
    let taus = checked_taus(c)?;
    let dd = T::from(d * d).unwrap();
    Ok(taus.iter().map(|&t| xlog2x(t)).sum::<T>() / dd)
}

fn checked_taus<T: Real>(c: [T; 3]) -> Result<[T; 4]> {
    let taus = diag3_taus(c);
    let tol = T::PSD_TOL;
    if let Some(t) = taus.iter().find(|&&t| !(t >= -tol)) {
        return Err(Error::Inadmissible(format!("coefficients {c:?} give eigenvalue factor {t} < 0")));
    }
    Ok(taus.map(|t| t.max(T::zero())))
}

/// `(1/d²) Σ τ log₂ τ - k(d) H(max|c_i| · tanh|x|)`.
pub fn sqd_bound_closed_form<T: Real>(c: [T; 3], strength: Strength<T>, d: usize, factor: EntropyFactor) -> Result<T> {
    let i = mutual_information_closed_form(c, d)?;
    let k = dominant_index(c);
    Ok(i - factor.value::<T>(d) * entropic_h(c[k].abs() * strength.tanh_abs())?)
}

/// Werner family `c_i = -c`:
/// `(1/d²)[3(1-c)log₂(1-c) + (1+3c)log₂(1+3c) - 2H(c tanh x)]`.
pub fn sqd_bound_werner<T: Real>(c: T, x: T, d: usize) -> Result<T> {
    if !(c >= T::zero() && c <= T::one()) {
        return Err(Error::Domain(format!("Werner parameter must lie in [0, 1], got {c}")));
    }
    let three = T::lit(3.0);
    let dd = T::from(d * d).unwrap();
    let h = entropic_h(c * x.abs().tanh())?;
    Ok((three * xlog2x(T::one() - c) + xlog2x(T::one() + three * c) - T::lit(2.0) * h) / dd)
}

/// `D = 2J̃ - I` with `J̃ = k(d) H(c tanh|x|)`; for the derived factor this is
/// `(1/d²)[4H(c tanh x) - Σ τ log₂ τ]`.
pub fn correlation_difference_with<T: Real>(c: [T; 3], x: T, d: usize, factor: EntropyFactor) -> Result<T> {
    let i = mutual_information_closed_form(c, d)?;
    let k = dominant_index(c);
    let j = factor.value::<T>(d) * entropic_h(c[k].abs() * x.abs().tanh())?;
    Ok(j + j - i)
}

/// [`correlation_difference_with`] using the derived factor.
pub fn correlation_difference_d<T: Real>(c: [T; 3], x: T, d: usize) -> Result<T> {
    correlation_difference_with(c, x, d, EntropyFactor::Derived)
}

/// Either family of correlated states.
#[derive(Clone, Debug, PartialEq)]
pub enum CorrelationSpec<T> {
    Diag(DiagCorrelationSpec<T>),
    Block(BlockCorrelationSpec<T>),
}

impl<T: Real> CorrelationSpec<T> {
    pub fn d(&self) -> usize {
        match self {
            Self::Diag(s) => s.d(),
            Self::Block(s) => s.d(),
        }
    }

    pub fn state(&self) -> Result<DensityOperator<T>> {
        match self {
            Self::Diag(s) => build_diag_state(s),
            Self::Block(s) => build_block_state(s),
        }
    }

    /// The 3×3 correlation block on `σ_j ⊗ σ_k`.
    pub fn t_matrix(&self) -> [[T; 3]; 3] {
        match self {
            Self::Diag(s) => {
                let c = s.sigma123();
                std::array::from_fn(|i| std::array::from_fn(|j| if i == j { c[i] } else { T::zero() }))
            }
            Self::Block(s) => *s.t(),
        }
    }
}

/// Maximal `θ` over the special family and the `z` attaining it.
fn theta_star<T: Real>(spec: &CorrelationSpec<T>, strength: Strength<T>) -> Result<(T, ZVector<T>)> {
    let th = strength.tanh_abs();
    match spec {
        CorrelationSpec::Diag(s) => {
            let c = s.sigma123();
            let k = dominant_index(c);
            Ok((c[k].abs() * th, ZVector::axis(k)))
        }
        CorrelationSpec::Block(s) => {
            let (v, z) = top_singular(s.t())?;
            Ok((v * th, z))
        }
    }
}

/// `J̃ = (2/d²) H(θ*)` and the maximizing `z`, after checking admissibility.
pub fn classical_correlation_special<T: Real>(spec: &CorrelationSpec<T>, x: T) -> Result<(T, ZVector<T>)> {
    spec.state()?;
    let (theta, z) = theta_star(spec, Strength::Weak(x))?;
    Ok((EntropyFactor::Derived.value::<T>(spec.d()) * entropic_h(theta)?, z))
}

/// Full report for either spec family at the given strength.
pub fn sqd_upper_bound_at<T: Real>(spec: &CorrelationSpec<T>, strength: Strength<T>) -> Result<CorrelationReport<T>> {
    let d = spec.d();
    let rho = spec.state()?;
    let mutual_info = mutual_information(&rho, (d, d))?;
    let mutual_info_closed_form = match spec {
        CorrelationSpec::Diag(s) if s.is_three_term() => Some(mutual_information_closed_form(s.sigma123(), d)?),
        _ => None,
    };
    let (theta, z) = theta_star(spec, strength)?;
    let h = entropic_h(theta)?;
    let j = EntropyFactor::Derived.value::<T>(d) * h;
    let jp = EntropyFactor::Printed.value::<T>(d) * h;
    let orientation = Orientation::from_z(z);
    let fam = build_special_family(&orientation, strength.family_x(), d)?;
    let measured = measured_mutual_information(&rho, &fam)?;
    let row_norm = match spec {
        CorrelationSpec::Block(s) => {
            let t_bar = max_row_norm(s.t());
            let hb = entropic_h(t_bar * strength.tanh_abs())?;
            Some(RowNormBound { t_bar, bound: mutual_info - EntropyFactor::Derived.value::<T>(d) * hb })
        }
        CorrelationSpec::Diag(_) => None,
    };
    Ok(CorrelationReport {
        d,
        mutual_info,
        mutual_info_closed_form,
        classical_corr_special: j,
        sqd_upper_bound: mutual_info - j,
        printed_classical_corr: jp,
        printed_sqd_upper_bound: mutual_info - jp,
        theta_star: theta,
        argmax_z: z,
        argmax_orientation: orientation,
        oracle_residual: (j - measured).abs(),
        row_norm,
        method: Method::Analytic,
    })
}

pub fn sqd_upper_bound_diag<T: Real>(spec: &DiagCorrelationSpec<T>, x: T) -> Result<CorrelationReport<T>> {
    sqd_upper_bound_at(&CorrelationSpec::Diag(spec.clone()), Strength::Weak(x))
}

pub fn sqd_upper_bound_block<T: Real>(spec: &BlockCorrelationSpec<T>, x: T) -> Result<CorrelationReport<T>> {
    sqd_upper_bound_at(&CorrelationSpec::Block(spec.clone()), Strength::Weak(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn entropic_h_oracle() {
        assert!((entropic_h(0.5f64).unwrap() - 0.377443751081734).abs() < 1e-12);
    }

    #[test]
    fn werner_closed_form_matches_pipeline() {
        for &c in &[0.0f64, 0.2, 0.5, 0.9, 1.0] {
            for &x in &[0.0, 0.7, 3.0] {
                let spec = DiagCorrelationSpec::three(2, [-c, -c, -c]).unwrap();
                let rep = sqd_upper_bound_diag(&spec, x).unwrap();
                let cf = sqd_bound_werner(c, x, 2).unwrap();
                assert!((rep.sqd_upper_bound - cf).abs() < 1e-10, "c={c} x={x}");
                let j = entropic_h(c * f64::tanh(x)).unwrap() / 2.0;
                assert!((rep.classical_corr_special - j).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn report_matches_closed_form_and_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..40 {
            let c = random::admissible_coeffs::<f64, _>(&mut rng);
            let d = rng.random_range(2..5);
            let x = rng.random_range(-4.0..4.0);
            let rep = sqd_upper_bound_diag(&DiagCorrelationSpec::three(d, c).unwrap(), x).unwrap();
            assert!(rep.oracle_residual < 1e-9);
            assert!((rep.mutual_info - rep.mutual_info_closed_form.unwrap()).abs() < 1e-10);
            let cf = sqd_bound_closed_form(c, Strength::Weak(x), d, EntropyFactor::Derived).unwrap();
            assert!((rep.sqd_upper_bound - cf).abs() < 1e-10);
            assert!(rep.classical_corr_special >= 0.0 && rep.classical_corr_special <= rep.mutual_info + 1e-9);
        }
    }

    #[test]
    fn zero_strength_and_zero_state() {
        let spec = DiagCorrelationSpec::three(3, [0.3f64, -0.2, 0.1]).unwrap();
        let rep = sqd_upper_bound_diag(&spec, 0.0).unwrap();
        assert_eq!(rep.classical_corr_special, 0.0);
        assert!((rep.sqd_upper_bound - rep.mutual_info).abs() < 1e-15);
        let zero = sqd_upper_bound_diag(&DiagCorrelationSpec::three(2, [0.0f64; 3]).unwrap(), 1.0).unwrap();
        assert!(zero.sqd_upper_bound.abs() < 1e-12);
    }

    #[test]
    fn block_diag_consistency_and_row_norm() {
        let c = [0.3f64, -0.25, 0.2];
        let t = [[c[0], 0.0, 0.0], [0.0, c[1], 0.0], [0.0, 0.0, c[2]]];
        let b = sqd_upper_bound_block(&BlockCorrelationSpec::new(3, t).unwrap(), 1.1).unwrap();
        let a = sqd_upper_bound_diag(&DiagCorrelationSpec::three(3, c).unwrap(), 1.1).unwrap();
        assert!((a.sqd_upper_bound - b.sqd_upper_bound).abs() < 1e-10, "{a:?} {b:?}");
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut seen = 0;
        while seen < 20 {
            let t: [[f64; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.random_range(-0.35..0.35)));
            let Ok(spec) = BlockCorrelationSpec::new(3, t) else { continue };
            let Ok(rep) = sqd_upper_bound_block(&spec, 0.9) else { continue };
            seen += 1;
            assert!(rep.sqd_upper_bound <= rep.row_norm.unwrap().bound + 1e-12);
            assert!(rep.oracle_residual < 1e-9);
        }
    }

    #[test]
    fn inadmissible_is_rejected() {
        let spec = DiagCorrelationSpec::three(2, [0.4, 0.4, 0.4]).unwrap();
        assert!(sqd_upper_bound_diag(&spec, 1.0).unwrap_err().is_inadmissible());
        assert!(correlation_difference_d([0.4, 0.4, 0.4], 1.0, 3).unwrap_err().is_inadmissible());
    }

    #[test]
    fn difference_statistic() {
        assert_eq!(correlation_difference_d([0.0f64; 3], 2.0, 3).unwrap(), 0.0);
        let c = [0.3f64, 0.3, 0.3];
        let at0 = correlation_difference_d(c, 0.0, 3).unwrap();
        assert!((at0 + mutual_information_closed_form(c, 3).unwrap()).abs() < 1e-15);
        assert!(at0 <= 0.0);
        // Frozen from an independent evaluation of (1/9)[4H(0.3 tanh 0.5) - Σ τ log₂ τ].
        assert!((correlation_difference_d(c, 0.5, 3).unwrap() - -0.114747976637).abs() < 1e-11);
        let mut prev = f64::NEG_INFINITY;
        for i in 0..20 {
            let v = correlation_difference_d(c, i as f64 * 0.25, 3).unwrap();
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn printed_factor_is_d_times_larger() {
        let d = 3;
        assert!((EntropyFactor::Printed.value::<f64>(d) / EntropyFactor::Derived.value::<f64>(d) - 3.0).abs() < 1e-15);
        let rep = sqd_upper_bound_diag(&DiagCorrelationSpec::three(d, [0.5f64, 0.1, 0.1]).unwrap(), 1.0).unwrap();
        assert!((rep.printed_classical_corr - 3.0 * rep.classical_corr_special).abs() < 1e-14);
    }

    #[test]
    fn f32_report_runs() {
        let spec = DiagCorrelationSpec::<f32>::three(2, [-0.5, -0.5, -0.5]).unwrap();
        let rep = sqd_upper_bound_diag(&spec, 1.0f32).unwrap();
        let expect = sqd_bound_werner(0.5f64, 1.0, 2).unwrap();
        assert!((rep.sqd_upper_bound as f64 - expect).abs() < 1e-4);
    }
}
