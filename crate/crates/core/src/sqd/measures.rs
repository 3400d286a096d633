use crate::error::{Error, Result};
use crate::qmat::{DensityOperator, Subsystem};
use crate::scalar::{xlog2x, Real};
use crate::weakmeas::{post_measurement, WeakMeasurementFamily};

/// `I(ρ) = S(ρ^A) + S(ρ^B) - S(ρ^{AB})` in bits.
pub fn mutual_information<T: Real>(rho: &DensityOperator<T>, dims: (usize, usize)) -> Result<T> {
    let sa = rho.partial_trace(Subsystem::A, dims)?.entropy()?;
    let sb = rho.partial_trace(Subsystem::B, dims)?.entropy()?;
    Ok(sa + sb - rho.entropy()?)
}

/// `Σ_i p_i S(ρ_i)` after measuring subsystem A with `fam`.
pub fn measured_conditional_entropy<T: Real>(rho: &DensityOperator<T>, fam: &WeakMeasurementFamily<T>) -> Result<T> {
    let mut total = T::zero();
    for out in post_measurement(rho, fam)? {
        if let Some(state) = out.state() {
            total += out.probability() * state.entropy()?;
        }
    }
    Ok(total)
}

/// `S(ρ^B) - Σ_i p_i S(ρ_i)`, all entropies from eigendecompositions.
pub fn measured_mutual_information<T: Real>(rho: &DensityOperator<T>, fam: &WeakMeasurementFamily<T>) -> Result<T> {
    let n = rho.dim();
    let da = fam.d();
    if !n.is_multiple_of(da) {
        return Err(Error::Dimension(format!("state of dimension {n} does not factor with d_A = {da}")));
    }
    let sb = rho.partial_trace(Subsystem::B, (da, n / da))?.entropy()?;
    Ok(sb - measured_conditional_entropy(rho, fam)?)
}

/// Classical mutual information of a joint distribution `p[i][j]`.
pub fn classical_mutual_information<T: Real>(p: &[Vec<T>]) -> Result<T> {
    validate_distribution(p)?;
    let rows: Vec<T> = p.iter().map(|r| r.iter().copied().sum()).collect();
    let ncols = p.first().map_or(0, |r| r.len());
    let cols: Vec<T> = (0..ncols).map(|j| p.iter().map(|r| r[j]).sum()).collect();
    let joint: T = p.iter().flatten().map(|&v| xlog2x(v)).sum();
    let marg: T = rows.iter().chain(&cols).map(|&v| xlog2x(v)).sum();
    Ok(joint - marg)
}

pub(crate) fn validate_distribution<T: Real>(p: &[Vec<T>]) -> Result<()> {
    let ncols = p.first().map_or(0, |r| r.len());
    if p.is_empty() || ncols == 0 || p.iter().any(|r| r.len() != ncols) {
        return Err(Error::Domain("joint distribution must be a non-empty rectangular table".into()));
    }
    if p.iter().flatten().any(|&v| !(v >= T::zero()) || !v.is_finite()) {
        return Err(Error::Domain("joint distribution has negative or non-finite entries".into()));
    }
    let total: T = p.iter().flatten().copied().sum();
    if (total - T::one()).abs() > T::TRACE_TOL {
        return Err(Error::Domain(format!("joint distribution sums to {total}, expected 1")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{tensor, ComplexMatrix};
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn product_state_has_no_mutual_information() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random::density::<f64, _>(3, &mut rng);
        let b = random::density::<f64, _>(2, &mut rng);
        let rho = DensityOperator::from_trusted(tensor(a.matrix(), b.matrix()).unwrap());
        assert!(mutual_information(&rho, (3, 2)).unwrap().abs() < 1e-12);
    }

    #[test]
    fn classical_mutual_information_cases() {
        let u = vec![vec![0.25f64; 2]; 2];
        assert!(classical_mutual_information(&u).unwrap().abs() < 1e-15);
        let d = 4;
        let corr: Vec<Vec<f64>> = (0..d).map(|i| (0..d).map(|j| if i == j { 0.25 } else { 0.0 }).collect()).collect();
        assert!((classical_mutual_information(&corr).unwrap() - 2.0).abs() < 1e-14);
        let pa = [0.2, 0.8];
        let pb = [0.1, 0.6, 0.3];
        let prod: Vec<Vec<f64>> = pa.iter().map(|a| pb.iter().map(|b| a * b).collect()).collect();
        assert!(classical_mutual_information(&prod).unwrap().abs() < 1e-14);
        assert!(classical_mutual_information(&[vec![0.5, 0.6]]).is_err());
        assert!(classical_mutual_information(&[vec![1.5, -0.5]]).is_err());
    }

    #[test]
    fn measured_information_bounded_for_product_frames() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random::density::<f64, _>(2, &mut rng);
        let b = random::density::<f64, _>(2, &mut rng);
        let rho = DensityOperator::from_trusted(tensor(a.matrix(), b.matrix()).unwrap());
        let fam = crate::weakmeas::build_general_family(&random::unitary(2, &mut rng), (0, 1), 1.0).unwrap();
        assert!(measured_mutual_information(&rho, &fam).unwrap().abs() < 1e-12);
        let bad = DensityOperator::<f64>::maximally_mixed(5);
        assert!(measured_mutual_information(&bad, &fam).is_err());
        let _ = ComplexMatrix::<f64>::identity(1);
    }
}
