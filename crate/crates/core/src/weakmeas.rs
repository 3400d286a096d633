//! Weak-measurement families on subsystem A.
//!
//! A family deforms one pair of orthogonal projectors `(Π_a, Π_b)` of a frame
//! into
//!
//! ```text
//! P_a(x) = √((1 - tanh x)/2) Π_a + √((1 + tanh x)/2) Π_b
//! P_b(x) = √((1 + tanh x)/2) Π_a + √((1 - tanh x)/2) Π_b
//! ```
//!
//! and keeps every other projector unchanged. The operators commute, square
//! to a resolution of the identity, and tend to `Π_b`, `Π_a` as `x → ∞`.

use crate::error::{Error, Result};
use crate::qmat::{hermitian_spectrum, ComplexMatrix, DensityOperator};
use crate::scalar::{c, re, Real};
use crate::sud_basis::{generator, SIGMA1, SIGMA2, SIGMA3};

/// Outcomes with probability below this are flagged instead of normalized.
pub const ZERO_PROBABILITY: f64 = 1e-14;

/// `H(v) = (1+v) log₂(1+v) + (1-v) log₂(1-v)` for `|v| ≤ 1`.
pub fn entropic_h<T: Real>(v: T) -> Result<T> {
    let a = v.abs();
    let slack = T::epsilon() * T::lit(8.0);
    if !(a <= T::one() + slack) {
        return Err(Error::Domain(format!("entropic function needs |v| <= 1, got {v}")));
    }
    let a = a.min(T::one());
    let plus = (T::one() + a) * (T::one() + a).log2();
    let minus = if a < T::one() { (T::one() - a) * (T::one() - a).log2() } else { T::zero() };
    Ok(plus + minus)
}

/// Unit quaternion `(t, y₁, y₂, y₃)` defining `V₀ = tI + i Σ y_k σ_k` on
/// `span{|0⟩, |1⟩}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Orientation<T> {
    pub t: T,
    pub y: [T; 3],
}

impl<T: Real> Orientation<T> {
    pub fn new(t: T, y1: T, y2: T, y3: T) -> Result<Self> {
        let n2 = t * t + y1 * y1 + y2 * y2 + y3 * y3;
        if !((n2 - T::one()).abs() <= T::IDENTITY_TOL) {
            return Err(Error::Domain(format!("orientation has squared norm {n2}, expected 1")));
        }
        Ok(Self { t, y: [y1, y2, y3] })
    }

    /// Normalizes an arbitrary nonzero quaternion.
    pub fn normalized(t: T, y1: T, y2: T, y3: T) -> Result<Self> {
        let n = (t * t + y1 * y1 + y2 * y2 + y3 * y3).sqrt();
        if !(n > T::zero()) || !n.is_finite() {
            return Err(Error::Domain("cannot normalize a zero quaternion".into()));
        }
        Ok(Self { t: t / n, y: [y1 / n, y2 / n, y3 / n] })
    }

    pub fn identity() -> Self {
        Self { t: T::one(), y: [T::zero(); 3] }
    }

    /// An orientation whose z-vector is `z` (with `y₃ = 0`).
    pub fn from_z(z: ZVector<T>) -> Self {
        let [z1, z2, z3] = z.0;
        let beta = z3.max(-T::one()).min(T::one()).acos();
        let sb = beta.sin();
        if sb.abs() <= T::epsilon() {
            return if z3 > T::zero() {
                Self::identity()
            } else {
                Self { t: T::zero(), y: [T::one(), T::zero(), T::zero()] }
            };
        }
        let half = beta / T::lit(2.0);
        let (s, t) = half.sin_cos();
        let a = z2 / sb;
        let b = -z1 / sb;
        let o = Self { t, y: [s * a, s * b, T::zero()] };
        // Remove round-off from the trigonometric route.
        Self::normalized(o.t, o.y[0], o.y[1], o.y[2]).unwrap_or(o)
    }

    /// The 2×2 block `tI + i Σ y_k σ_k`.
    pub fn su2_block(&self) -> ComplexMatrix<T> {
        let mut m = ComplexMatrix::identity(2).scale(self.t);
        for (id, &y) in [SIGMA1, SIGMA2, SIGMA3].iter().zip(&self.y) {
            let g = generator::<T>(*id, 2).expect("qubit generator");
            m = &m + &g.scale_c(c(T::zero(), y));
        }
        m
    }

    /// `V₀` acting as the SU(2) block on `{|0⟩, |1⟩}` and as identity elsewhere.
    pub fn v0(&self, d: usize) -> ComplexMatrix<T> {
        self.su2_block().embed(d)
    }
}

/// Unit vector `(z₁, z₂, z₃)`: the `σ₃` components of `V₀† σ_k V₀`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZVector<T>(pub [T; 3]);

impl<T: Real> ZVector<T> {
    pub fn new(z: [T; 3]) -> Result<Self> {
        let n2: T = z.iter().map(|&v| v * v).sum();
        if !((n2 - T::one()).abs() <= T::IDENTITY_TOL) {
            return Err(Error::Domain(format!("z-vector has squared norm {n2}, expected 1")));
        }
        Ok(Self(z))
    }

    /// Unit basis vector `e_k` (k = 0, 1, 2).
    pub fn axis(k: usize) -> Self {
        let mut z = [T::zero(); 3];
        z[k] = T::one();
        Self(z)
    }

    pub fn norm(&self) -> T {
        self.0.iter().map(|&v| v * v).sum::<T>().sqrt()
    }
}

/// `z₁ = 2(y₁y₃ - t y₂)`, `z₂ = 2(y₂y₃ + t y₁)`, `z₃ = t² + y₃² - y₁² - y₂²`.
pub fn z_from_orientation<T: Real>(o: &Orientation<T>) -> ZVector<T> {
    let two = T::lit(2.0);
    let (t, [y1, y2, y3]) = (o.t, o.y);
    ZVector([two * (y1 * y3 - t * y2), two * (y2 * y3 + t * y1), t * t + y3 * y3 - y1 * y1 - y2 * y2])
}

/// `(√((1 - tanh x)/2), √((1 + tanh x)/2))`, evaluated as `1/(1 + e^{±2x})`
/// so the small weight keeps full relative precision for large `|x|`.
pub fn strength_weights<T: Real>(x: T) -> (T, T) {
    let two_x = x + x;
    let minus = (T::one() / (T::one() + two_x.exp())).sqrt();
    let plus = (T::one() / (T::one() + (-two_x).exp())).sqrt();
    (minus, plus)
}

/// Commuting weak-measurement operators `P_0 … P_{d-1}` on subsystem A.
#[derive(Clone, Debug)]
pub struct WeakMeasurementFamily<T: Real> {
    d: usize,
    x: T,
    pair: (usize, usize),
    frame: ComplexMatrix<T>,
    operators: Vec<ComplexMatrix<T>>,
}

/// Worst-case deviations from the weak-measurement axioms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AxiomDefects<T> {
    /// `max |Σ P_i² - I|`.
    pub completeness: T,
    /// `max |[P_i, P_j]|` over all pairs.
    pub commutator: T,
    pub hermiticity: T,
    /// Smallest eigenvalue over all operators.
    pub min_eigenvalue: T,
}

impl<T: Real> AxiomDefects<T> {
    pub fn within(&self, tol: T) -> bool {
        self.completeness <= tol && self.commutator <= tol && self.hermiticity <= tol && self.min_eigenvalue >= -tol
    }
}

impl<T: Real> WeakMeasurementFamily<T> {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn x(&self) -> T {
        self.x
    }

    pub fn pair(&self) -> (usize, usize) {
        self.pair
    }

    pub fn frame(&self) -> &ComplexMatrix<T> {
        &self.frame
    }

    pub fn operators(&self) -> &[ComplexMatrix<T>] {
        &self.operators
    }

    /// Frame projectors `Π_i = U|i⟩⟨i|U†`.
    pub fn projectors(&self) -> Vec<ComplexMatrix<T>> {
        frame_projectors(&self.frame)
    }

    /// Operators in the `x → +∞` limit: the deformed pair swaps projectors.
    pub fn strong_limit(&self) -> Vec<ComplexMatrix<T>> {
        let mut p = self.projectors();
        p.swap(self.pair.0, self.pair.1);
        p
    }

    pub fn axiom_defects(&self) -> Result<AxiomDefects<T>> {
        let d = self.d;
        let mut sum = ComplexMatrix::zeros(d, d);
        let mut herm = T::zero();
        let mut min_eig = T::infinity();
        for p in &self.operators {
            sum = &sum + &(p * p);
            herm = herm.max(p.hermitian_defect());
            let s = hermitian_spectrum(p)?;
            min_eig = min_eig.min(s[0]);
        }
        let mut comm = T::zero();
        for (i, a) in self.operators.iter().enumerate() {
            for b in &self.operators[i + 1..] {
                comm = comm.max(ComplexMatrix::commutator(a, b).max_abs());
            }
        }
        Ok(AxiomDefects {
            completeness: sum.max_abs_diff(&ComplexMatrix::identity(d)),
            commutator: comm,
            hermiticity: herm,
            min_eigenvalue: min_eig,
        })
    }
}

fn frame_projectors<T: Real>(frame: &ComplexMatrix<T>) -> Vec<ComplexMatrix<T>> {
    let n = frame.rows();
    (0..n)
        .map(|i| {
            let col = frame.column(i);
            ComplexMatrix::from_fn(n, n, |r, s| col[r] * col[s].conj())
        })
        .collect()
}

fn deform<T: Real>(proj: &[ComplexMatrix<T>], (a, b): (usize, usize), x: T) -> Vec<ComplexMatrix<T>> {
    let (wm, wp) = strength_weights(x);
    let mut ops = proj.to_vec();
    ops[a] = &proj[a].scale(wm) + &proj[b].scale(wp);
    ops[b] = &proj[a].scale(wp) + &proj[b].scale(wm);
    ops
}

/// The rotated family: `V₀Π₀V₀†`, `V₀Π₁V₀†` deformed with strength `x`,
/// `Π_i` for `i ≥ 2`.
pub fn build_special_family<T: Real>(o: &Orientation<T>, x: T, d: usize) -> Result<WeakMeasurementFamily<T>> {
    if d < 2 {
        return Err(Error::Dimension(format!("weak measurement needs d >= 2, got {d}")));
    }
    if !x.is_finite() {
        return Err(Error::Domain("measurement strength must be finite".into()));
    }
    let v0 = o.v0(d);
    let mut proj: Vec<ComplexMatrix<T>> = (0..d).map(|i| ComplexMatrix::projector(d, i)).collect();
    proj[0] = v0.conjugate(&proj[0]);
    proj[1] = v0.conjugate(&proj[1]);
    let operators = deform(&proj, (0, 1), x);
    Ok(WeakMeasurementFamily { d, x, pair: (0, 1), frame: v0, operators })
}

/// Family built on the orthonormal frame given by the columns of `frame`,
/// deforming outcomes `pair`.
pub fn build_general_family<T: Real>(
    frame: &ComplexMatrix<T>,
    pair: (usize, usize),
    x: T,
) -> Result<WeakMeasurementFamily<T>> {
    if !frame.is_square() || frame.rows() < 2 {
        return Err(Error::Dimension(format!("frame must be square with d >= 2, got {}x{}", frame.rows(), frame.cols())));
    }
    let d = frame.rows();
    if pair.0 == pair.1 || pair.0 >= d || pair.1 >= d {
        return Err(Error::Domain(format!("outcome pair {pair:?} invalid for d = {d}")));
    }
    if !x.is_finite() {
        return Err(Error::Domain("measurement strength must be finite".into()));
    }
    let defect = frame.unitary_defect();
    if !(defect <= T::UNITARY_TOL) {
        return Err(Error::NotUnitary { defect: defect.to_f64_lossy() });
    }
    let proj = frame_projectors(frame);
    let operators = deform(&proj, pair, x);
    Ok(WeakMeasurementFamily { d, x, pair, frame: frame.clone(), operators })
}

/// Result of one measurement outcome.
#[derive(Clone, Debug)]
pub enum Outcome<T: Real> {
    Occurred { probability: T, state: DensityOperator<T> },
    /// `p < 1e-14`: the conditional state is not formed.
    ZeroProbability { probability: T },
}

impl<T: Real> Outcome<T> {
    pub fn probability(&self) -> T {
        match self {
            Outcome::Occurred { probability, .. } | Outcome::ZeroProbability { probability } => *probability,
        }
    }

    pub fn state(&self) -> Option<&DensityOperator<T>> {
        match self {
            Outcome::Occurred { state, .. } => Some(state),
            Outcome::ZeroProbability { .. } => None,
        }
    }
}

/// `Tr_A[(Q⊗I) ρ]` for `Q` on A; equals `Tr_A[(P⊗I) ρ (P⊗I)]` when `Q = P²`.
fn reduce_with<T: Real>(rho: &ComplexMatrix<T>, q: &ComplexMatrix<T>, da: usize, db: usize) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(db, db, |b, b2| {
        let mut acc = re(T::zero());
        for a in 0..da {
            for a2 in 0..da {
                let qa = q[(a, a2)];
                if qa.re != T::zero() || qa.im != T::zero() {
                    acc += qa * rho[(a2 * db + b, a * db + b2)];
                }
            }
        }
        acc
    })
}

/// Probabilities and conditional states of subsystem B after measuring A.
pub fn post_measurement<T: Real>(rho: &DensityOperator<T>, fam: &WeakMeasurementFamily<T>) -> Result<Vec<Outcome<T>>> {
    let n = rho.dim();
    let da = fam.d;
    if !n.is_multiple_of(da) {
        return Err(Error::Dimension(format!("state of dimension {n} does not factor with d_A = {da}")));
    }
    let db = n / da;
    let m = rho.matrix();
    fam.operators
        .iter()
        .map(|p| {
            let reduced = reduce_with(m, &(p * p), da, db);
            let prob = reduced.trace().re;
            if prob < T::lit(ZERO_PROBABILITY) {
                return Ok(Outcome::ZeroProbability { probability: prob });
            }
            let state = ComplexMatrix::from_fn(db, db, |i, j| (reduced[(i, j)] + reduced[(j, i)].conj()) * T::lit(0.5) / prob);
            Ok(Outcome::Occurred { probability: prob, state: DensityOperator::from_trusted(state) })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{partial_trace_matrix, tensor, Subsystem};
    use crate::random;
    use crate::sud_basis::{build_diag_state, DiagCorrelationSpec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type M = ComplexMatrix<f64>;

    #[test]
    fn entropic_h_values() {
        assert_eq!(entropic_h(0.0f64).unwrap(), 0.0);
        assert!((entropic_h(1.0f64).unwrap() - 2.0).abs() < 1e-15);
        assert!((entropic_h(-1.0f64).unwrap() - 2.0).abs() < 1e-15);
        // 1.5·log₂1.5 + 0.5·log₂0.5
        let direct = 1.5 * 1.5f64.log2() + 0.5 * 0.5f64.log2();
        assert!((entropic_h(0.5f64).unwrap() - direct).abs() < 1e-15);
        assert!((entropic_h(0.5f64).unwrap() - 0.377444).abs() < 1e-6);
        assert!(entropic_h(1.01f64).is_err());
    }

    #[test]
    fn entropic_h_even_and_monotone() {
        let mut prev = 0.0;
        for k in 0..=1000 {
            let v = k as f64 / 1000.0;
            let h = entropic_h(v).unwrap();
            assert_eq!(h, entropic_h(-v).unwrap());
            assert!(h >= prev);
            prev = h;
        }
    }

    #[test]
    fn z_examples() {
        let z = z_from_orientation(&Orientation::<f64>::identity());
        assert_eq!(z.0, [0.0, 0.0, 1.0]);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let z = z_from_orientation(&Orientation::new(s, s, 0.0, 0.0).unwrap());
        assert!((z.0[1].abs() - 1.0).abs() < 1e-15 && z.0[0].abs() < 1e-15 && z.0[2].abs() < 1e-15);
    }

    #[test]
    fn z_is_sigma3_component_of_rotated_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let sig: Vec<M> = [SIGMA1, SIGMA2, SIGMA3].iter().map(|&g| generator(g, 2).unwrap()).collect();
        for _ in 0..50 {
            let o = random::orientation::<f64, _>(&mut rng);
            let z = z_from_orientation(&o);
            assert!((z.norm() - 1.0).abs() < 1e-12);
            let v = o.su2_block();
            for k in 0..3 {
                let rotated = &(&v.adjoint() * &sig[k]) * &v;
                let comp = (&rotated * &sig[2]).trace().re / 2.0;
                assert!((comp - z.0[k]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn orientation_from_z_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let z = z_from_orientation(&random::orientation::<f64, _>(&mut rng));
            let back = z_from_orientation(&Orientation::from_z(z));
            for k in 0..3 {
                assert!((back.0[k] - z.0[k]).abs() < 1e-10);
            }
        }
        for k in 0..3 {
            for sign in [1.0f64, -1.0] {
                let mut z = [0.0; 3];
                z[k] = sign;
                let back = z_from_orientation(&Orientation::from_z(ZVector(z)));
                assert!((back.0[k] - sign).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn orientation_rejects_non_unit() {
        assert!(Orientation::<f64>::new(1.0, 0.1, 0.0, 0.0).is_err());
        assert!(Orientation::<f64>::normalized(0.0, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn zero_strength_mixes_evenly() {
        let o = Orientation::normalized(0.3, -0.2, 0.5, 0.1).unwrap();
        let fam = build_special_family(&o, 0.0f64, 3).unwrap();
        let v = o.v0(3);
        let even = (&v.conjugate(&M::projector(3, 0)) + &v.conjugate(&M::projector(3, 1))).scale(std::f64::consts::FRAC_1_SQRT_2);
        assert!(fam.operators()[0].max_abs_diff(&even) < 1e-15);
        assert!(fam.operators()[1].max_abs_diff(&even) < 1e-15);
        assert!(fam.operators()[2].max_abs_diff(&M::projector(3, 2)) < 1e-15);
    }

    #[test]
    fn strong_strength_swaps_projectors() {
        let o = Orientation::normalized(0.3, -0.2, 0.5, 0.1).unwrap();
        let fam = build_special_family(&o, 30.0f64, 4).unwrap();
        let v = o.v0(4);
        assert!(fam.operators()[0].max_abs_diff(&v.conjugate(&M::projector(4, 1))) < 1e-12);
        assert!(fam.operators()[1].max_abs_diff(&v.conjugate(&M::projector(4, 0))) < 1e-12);
    }

    #[test]
    fn axioms_hold_for_random_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for d in 2..=6 {
            for &x in &[0.0, 0.5, -0.5, 2.0, -2.0, 30.0, -30.0] {
                let o = random::orientation(&mut rng);
                let fam = build_special_family(&o, x, d).unwrap();
                assert!(fam.axiom_defects().unwrap().within(1e-12), "d={d} x={x}");
                let u = random::unitary(d, &mut rng);
                let fam = build_general_family(&u, (0, d - 1), x).unwrap();
                assert!(fam.axiom_defects().unwrap().within(1e-12), "d={d} x={x}");
            }
        }
    }

    #[test]
    fn general_family_with_identity_frame() {
        let a = build_general_family(&M::identity(3), (0, 1), 0.7).unwrap();
        let b = build_special_family(&Orientation::identity(), 0.7, 3).unwrap();
        for (p, q) in a.operators().iter().zip(b.operators()) {
            assert!(p.max_abs_diff(q) < 1e-15);
        }
    }

    #[test]
    fn general_family_with_embedded_v0() {
        let o = Orientation::normalized(0.4, 0.1, -0.7, 0.2).unwrap();
        let a = build_general_family(&o.v0(3), (0, 1), -1.3).unwrap();
        let b = build_special_family(&o, -1.3, 3).unwrap();
        for (p, q) in a.operators().iter().zip(b.operators()) {
            assert!(p.max_abs_diff(q) < 1e-14);
        }
    }

    #[test]
    fn general_family_rejects_bad_input() {
        let bad = M::diag_real(&[1.0, 0.5]);
        assert!(matches!(build_general_family(&bad, (0, 1), 0.3), Err(Error::NotUnitary { .. })));
        assert!(build_general_family(&M::identity(3), (1, 1), 0.3).is_err());
        assert!(build_general_family(&M::identity(3), (0, 3), 0.3).is_err());
    }

    #[test]
    fn negative_strength_swaps_outcomes() {
        let o = Orientation::normalized(0.2, 0.9, -0.1, 0.3).unwrap();
        let a = build_special_family(&o, 1.1, 3).unwrap();
        let b = build_special_family(&o, -1.1, 3).unwrap();
        assert!(a.operators()[0].max_abs_diff(&b.operators()[1]) < 1e-15);
        assert!(a.operators()[1].max_abs_diff(&b.operators()[0]) < 1e-15);
    }

    #[test]
    fn contraction_matches_sandwich() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let rho = random::density::<f64, _>(9, &mut rng);
        let fam = build_general_family(&random::unitary(3, &mut rng), (1, 2), 0.8).unwrap();
        let outs = post_measurement(&rho, &fam).unwrap();
        for (p, out) in fam.operators().iter().zip(&outs) {
            let big = tensor(p, &M::identity(3)).unwrap();
            let sandwich = &(&big * rho.matrix()) * &big;
            let prob = sandwich.trace().re;
            let reduced = partial_trace_matrix(&sandwich, Subsystem::B, (3, 3)).unwrap().scale(1.0 / prob);
            assert!((out.probability() - prob).abs() < 1e-14);
            assert!(out.state().unwrap().matrix().max_abs_diff(&reduced) < 1e-13);
        }
        let total: f64 = outs.iter().map(|o| o.probability()).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_probability_outcomes_are_flagged() {
        // |00⟩ measured projectively in the computational basis.
        let rho = DensityOperator::<f64>::from_trusted(M::projector(4, 0));
        let fam = build_general_family(&M::identity(2), (0, 1), 40.0).unwrap();
        let outs = post_measurement(&rho, &fam).unwrap();
        assert!(matches!(outs[0], Outcome::ZeroProbability { .. }));
        assert!(outs[1].state().is_some());
    }

    #[test]
    fn post_measurement_dimension_mismatch() {
        let rho = DensityOperator::<f64>::maximally_mixed(7);
        let fam = build_special_family(&Orientation::identity(), 0.5, 2).unwrap();
        assert!(matches!(post_measurement(&rho, &fam), Err(Error::Dimension(_))));
    }

    #[test]
    fn conditional_states_of_diagonal_family() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for d in 2..=5 {
            let cs = random::admissible_coeffs::<f64, _>(&mut rng);
            let rho = build_diag_state(&DiagCorrelationSpec::three(d, cs).unwrap()).unwrap();
            let o = random::orientation(&mut rng);
            let z = z_from_orientation(&o);
            let x = 0.9;
            let outs = post_measurement(&rho, &build_special_family(&o, x, d).unwrap()).unwrap();
            let df = d as f64;
            let mut sum = M::zeros(d, d);
            for k in 0..3 {
                let g = generator([SIGMA1, SIGMA2, SIGMA3][k], d).unwrap();
                sum = &sum + &g.scale(cs[k] * z.0[k] * x.tanh());
            }
            let rho0 = (&M::identity(d) - &sum).scale(1.0 / df);
            let rho1 = (&M::identity(d) + &sum).scale(1.0 / df);
            assert!(outs.iter().all(|o| (o.probability() - 1.0 / df).abs() < 1e-12));
            assert!(outs[0].state().unwrap().matrix().max_abs_diff(&rho0) < 1e-12);
            assert!(outs[1].state().unwrap().matrix().max_abs_diff(&rho1) < 1e-12);
            for out in &outs[2..] {
                assert!(out.state().unwrap().matrix().max_abs_diff(&M::identity(d).scale(1.0 / df)) < 1e-12);
            }
            // Eigenvalues (1 ± θ)/d and (d - 2) copies of 1/d.
            let theta = (0..3).map(|k| (cs[k] * z.0[k]).powi(2)).sum::<f64>().sqrt() * x.tanh();
            let mut want = vec![(1.0 - theta) / df, (1.0 + theta) / df];
            want.extend(std::iter::repeat_n(1.0 / df, d - 2));
            want.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let got = outs[0].state().unwrap().spectrum().unwrap();
            for (a, b) in got.iter().zip(&want) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn single_precision_family() {
        let o = Orientation::<f32>::normalized(0.3, -0.2, 0.5, 0.1).unwrap();
        let fam = build_special_family(&o, 0.5f32, 3).unwrap();
        assert!(fam.axiom_defects().unwrap().within(1e-5));
    }
}
