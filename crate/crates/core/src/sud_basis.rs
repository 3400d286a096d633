//! Gell-Mann generators of su(d) and the correlated two-qudit state families
//! with maximally mixed marginals.
//!
//! The symmetric generators are `|i⟩⟨j| + |j⟩⟨i|` and the diagonal ones are
//! traceless, so that `u₀₁`, `v₀₁`, `w₁` restrict to the Pauli matrices on
//! `span{|0⟩, |1⟩}` and every generator satisfies `Tr(σ_a σ_b) = 2δ_ab`.

use crate::error::{Error, Result};
use crate::qmat::{tensor, validate_density, ComplexMatrix, DensityOperator, Tolerance};
use crate::scalar::{c, re, Real};

/// Largest subsystem dimension the builders accept.
pub const MAX_SUBSYSTEM_DIM: usize = 16;

/// One generator of su(d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorId {
    /// `|i⟩⟨j| + |j⟩⟨i|`, `i < j`.
    U { i: usize, j: usize },
    /// `i(|j⟩⟨i| - |i⟩⟨j|)`, `i < j`.
    V { i: usize, j: usize },
    /// `√(2/(k(k+1))) (Σ_{i<k} |i⟩⟨i| - k|k⟩⟨k|)`, `0 < k`.
    W { k: usize },
}

/// `σ₁ = u₀₁`.
pub const SIGMA1: GeneratorId = GeneratorId::U { i: 0, j: 1 };
/// `σ₂ = v₀₁`.
pub const SIGMA2: GeneratorId = GeneratorId::V { i: 0, j: 1 };
/// `σ₃ = w₁`.
pub const SIGMA3: GeneratorId = GeneratorId::W { k: 1 };

impl GeneratorId {
    pub fn validate(self, d: usize) -> Result<()> {
        let ok = match self {
            GeneratorId::U { i, j } | GeneratorId::V { i, j } => i < j && j < d,
            GeneratorId::W { k } => 0 < k && k < d,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGenerator(format!("{self:?} out of range for d = {d}")))
        }
    }

    /// Whether this generator belongs to the set used by the diagonal family:
    /// `u₀₁, v₀₁, w₁` and `u_ij, v_ij` with `2 ≤ i < j`.
    pub fn in_correlation_set(self) -> bool {
        match self {
            GeneratorId::U { i, j } | GeneratorId::V { i, j } => (i, j) == (0, 1) || (2 <= i && i < j),
            GeneratorId::W { k } => k == 1,
        }
    }
}

fn check_dim(d: usize) -> Result<()> {
    if (2..=MAX_SUBSYSTEM_DIM).contains(&d) {
        Ok(())
    } else {
        Err(Error::Domain(format!("subsystem dimension {d} outside 2..={MAX_SUBSYSTEM_DIM}")))
    }
}

/// Matrix of a generator in dimension `d`.
pub fn generator<T: Real>(id: GeneratorId, d: usize) -> Result<ComplexMatrix<T>> {
    id.validate(d)?;
    let mut m = ComplexMatrix::zeros(d, d);
    match id {
        GeneratorId::U { i, j } => {
            m[(i, j)] = re(T::one());
            m[(j, i)] = re(T::one());
        }
        GeneratorId::V { i, j } => {
            m[(j, i)] = c(T::zero(), T::one());
            m[(i, j)] = c(T::zero(), -T::one());
        }
        GeneratorId::W { k } => {
            let kf = T::from(k).unwrap();
            let norm = (T::lit(2.0) / (kf * (kf + T::one()))).sqrt();
            for i in 0..k {
                m[(i, i)] = re(norm);
            }
            m[(k, k)] = re(-kf * norm);
        }
    }
    Ok(m)
}

/// All `d² - 1` generators: symmetric, antisymmetric, then diagonal.
pub fn all_generators(d: usize) -> Vec<GeneratorId> {
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| ((i + 1)..d).map(move |j| (i, j))).collect();
    pairs
        .iter()
        .map(|&(i, j)| GeneratorId::U { i, j })
        .chain(pairs.iter().map(|&(i, j)| GeneratorId::V { i, j }))
        .chain((1..d).map(|k| GeneratorId::W { k }))
        .collect()
}

/// The generators allowed in a [`DiagCorrelationSpec`], in the order
/// `σ₁, σ₂, σ₃, u₂₃, v₂₃, u₂₄, ...`.
pub fn correlation_set(d: usize) -> Vec<GeneratorId> {
    let mut out = vec![SIGMA1, SIGMA2, SIGMA3];
    for i in 2..d {
        for j in (i + 1)..d {
            out.push(GeneratorId::U { i, j });
            out.push(GeneratorId::V { i, j });
        }
    }
    out
}

/// `(1/d²)(I⊗I + Σ c_i σ_i⊗σ_i)` over generators from [`correlation_set`].
#[derive(Clone, Debug, PartialEq)]
pub struct DiagCorrelationSpec<T> {
    d: usize,
    coeffs: Vec<(GeneratorId, T)>,
}

impl<T: Real> DiagCorrelationSpec<T> {
    pub fn new(d: usize, coeffs: Vec<(GeneratorId, T)>) -> Result<Self> {
        check_dim(d)?;
        let mut seen = Vec::with_capacity(coeffs.len());
        for &(id, v) in &coeffs {
            id.validate(d)?;
            if !id.in_correlation_set() {
                return Err(Error::InvalidGenerator(format!(
                    "{id:?} is not in the correlation generator set"
                )));
            }
            if seen.contains(&id) {
                return Err(Error::InvalidGenerator(format!("{id:?} listed twice")));
            }
            if !v.is_finite() {
                return Err(Error::Domain(format!("coefficient of {id:?} is not finite")));
            }
            seen.push(id);
        }
        Ok(Self { d, coeffs })
    }

    /// The three-coefficient family on `σ₁, σ₂, σ₃`.
    pub fn three(d: usize, c: [T; 3]) -> Result<Self> {
        Self::new(d, vec![(SIGMA1, c[0]), (SIGMA2, c[1]), (SIGMA3, c[2])])
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn coeffs(&self) -> &[(GeneratorId, T)] {
        &self.coeffs
    }

    /// Coefficients of `σ₁, σ₂, σ₃` (zero when absent).
    pub fn sigma123(&self) -> [T; 3] {
        let mut out = [T::zero(); 3];
        for &(id, v) in &self.coeffs {
            match id {
                _ if id == SIGMA1 => out[0] = v,
                _ if id == SIGMA2 => out[1] = v,
                _ if id == SIGMA3 => out[2] = v,
                _ => {}
            }
        }
        out
    }

    /// True when only `σ₁, σ₂, σ₃` carry nonzero coefficients, so the
    /// closed-form spectrum applies.
    pub fn is_three_term(&self) -> bool {
        self.coeffs
            .iter()
            .all(|&(id, v)| v == T::zero() || id == SIGMA1 || id == SIGMA2 || id == SIGMA3)
    }

    pub fn with_sigma123(&self, c: [T; 3]) -> Self {
        let mut coeffs: Vec<(GeneratorId, T)> = vec![(SIGMA1, c[0]), (SIGMA2, c[1]), (SIGMA3, c[2])];
        coeffs.extend(
            self.coeffs.iter().filter(|(id, _)| *id != SIGMA1 && *id != SIGMA2 && *id != SIGMA3).copied(),
        );
        Self { d: self.d, coeffs }
    }
}

/// `(1/d²)(I⊗I + Σ_{j,k≤3} t_jk σ_j⊗σ_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockCorrelationSpec<T> {
    d: usize,
    t: [[T; 3]; 3],
}

impl<T: Real> BlockCorrelationSpec<T> {
    pub fn new(d: usize, t: [[T; 3]; 3]) -> Result<Self> {
        check_dim(d)?;
        if t.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::Domain("correlation matrix has non-finite entries".into()));
        }
        Ok(Self { d, t })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn t(&self) -> &[[T; 3]; 3] {
        &self.t
    }
}

fn assemble<T: Real>(d: usize, terms: impl IntoIterator<Item = (GeneratorId, GeneratorId, T)>) -> Result<DensityOperator<T>> {
    let n = d * d;
    let mut m = ComplexMatrix::identity(n);
    for (a, b, v) in terms {
        if v == T::zero() {
            continue;
        }
        let term = tensor(&generator::<T>(a, d)?, &generator::<T>(b, d)?)?;
        m = &m + &term.scale(v);
    }
    let dd = T::from(n).unwrap();
    validate_density(m.scale(T::one() / dd), &Tolerance::default())
}

/// Builds and validates the diagonal-family state.
pub fn build_diag_state<T: Real>(spec: &DiagCorrelationSpec<T>) -> Result<DensityOperator<T>> {
    assemble(spec.d, spec.coeffs.iter().map(|&(id, v)| (id, id, v)))
}

/// Builds and validates the 3×3 block-correlated state.
pub fn build_block_state<T: Real>(spec: &BlockCorrelationSpec<T>) -> Result<DensityOperator<T>> {
    let sig = [SIGMA1, SIGMA2, SIGMA3];
    let terms: Vec<_> = (0..3).flat_map(|j| (0..3).map(move |k| (j, k))).map(|(j, k)| (sig[j], sig[k], spec.t[j][k])).collect();
    assemble(spec.d, terms)
}

/// `τ_k = d² λ_k` for the four distinguished eigenvalues of the
/// three-coefficient state: `1 - c₁ ± (c₂ + c₃)` and `1 + c₁ ± (c₂ - c₃)`.
pub fn diag3_taus<T: Real>(c: [T; 3]) -> [T; 4] {
    let one = T::one();
    [
        one - c[0] + (c[1] + c[2]),
        one - c[0] - (c[1] + c[2]),
        one + c[0] + (c[1] - c[2]),
        one + c[0] - (c[1] - c[2]),
    ]
}

/// Closed-form spectrum of the three-coefficient state as
/// `(eigenvalue, multiplicity)`: the four `τ_k/d²` once each, then `1/d²`
/// with multiplicity `d² - 4` when `d > 2`. Values may be negative.
pub fn closed_form_spectrum_diag3<T: Real>(c: [T; 3], d: usize) -> Vec<(T, usize)> {
    let dd = T::from(d * d).unwrap();
    let mut out: Vec<(T, usize)> = diag3_taus(c).iter().map(|&t| (t / dd, 1)).collect();
    if d > 2 {
        out.push((T::one() / dd, d * d - 4));
    }
    out
}

/// Expands [`closed_form_spectrum_diag3`] into a sorted list.
pub fn closed_form_spectrum_sorted<T: Real>(c: [T; 3], d: usize) -> Vec<T> {
    let mut v: Vec<T> = closed_form_spectrum_diag3(c, d)
        .into_iter()
        .flat_map(|(val, m)| std::iter::repeat_n(val, m))
        .collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

/// Nonnegativity of all four `τ_k` within `tol`.
pub fn is_admissible_diag3<T: Real>(c: [T; 3], tol: T) -> bool {
    diag3_taus(c).iter().all(|&t| t >= -tol)
}
