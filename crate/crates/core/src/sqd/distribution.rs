//! Sign statistics of the difference `D` over the admissible coefficient
//! region inside `[0, 1]³`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sud_basis::diag3_taus;

use super::bounds::{correlation_difference_with, EntropyFactor};

/// Points with every `τ_k ≥ -ADMISSIBLE_SLACK` are retained, so grid points
/// on the boundary face survive round-off in `i·step`.
pub const ADMISSIBLE_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Sampler {
    /// Inclusive grid `{0, h, 2h, …} ³`.
    Grid,
    /// Uniform draws from the cube, then filtered.
    Random { samples: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistributionConfig {
    pub d: usize,
    pub x: f64,
    pub grid_step: f64,
    pub sampler: Sampler,
    pub seed: u64,
    pub factor: EntropyFactor,
}

impl DistributionConfig {
    pub fn grid(d: usize, x: f64, grid_step: f64) -> Self {
        Self { d, x, grid_step, sampler: Sampler::Grid, seed: 0, factor: EntropyFactor::Derived }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistributionSample {
    pub c: [f64; 3],
    pub d_value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistributionResult {
    pub samples: usize,
    pub nonneg: usize,
    pub fraction_nonneg: f64,
    pub grid_step: f64,
    pub d: usize,
    pub x: f64,
    pub factor: EntropyFactor,
}

fn admissible(c: [f64; 3]) -> bool {
    diag3_taus(c).iter().all(|&t| t >= -ADMISSIBLE_SLACK)
}

/// Retained coefficient points in deterministic order.
pub fn sample_points(cfg: &DistributionConfig) -> Result<Vec<[f64; 3]>> {
    let pts: Vec<[f64; 3]> = match cfg.sampler {
        Sampler::Grid => {
            if !(cfg.grid_step > 0.0 && cfg.grid_step <= 1.0) {
                return Err(Error::Domain(format!("grid step must lie in (0, 1], got {}", cfg.grid_step)));
            }
            let h = cfg.grid_step;
            let n = (1.0 / h + 1e-9).floor() as usize;
            (0..=n)
                .into_par_iter()
                .map(|i| {
                    let mut row = Vec::new();
                    for j in 0..=n {
                        for k in 0..=n {
                            let c = [i as f64 * h, j as f64 * h, k as f64 * h];
                            if admissible(c) {
                                row.push(c);
                            }
                        }
                    }
                    row
                })
                .flatten()
                .collect()
        }
        Sampler::Random { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            (0..samples)
                .map(|_| std::array::from_fn(|_| rng.random_range(0.0..=1.0)))
                .filter(|&c| admissible(c))
                .collect()
        }
    };
    if pts.is_empty() {
        return Err(Error::EmptySample(format!("no admissible points for {:?}", cfg.sampler)));
    }
    Ok(pts)
}

/// `D` at every retained point, in the order of [`sample_points`].
pub fn distribution_samples(cfg: &DistributionConfig) -> Result<Vec<DistributionSample>> {
    let pts = sample_points(cfg)?;
    pts.par_iter()
        .map(|&c| Ok(DistributionSample { c, d_value: correlation_difference_with(clamp(c), cfg.x, cfg.d, cfg.factor)? }))
        .collect()
}

// Boundary points within the slack are pushed onto the face so the closed form accepts them.
fn clamp(c: [f64; 3]) -> [f64; 3] {
    let s = c[0] + c[1] + c[2];
    if s > 1.0 {
        c.map(|v| v / s)
    } else {
        c
    }
}

pub fn summarize(cfg: &DistributionConfig, samples: &[DistributionSample]) -> Result<DistributionResult> {
    if samples.is_empty() {
        return Err(Error::EmptySample("no samples to summarize".into()));
    }
    let nonneg = samples.iter().filter(|s| s.d_value >= 0.0).count();
    Ok(DistributionResult {
        samples: samples.len(),
        nonneg,
        fraction_nonneg: nonneg as f64 / samples.len() as f64,
        grid_step: cfg.grid_step,
        d: cfg.d,
        x: cfg.x,
        factor: cfg.factor,
    })
}

pub fn distribution_experiment(cfg: &DistributionConfig) -> Result<DistributionResult> {
    summarize(cfg, &distribution_samples(cfg)?)
}
