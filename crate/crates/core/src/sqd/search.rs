//! Numerical lower bound on the classical correlation `J` by searching over
//! measurement families.
//!
//! Two routes are combined: a Fibonacci lattice on the z-sphere of the
//! special family followed by pattern-search refinement in spherical angles,
//! and random-restart coordinate descent over general frames written as an
//! ordered product of complex Givens rotations. Restart `r` draws from
//! ChaCha8 keyed by `(seed, stream = r)`, and restarts are reduced in index
//! order, so results do not depend on thread scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qmat::{ComplexMatrix, DensityOperator, Subsystem};
use crate::scalar::c;
use crate::weakmeas::{build_general_family, build_special_family, Orientation, ZVector};

use super::measures::measured_conditional_entropy;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOptions {
    pub restarts: usize,
    pub seed: u64,
    pub lattice_points: usize,
    /// Pattern search stops once the step falls below this.
    pub step_tol: f64,
    /// Objective evaluations allowed per refinement or restart.
    pub max_evals: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { restarts: 16, seed: 0, lattice_points: 2000, step_tol: 1e-10, max_evals: 20_000 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum BestFamily {
    Special { orientation: Orientation<f64> },
    General { angles: Vec<f64>, frame: ComplexMatrix<f64> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    /// Best measured mutual information found.
    pub value: f64,
    pub family: BestFamily,
    /// Best lattice value before refinement.
    pub lattice_value: f64,
    pub special_value: f64,
    /// Final value of each general-frame restart, in restart order.
    pub restart_values: Vec<f64>,
    pub evaluations: usize,
}

/// `n` nearly uniform points on the unit sphere.
pub fn fibonacci_sphere(n: usize) -> Vec<[f64; 3]> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden * i as f64;
            [r * phi.cos(), r * phi.sin(), z]
        })
        .collect()
}

fn spherical(z: [f64; 3]) -> [f64; 2] {
    [z[2].clamp(-1.0, 1.0).acos(), z[1].atan2(z[0])]
}

fn from_spherical(p: [f64; 2]) -> [f64; 3] {
    let (sb, cb) = p[0].sin_cos();
    let (sa, ca) = p[1].sin_cos();
    [sb * ca, sb * sa, cb]
}

/// Product `G(0,1) G(0,2) … G(d-2,d-1)` with angles `(θ, φ)` per pair.
pub fn givens_frame(d: usize, angles: &[f64]) -> ComplexMatrix<f64> {
    let mut u = ComplexMatrix::identity(d);
    let mut k = 0;
    for i in 0..d {
        for j in i + 1..d {
            let (theta, phi) = (angles[k], angles[k + 1]);
            k += 2;
            let (s, co) = theta.sin_cos();
            let e = c(phi.cos(), phi.sin());
            let g = ComplexMatrix::from_fn(d, d, |r, q| match (r, q) {
                _ if (r, q) == (i, i) || (r, q) == (j, j) => c(co, 0.0),
                _ if (r, q) == (i, j) => -e * s,
                _ if (r, q) == (j, i) => e.conj() * s,
                _ if r == q => c(1.0, 0.0),
                _ => c(0.0, 0.0),
            });
            u = &u * &g;
        }
    }
    u
}

struct Objective<'a> {
    rho: &'a DensityOperator<f64>,
    d: usize,
    x: f64,
    s_b: f64,
}

impl Objective<'_> {
    fn special(&self, z: [f64; 3]) -> Result<f64> {
        let o = Orientation::from_z(ZVector(z));
        let fam = build_special_family(&o, self.x, self.d)?;
        Ok(self.s_b - measured_conditional_entropy(self.rho, &fam)?)
    }

    fn general(&self, angles: &[f64]) -> Result<f64> {
        let fam = build_general_family(&givens_frame(self.d, angles), (0, 1), self.x)?;
        Ok(self.s_b - measured_conditional_entropy(self.rho, &fam)?)
    }
}

/// Coordinate pattern search maximizing `f`. Each coordinate tries `±h` and
/// the vertex of the parabola through the three samples; `h` halves when no
/// coordinate improves.
fn pattern_search<F>(mut p: Vec<f64>, mut fp: f64, h0: f64, opts: &SearchOptions, evals: &mut usize, f: F) -> Result<(Vec<f64>, f64)>
where
    F: Fn(&[f64]) -> Result<f64>,
{
    let mut h = h0;
    while h > opts.step_tol && *evals < opts.max_evals {
        let mut improved = false;
        for k in 0..p.len() {
            let mut trial = p.clone();
            trial[k] = p[k] + h;
            let fplus = f(&trial)?;
            trial[k] = p[k] - h;
            let fminus = f(&trial)?;
            *evals += 2;
            let mut best = (fp, 0.0);
            if fplus > best.0 {
                best = (fplus, h);
            }
            if fminus > best.0 {
                best = (fminus, -h);
            }
            let curv = fplus - 2.0 * fp + fminus;
            if curv < 0.0 {
                let t = (h * (fminus - fplus) / (2.0 * curv)).clamp(-2.0 * h, 2.0 * h);
                if t != 0.0 && t.abs() != h {
                    trial[k] = p[k] + t;
                    let fv = f(&trial)?;
                    *evals += 1;
                    if fv > best.0 {
                        best = (fv, t);
                    }
                }
            }
            if best.1 != 0.0 {
                p[k] += best.1;
                fp = best.0;
                improved = true;
            }
        }
        if !improved {
            h *= 0.5;
        }
    }
    Ok((p, fp))
}

/// Best measured mutual information over special and general families at strength `x`.
pub fn classical_correlation_search(rho: &DensityOperator<f64>, x: f64, opts: &SearchOptions) -> Result<SearchResult> {
    let n = rho.dim();
    let d = (n as f64).sqrt().round() as usize;
    if d * d != n || d < 2 {
        return Err(Error::Dimension(format!("search needs a d×d bipartite state, got dimension {n}")));
    }
    if opts.restarts == 0 || opts.lattice_points == 0 {
        return Err(Error::Domain("search needs at least one restart and one lattice point".into()));
    }
    let s_b = rho.partial_trace(Subsystem::B, (d, d))?.entropy()?;
    let obj = Objective { rho, d, x, s_b };

    let lattice = fibonacci_sphere(opts.lattice_points);
    let values = lattice.par_iter().map(|&z| obj.special(z)).collect::<Result<Vec<f64>>>()?;
    let (best_i, &lattice_value) =
        values.iter().enumerate().fold((0, &f64::NEG_INFINITY), |acc, (i, v)| if *v > *acc.1 { (i, v) } else { acc });
    let mut evals = values.len();
    let spacing = (4.0 * std::f64::consts::PI / opts.lattice_points as f64).sqrt();
    let start = spherical(lattice[best_i]).to_vec();
    let (p, special_value) =
        pattern_search(start, lattice_value, spacing, opts, &mut evals, |q| obj.special(from_spherical([q[0], q[1]])))?;
    let special_orientation = Orientation::from_z(ZVector(from_spherical([p[0], p[1]])));

    let nangles = d * (d - 1);
    let restarts = (0..opts.restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(r as u64);
            let start: Vec<f64> = (0..nangles).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect();
            let f0 = obj.general(&start)?;
            let mut ev = 1;
            let (a, v) = pattern_search(start, f0, 0.5, opts, &mut ev, |q| obj.general(q))?;
            Ok((a, v, ev))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut value = special_value;
    let mut family = BestFamily::Special { orientation: special_orientation };
    let mut restart_values = Vec::with_capacity(restarts.len());
    for (angles, v, ev) in restarts {
        evals += ev;
        restart_values.push(v);
        if v > value {
            value = v;
            family = BestFamily::General { frame: givens_frame(d, &angles), angles };
        }
    }
    Ok(SearchResult { value, family, lattice_value, special_value, restart_values, evaluations: evals })
}
