//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Runs without the libtest harness so the summary is always printed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superdiscord::channels::{
    apply_channel_local_a, bitflip01, channel_gap_general, channel_gap_oracle, evolved_diag_spec, evolved_spectrum,
    werner_gap_t,
};
use superdiscord::qmat::hermitian_spectrum;
use superdiscord::random;
use superdiscord::sqd::{
    classical_correlation_search, classical_state_correlations, distribution_experiment, distribution_samples,
    finite_strength_correlations, measured_mutual_information, mutual_information, pure_state_correlations,
    sqd_bound_closed_form, sqd_upper_bound_at, sqd_upper_bound_diag, theta_diag, CorrelationSpec, DistributionConfig,
    EntropyFactor, SearchOptions, Strength,
};
use superdiscord::sud_basis::{build_diag_state, closed_form_spectrum_sorted, DiagCorrelationSpec};
use superdiscord::weakmeas::{build_special_family, entropic_h, z_from_orientation};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let xs = [0.0, 0.5, -0.5, 2.0, -2.0, 30.0, -30.0];
    let (mut worst_axiom, mut worst_limit) = (0f64, 0f64);
    for _ in 0..200 {
        let o = random::orientation::<f64, _>(&mut rng);
        for d in 2..=6 {
            for &x in &xs {
                let fam = build_special_family(&o, x, d).map_err(e)?;
                let ax = fam.axiom_defects().map_err(e)?;
                worst_axiom = worst_axiom.max(ax.completeness).max(ax.commutator);
                if x.abs() == 30.0 {
                    let limit = if x > 0.0 { fam.strong_limit() } else { fam.projectors() };
                    for (p, q) in fam.operators().iter().zip(&limit) {
                        worst_limit = worst_limit.max(p.max_abs_diff(q));
                    }
                }
            }
        }
    }
    ensure(worst_axiom <= 1e-12, format!("axiom defect {worst_axiom:.2e} > 1e-12"))?;
    ensure(worst_limit <= 1e-10, format!("strong-limit defect {worst_limit:.2e} > 1e-10"))?;
    Ok(format!("7000 families, max axiom defect {worst_axiom:.2e}, max strong-limit defect {worst_limit:.2e}"))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    let mut worst = 0f64;
    for d in 2..=4 {
        for _ in 0..1000 {
            let c = random::admissible_coeffs::<f64, _>(&mut rng);
            let rho = build_diag_state(&DiagCorrelationSpec::three(d, c).map_err(e)?).map_err(e)?;
            let num = hermitian_spectrum(rho.matrix()).map_err(e)?;
            let cf = closed_form_spectrum_sorted(c, d);
            for (a, b) in num.iter().zip(&cf) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    ensure(worst <= 1e-10, format!("spectrum mismatch {worst:.2e} > 1e-10"))?;
    Ok(format!("3000 states, max eigenvalue mismatch {worst:.2e}"))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    let (mut worst, mut printed_gap, mut worst_bound) = (0f64, 0f64, 0f64);
    for d in 2..=4 {
        let k = 2.0 / (d * d) as f64;
        for _ in 0..1000 {
            let c = random::admissible_coeffs::<f64, _>(&mut rng);
            let x = rng.random_range(-4.0..4.0);
            let o = random::orientation::<f64, _>(&mut rng);
            let spec = DiagCorrelationSpec::three(d, c).map_err(e)?;
            let rho = build_diag_state(&spec).map_err(e)?;
            let fam = build_special_family(&o, x, d).map_err(e)?;
            let measured = measured_mutual_information(&rho, &fam).map_err(e)?;
            let h = entropic_h(theta_diag(c, &z_from_orientation(&o), x)).map_err(e)?;
            worst = worst.max((measured - k * h).abs());
            printed_gap = printed_gap.max((measured - 2.0 / d as f64 * h).abs());
            let rep = sqd_upper_bound_diag(&spec, x).map_err(e)?;
            let cf = sqd_bound_closed_form(c, Strength::Weak(x), d, EntropyFactor::Derived).map_err(e)?;
            worst_bound = worst_bound.max((rep.sqd_upper_bound - cf).abs()).max(rep.oracle_residual);
        }
    }
    ensure(worst <= 1e-10, format!("measured MI vs (2/d²)H(θ): {worst:.2e} > 1e-10"))?;
    ensure(worst_bound <= 1e-10, format!("bound vs closed form: {worst_bound:.2e} > 1e-10"))?;
    ensure(printed_gap > 1e-3, "the 2/d variant unexpectedly agrees with the eigen oracle")?;
    Ok(format!(
        "3000 samples, (2/d²)H(θ) residual {worst:.2e}, bound residual {worst_bound:.2e}; 2/d variant inconsistent by up to {printed_gap:.3}"
    ))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    let opts = SearchOptions::default();
    let mut worst = 0f64;
    for _ in 0..50 {
        let c = random::admissible_coeffs::<f64, _>(&mut rng);
        let x: f64 = rng.random_range(-3.0..3.0);
        let rho = build_diag_state(&DiagCorrelationSpec::three(2, c).map_err(e)?).map_err(e)?;
        let cmax = c.iter().fold(0f64, |m, v| m.max(v.abs()));
        let analytic = entropic_h(cmax * f64::tanh(x.abs())).map_err(e)? / 2.0;
        let found = classical_correlation_search(&rho, x, &opts).map_err(e)?.value;
        worst = worst.max((found - analytic).abs());
    }
    ensure(worst <= 1e-6, format!("search vs analytic {worst:.2e} > 1e-6"))?;
    Ok(format!("50 d=2 states, max |search - H(c tanh x)/2| = {worst:.2e}"))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    let (mut worst_limit, mut worst_rise) = (0f64, 0f64);
    for _ in 0..100 {
        let d = rng.random_range(2..=4);
        let c = random::admissible_coeffs::<f64, _>(&mut rng);
        let spec = CorrelationSpec::Diag(DiagCorrelationSpec::three(d, c).map_err(e)?);
        let b30 = sqd_upper_bound_at(&spec, Strength::Weak(30.0)).map_err(e)?.sqd_upper_bound;
        let proj = sqd_upper_bound_at(&spec, Strength::Projective).map_err(e)?.sqd_upper_bound;
        worst_limit = worst_limit.max((b30 - proj).abs());
        let mut prev = f64::INFINITY;
        for i in 0..=20 {
            let b = sqd_upper_bound_at(&spec, Strength::Weak(0.25 * i as f64)).map_err(e)?.sqd_upper_bound;
            worst_rise = worst_rise.max(b - prev);
            prev = b;
        }
    }
    ensure(worst_limit <= 1e-8, format!("x=30 vs projective {worst_limit:.2e} > 1e-8"))?;
    ensure(worst_rise <= 1e-12, format!("bound increased by {worst_rise:.2e} along |x|"))?;
    Ok(format!("100 states, projective-limit gap {worst_limit:.2e}, bound nonincreasing on x = 0..5"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    let mut worst = 0f64;
    for _ in 0..10 {
        let c = random::admissible_coeffs::<f64, _>(&mut rng);
        let x = rng.random_range(-3.0..3.0);
        let scaled = [2usize, 3, 5, 8]
            .iter()
            .map(|&d| {
                let rep = sqd_upper_bound_diag(&DiagCorrelationSpec::three(d, c).map_err(e)?, x).map_err(e)?;
                Ok((d * d) as f64 * rep.sqd_upper_bound)
            })
            .collect::<Result<Vec<f64>, String>>()?;
        for v in &scaled[1..] {
            worst = worst.max((v - scaled[0]).abs());
        }
    }
    ensure(worst <= 1e-10, format!("d²·bound spread {worst:.2e} > 1e-10"))?;
    Ok(format!("10 states, max spread of d²·bound over d in {{2,3,5,8}} = {worst:.2e}"))
}

fn criterion_7() -> Outcome {
    let frac = |x: f64, factor: EntropyFactor| -> Result<(f64, usize), String> {
        let cfg = DistributionConfig { factor, ..DistributionConfig::grid(3, x, 0.01) };
        let r = distribution_experiment(&cfg).map_err(e)?;
        Ok((100.0 * r.fraction_nonneg, r.samples))
    };
    let (f05, n) = frac(0.5, EntropyFactor::Derived)?;
    let (f30, _) = frac(30.0, EntropyFactor::Derived)?;
    let (p05, _) = frac(0.5, EntropyFactor::Printed)?;
    let (p30, _) = frac(30.0, EntropyFactor::Printed)?;
    let grid = |x| distribution_samples(&DistributionConfig::grid(3, x, 0.01)).map_err(e);
    let (a, b, c) = (grid(0.25)?, grid(0.5)?, grid(1.0)?);
    let count = |s: &[superdiscord::sqd::DistributionSample]| s.iter().filter(|v| v.d_value >= 0.0).count();
    let pointwise = a.iter().zip(&b).zip(&c).all(|((p, q), r)| p.d_value <= q.d_value && q.d_value <= r.d_value);
    let monotone = count(&a) <= count(&b) && count(&b) <= count(&c) && pointwise;
    let detail = format!(
        "{n} grid points; x=0.5: {f05:.4}% (target 27.66 ± 3), x=30: {f30:.2}% (target 88.55 ± 3); \
         2/d variant: {p05:.2}% / {p30:.2}%; monotone in x: {monotone}"
    );
    ensure((f05 - 27.66).abs() <= 3.0 && (f30 - 88.55).abs() <= 3.0 && monotone, detail.clone())?;
    Ok(detail)
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1008);
    let (mut complete, mut trace, mut coeff, mut spec_err) = (0f64, 0f64, 0f64, 0f64);
    for d in 2..=4 {
        for &g in &[0.0, 0.25, 0.5, 0.75, 1.0] {
            let ch = bitflip01(g, d).map_err(e)?;
            complete = complete.max(ch.completeness_defect());
            let c = random::admissible_coeffs::<f64, _>(&mut rng);
            let spec = DiagCorrelationSpec::three(d, c).map_err(e)?;
            let out = apply_channel_local_a(&build_diag_state(&spec).map_err(e)?, &ch).map_err(e)?;
            trace = trace.max((out.matrix().trace().re - 1.0).abs());
            let direct = build_diag_state(&evolved_diag_spec(&spec, g).map_err(e)?).map_err(e)?;
            coeff = coeff.max(out.matrix().max_abs_diff(direct.matrix()));
            let num = hermitian_spectrum(out.matrix()).map_err(e)?;
            let mut cf: Vec<f64> = evolved_spectrum(c, g, d).into_iter().flat_map(|(v, m)| std::iter::repeat_n(v, m)).collect();
            cf.sort_by(|a, b| a.total_cmp(b));
            spec_err = num.iter().zip(&cf).fold(spec_err, |m, (a, b)| m.max((a - b).abs()));
        }
    }
    let mut t0 = 0f64;
    let mut min_slope = f64::INFINITY;
    for i in 0..100 {
        let cv = i as f64 / 99.0;
        t0 = t0.max(werner_gap_t(cv, 0.0).map_err(e)?.abs());
        let mut prev = werner_gap_t(cv, 0.0).map_err(e)?;
        for j in 1..100 {
            let t = werner_gap_t(cv, j as f64 / 99.0).map_err(e)?;
            min_slope = min_slope.min(t - prev);
            prev = t;
        }
    }
    let parts = [
        ("completeness", complete <= 1e-10, complete),
        ("trace", trace <= 1e-10, trace),
        ("coefficient map", coeff <= 1e-10, coeff),
        ("spectra", spec_err <= 1e-10, spec_err),
        ("T(c,0)=0", t0 <= 1e-10, t0),
        ("T slope >= 0", min_slope >= -1e-12, min_slope),
    ];
    let detail = parts
        .iter()
        .map(|(name, ok, v)| format!("{name} {} ({v:.2e})", if *ok { "ok" } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join("; ");
    ensure(parts.iter().all(|p| p.1), detail.clone())?;
    Ok(detail)
}

fn criterion_9() -> Outcome {
    let spec = DiagCorrelationSpec::three(2, [0.2, 0.35, 0.1]).map_err(e)?;
    let closed = channel_gap_general(&spec, 0.9, 4.0).map_err(e)?;
    let oracle = channel_gap_oracle(&spec, 0.9, 4.0, &SearchOptions::default()).map_err(e)?;
    let diff = (closed - oracle).abs();
    ensure(diff <= 1e-9, format!("routes disagree by {diff:.2e}: closed {closed:.9}, oracle {oracle:.9}"))?;
    Ok(format!("closed form {closed:+.6}, eigen pipeline {oracle:+.6} (|Δ| = {diff:.1e}); reference value -0.0180 not reproduced"))
}

fn criterion_10() -> Outcome {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let u3 = 1.0 / 3f64.sqrt();
    let opts = SearchOptions { restarts: 4, lattice_points: 800, ..SearchOptions::default() };
    let mut notes = Vec::new();
    for amps in [vec![h, h], vec![1.0, 0.0], vec![u3, u3, u3], vec![0.8, 0.6]] {
        let p = pure_state_correlations(&amps).map_err(e)?;
        let en = p.entropy;
        ensure(p.stated.mutual_info == 2.0 * en && p.stated.classical == en && p.stated.discord == en, "pure triple shape")?;
        let d = amps.len();
        let i = mutual_information(&p.state, (d, d)).map_err(e)?;
        ensure((i - 2.0 * en).abs() <= 1e-9, format!("pure-state I = {i} vs 2E = {}", 2.0 * en))?;
        let num = finite_strength_correlations(&p.state, 1.0, &opts).map_err(e)?;
        notes.push(format!("E={en:.3}: SD(x=1)≈{:.3} vs stated {en:.3}", num.discord));
    }
    let dist = vec![vec![0.4f64, 0.1], vec![0.1, 0.4]];
    let cl = classical_state_correlations(&dist).map_err(e)?;
    let ip = cl.mutual_info_p;
    ensure(cl.stated.mutual_info == ip && cl.stated.classical == ip && cl.stated.discord == 0.0, "classical triple shape")?;
    let i = mutual_information(&cl.state, (2, 2)).map_err(e)?;
    ensure((i - ip).abs() <= 1e-9, format!("classical-state I = {i} vs I(p) = {ip}"))?;
    let num = finite_strength_correlations(&cl.state, 1.0, &opts).map_err(e)?;
    notes.push(format!("I(p)={ip:.3}: SD(x=1)≈{:.3} vs stated 0", num.discord));
    Ok(format!("stated triples consistent; {}", notes.join("; ")))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("weak-measurement axioms", criterion_1),
        ("closed-form spectrum", criterion_2),
        ("entropy-factor adjudication", criterion_3),
        ("d=2 exactness of the search", criterion_4),
        ("projective limit and monotonicity", criterion_5),
        ("d² scaling", criterion_6),
        ("distribution statistic", criterion_7),
        ("channel suite", criterion_8),
        ("channel-gap example, two routes", criterion_9),
        ("pure/classical displays", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
