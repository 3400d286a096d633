use serde::Serialize;

use superdiscord::sqd::{distribution_samples, summarize, DistributionConfig, EntropyFactor, Sampler};

use crate::args::{DistributionArgs, Format, SamplerKind};
use crate::config::{Resolved, SCHEMA_VERSION};
use crate::error::{CliError, CliResult};
use crate::output::{csv_rows, emit, json};

/// Published reference percentages for the two strengths they were stated at.
pub fn reference_percent(x: f64) -> Option<f64> {
    if x.abs() == 0.5 {
        Some(27.66)
    } else if x.abs() >= 30.0 {
        Some(88.55)
    } else {
        None
    }
}

#[derive(Serialize)]
struct DistributionDoc {
    schema_version: u32,
    command: &'static str,
    d: usize,
    x: f64,
    sampler: &'static str,
    grid_step: f64,
    seed: u64,
    samples: usize,
    nonneg: usize,
    fraction_nonneg: f64,
    percent_nonneg: f64,
    reference_percent: Option<f64>,
    deviation_points: Option<f64>,
    printed_factor_percent_nonneg: f64,
}

#[derive(Serialize)]
struct SampleRow {
    c1: f64,
    c2: f64,
    c3: f64,
    d_value: f64,
}

pub fn run(args: &DistributionArgs) -> CliResult<()> {
    let cfg = Resolved::new(&args.common)?;
    let d = cfg.d_or(3);
    let x = args.x.or(cfg.file.x).unwrap_or(0.5);
    let step = args.step.or(cfg.file.step).unwrap_or(0.01);
    let sampler = match args.sampler.or(cfg.file.sampler).unwrap_or(SamplerKind::Grid) {
        SamplerKind::Grid => Sampler::Grid,
        SamplerKind::Random => Sampler::Random { samples: args.samples.or(cfg.file.samples).unwrap_or(332_980) },
    };
    let dcfg = DistributionConfig { d, x, grid_step: step, sampler, seed: cfg.seed, factor: EntropyFactor::Derived };
    let samples = distribution_samples(&dcfg)?;
    let res = summarize(&dcfg, &samples)?;
    if !(0.0..=1.0).contains(&res.fraction_nonneg) {
        return Err(CliError::Invariant(format!("fraction {} outside [0, 1]", res.fraction_nonneg)));
    }
    let pcfg = DistributionConfig { factor: EntropyFactor::Printed, ..dcfg.clone() };
    let printed = summarize(&pcfg, &distribution_samples(&pcfg)?)?;

    if let Some(path) = &args.samples_out {
        let rows: Vec<SampleRow> =
            samples.iter().map(|s| SampleRow { c1: s.c[0], c2: s.c[1], c3: s.c[2], d_value: s.d_value }).collect();
        std::fs::write(path, csv_rows(&rows)?)?;
    }

    let percent = 100.0 * res.fraction_nonneg;
    let reference = reference_percent(x);
    let doc = DistributionDoc {
        schema_version: SCHEMA_VERSION,
        command: "distribution",
        d,
        x,
        sampler: match sampler {
            Sampler::Grid => "grid",
            Sampler::Random { .. } => "random",
        },
        grid_step: step,
        seed: cfg.seed,
        samples: res.samples,
        nonneg: res.nonneg,
        fraction_nonneg: res.fraction_nonneg,
        percent_nonneg: percent,
        reference_percent: reference,
        deviation_points: reference.map(|r| percent - r),
        printed_factor_percent_nonneg: 100.0 * printed.fraction_nonneg,
    };
    let text = match cfg.format.unwrap_or(Format::Json) {
        Format::Json => json(&doc)?,
        Format::Csv => csv_rows(&[doc])?,
    };
    emit(cfg.out.as_deref(), &text)
}
