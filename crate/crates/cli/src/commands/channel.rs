use serde::Serialize;

use superdiscord::channels::{
    apply_channel_local_a, bitflip01, channel_gap_oracle, evolved_diag_coeffs, sqd_bound_after_channel, werner_gap_t,
    KrausChannel,
};
use superdiscord::qmat::ComplexMatrix;
use superdiscord::scalar::C;
use superdiscord::sqd::{classical_correlation_search, mutual_information, sqd_upper_bound_diag, CorrelationReport, SearchOptions};
use superdiscord::sud_basis::{build_diag_state, DiagCorrelationSpec};
use superdiscord::CMatrix;

use crate::args::{ChannelArgs, Format};
use crate::config::{require, Entry, Resolved, StateSpec, SCHEMA_VERSION};
use crate::error::{CliError, CliResult};
use crate::output::{csv_rows, emit, json, Flag};

use super::report::check_report;

#[derive(Serialize, Clone, Copy)]
struct Side {
    mutual_info: f64,
    classical_corr_special: f64,
    sqd_upper_bound: f64,
}

impl From<&CorrelationReport<f64>> for Side {
    fn from(r: &CorrelationReport<f64>) -> Self {
        Self { mutual_info: r.mutual_info, classical_corr_special: r.classical_corr_special, sqd_upper_bound: r.sqd_upper_bound }
    }
}

#[derive(Serialize)]
struct ChannelDesc {
    name: &'static str,
    alias: Option<&'static str>,
    gamma: Option<f64>,
    operators: usize,
}

#[derive(Serialize)]
struct ChannelDoc {
    schema_version: u32,
    command: &'static str,
    d: usize,
    x: f64,
    c: [f64; 3],
    channel: ChannelDesc,
    evolved_c: Option<[f64; 3]>,
    before: Side,
    after: Side,
    gap: f64,
    oracle_gap: Option<f64>,
    werner_gap_t: Option<f64>,
    flags: Vec<Flag>,
}

#[derive(Serialize)]
struct ChannelRow {
    d: usize,
    x: f64,
    gamma: Option<f64>,
    bound_before: f64,
    bound_after: f64,
    gap: f64,
    oracle_gap: Option<f64>,
}

fn kraus_matrices(ops: &[Vec<Vec<Entry>>]) -> CliResult<Vec<CMatrix>> {
    ops.iter()
        .map(|rows| {
            let n = rows.len();
            if rows.iter().any(|r| r.len() != n) {
                return Err(CliError::Config("Kraus operators must be square".into()));
            }
            Ok(ComplexMatrix::from_fn(n, n, |i, j| {
                let (re, im) = rows[i][j].parts();
                C::new(re, im)
            }))
        })
        .collect()
}

/// `c_i = -c` with `c ∈ [0, 1]` at `d = 2`.
fn werner_parameter(c: [f64; 3], d: usize) -> Option<f64> {
    (d == 2 && c[0] == c[1] && c[1] == c[2] && c[0] <= 0.0 && c[0] >= -1.0).then_some(-c[0])
}

pub fn run(args: &ChannelArgs) -> CliResult<()> {
    let cfg = Resolved::new(&args.common)?;
    let d = cfg.d_or(2);
    let x = require(args.x.or(cfg.file.x), "x")?;
    let c = match cfg.state(&args.state)? {
        StateSpec::Diag(c) => c,
        StateSpec::Block(_) => return Err(CliError::Config("the channel command takes --c, not --tmatrix".into())),
    };
    let spec = DiagCorrelationSpec::three(d, c)?;
    let before = sqd_upper_bound_diag(&spec, x)?;
    check_report(&before)?;
    let chan_cfg = cfg.file.channel.clone().unwrap_or_default();
    let gamma = args.gamma.or(cfg.file.gamma).or(chan_cfg.gamma);
    let opts = SearchOptions { seed: cfg.seed, ..SearchOptions::default() };
    let mut flags = Vec::new();

    let (desc, evolved_c, after, oracle_gap) = match (&chan_cfg.kraus, gamma) {
        (Some(_), Some(_)) => return Err(CliError::Config("give either gamma or a custom Kraus list".into())),
        (Some(ops), None) => {
            let ch = KrausChannel::new(kraus_matrices(ops)?)?;
            let rho = apply_channel_local_a(&build_diag_state(&spec)?, &ch)?;
            let i = mutual_information(&rho, (d, d))?;
            let j = classical_correlation_search(&rho, x, &opts)?.special_value;
            let side = Side { mutual_info: i, classical_corr_special: j, sqd_upper_bound: i - j };
            flags.push(Flag { id: "custom-channel", message: "after-channel values come from the numerical pipeline".into() });
            (ChannelDesc { name: "custom", alias: None, gamma: None, operators: ops.len() }, None, side, None)
        }
        (None, g) => {
            let g = require(g, "gamma")?;
            let after = sqd_bound_after_channel(&spec, g, x)?;
            check_report(&after)?;
            let oracle = if args.oracle { Some(channel_gap_oracle(&spec, g, x, &opts)?) } else { None };
            let desc = ChannelDesc { name: "bitflip01", alias: Some("phase-damping"), gamma: Some(g), operators: 2 };
            bitflip01(g, d)?;
            (desc, Some(evolved_diag_coeffs(c, g)), Side::from(&after), oracle)
        }
    };
    let gap = before.sqd_upper_bound - after.sqd_upper_bound;
    if let Some(o) = oracle_gap {
        if (o - gap).abs() > 1e-9 {
            return Err(CliError::Invariant(format!("closed-form gap {gap} and pipeline gap {o} disagree")));
        }
    }
    let werner = match (werner_parameter(c, d), gamma) {
        (Some(w), Some(g)) => Some(werner_gap_t(w, g)?),
        _ => None,
    };
    if d == 2 && c == [0.2, 0.35, 0.1] && gamma == Some(0.9) && x == 4.0 {
        flags.push(Flag { id: "channel-example", message: format!("computed gap {gap:+.6}; the reference value -0.0180 is not reproduced") });
    }

    let out = cfg.out.as_deref();
    match cfg.format.unwrap_or(Format::Json) {
        Format::Json => {
            let doc = ChannelDoc {
                schema_version: SCHEMA_VERSION,
                command: "channel",
                d,
                x,
                c,
                channel: desc,
                evolved_c,
                before: Side::from(&before),
                after,
                gap,
                oracle_gap,
                werner_gap_t: werner,
                flags,
            };
            emit(out, &json(&doc)?)
        }
        Format::Csv => {
            let row = ChannelRow {
                d,
                x,
                gamma,
                bound_before: before.sqd_upper_bound,
                bound_after: after.sqd_upper_bound,
                gap,
                oracle_gap,
            };
            emit(out, &csv_rows(&[row])?)
        }
    }
}
