use serde::Serialize;

use superdiscord::sqd::{classical_correlation_search, sqd_upper_bound_at, CorrelationReport, CorrelationSpec, SearchOptions, Strength};
use superdiscord::sud_basis::{BlockCorrelationSpec, DiagCorrelationSpec};

use crate::args::{Format, ReportArgs};
use crate::config::{require, Resolved, StateSpec, SCHEMA_VERSION};
use crate::error::{CliError, CliResult};
use crate::output::{csv_rows, emit, json, Flag};

#[derive(Serialize)]
struct StateDoc {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<[[f64; 3]; 3]>,
}

#[derive(Serialize)]
struct OrientationDoc {
    t: f64,
    y: [f64; 3],
}

#[derive(Serialize)]
struct PrintedVariant {
    factor: &'static str,
    classical_corr: f64,
    sqd_upper_bound: f64,
}

#[derive(Serialize)]
struct RowNormDoc {
    t_bar: f64,
    sqd_upper_bound: f64,
}

#[derive(Serialize)]
struct SearchDoc {
    classical_corr: f64,
    special_family: f64,
    sqd_upper_bound: f64,
    restarts: usize,
    evaluations: usize,
}

#[derive(Serialize)]
pub struct ReportDoc {
    schema_version: u32,
    command: &'static str,
    d: usize,
    x: f64,
    state: StateDoc,
    mutual_info: f64,
    mutual_info_closed_form: Option<f64>,
    classical_corr_special: f64,
    sqd_upper_bound: f64,
    theta_star: f64,
    argmax_z: [f64; 3],
    argmax_orientation: OrientationDoc,
    method: &'static str,
    oracle_residual: f64,
    printed_variant: PrintedVariant,
    row_norm_bound: Option<RowNormDoc>,
    search: Option<SearchDoc>,
    flags: Vec<Flag>,
}

#[derive(Serialize)]
struct ReportRow {
    d: usize,
    x: f64,
    mutual_info: f64,
    classical_corr_special: f64,
    sqd_upper_bound: f64,
    printed_sqd_upper_bound: f64,
    theta_star: f64,
    method: &'static str,
}

pub fn build_spec(state: &StateSpec, d: usize) -> CliResult<CorrelationSpec<f64>> {
    Ok(match state {
        StateSpec::Diag(c) => CorrelationSpec::Diag(DiagCorrelationSpec::three(d, *c)?),
        StateSpec::Block(t) => CorrelationSpec::Block(BlockCorrelationSpec::new(d, *t)?),
    })
}

pub fn entropy_factor_flag(d: usize, rep: &CorrelationReport<f64>) -> Option<Flag> {
    (d > 2).then(|| Flag {
        id: "entropy-factor",
        message: format!(
            "bounds use (2/d^2)H, which the eigendecomposition reproduces; the (2/d)H variant gives {:.6} instead of {:.6}",
            rep.printed_sqd_upper_bound, rep.sqd_upper_bound
        ),
    })
}

pub fn check_report(rep: &CorrelationReport<f64>) -> CliResult<()> {
    if !(rep.oracle_residual <= 1e-9) {
        return Err(CliError::Invariant(format!("closed form and eigen pipeline differ by {:.3e}", rep.oracle_residual)));
    }
    if !(rep.classical_corr_special >= -1e-12 && rep.classical_corr_special <= rep.mutual_info + 1e-9) {
        return Err(CliError::Invariant("classical correlation outside [0, I]".into()));
    }
    Ok(())
}

pub fn run(args: &ReportArgs) -> CliResult<()> {
    let cfg = Resolved::new(&args.common)?;
    let d = cfg.d_or(2);
    let x = require(args.x.or(cfg.file.x), "x")?;
    let state = cfg.state(&args.state)?;
    let spec = build_spec(&state, d)?;
    let rep = sqd_upper_bound_at(&spec, Strength::Weak(x))?;
    check_report(&rep)?;

    let mut method = rep.method.as_str();
    let search = if args.search {
        let opts = SearchOptions { seed: cfg.seed, restarts: args.restarts.or(cfg.file.restarts).unwrap_or(16), ..SearchOptions::default() };
        let rho = spec.state()?;
        let s = classical_correlation_search(&rho, x, &opts)?;
        method = "search";
        Some(SearchDoc {
            classical_corr: s.value,
            special_family: s.special_value,
            sqd_upper_bound: rep.mutual_info - s.value,
            restarts: opts.restarts,
            evaluations: s.evaluations,
        })
    } else {
        None
    };

    let mut flags: Vec<Flag> = entropy_factor_flag(d, &rep).into_iter().collect();
    if rep.printed_sqd_upper_bound < 0.0 {
        flags.push(Flag { id: "printed-bound-negative", message: "the (2/d)H variant yields a negative discord bound".into() });
    }

    let out = cfg.out.as_deref();
    match cfg.format.unwrap_or(Format::Json) {
        Format::Json => {
            let doc = ReportDoc {
                schema_version: SCHEMA_VERSION,
                command: "report",
                d,
                x,
                state: match state {
                    StateSpec::Diag(c) => StateDoc { kind: "diag", c: Some(c), t: None },
                    StateSpec::Block(t) => StateDoc { kind: "block", c: None, t: Some(t) },
                },
                mutual_info: rep.mutual_info,
                mutual_info_closed_form: rep.mutual_info_closed_form,
                classical_corr_special: rep.classical_corr_special,
                sqd_upper_bound: rep.sqd_upper_bound,
                theta_star: rep.theta_star,
                argmax_z: rep.argmax_z.0,
                argmax_orientation: OrientationDoc { t: rep.argmax_orientation.t, y: rep.argmax_orientation.y },
                method,
                oracle_residual: rep.oracle_residual,
                printed_variant: PrintedVariant {
                    factor: "2/d",
                    classical_corr: rep.printed_classical_corr,
                    sqd_upper_bound: rep.printed_sqd_upper_bound,
                },
                row_norm_bound: rep.row_norm.map(|r| RowNormDoc { t_bar: r.t_bar, sqd_upper_bound: r.bound }),
                search,
                flags,
            };
            emit(out, &json(&doc)?)
        }
        Format::Csv => {
            let row = ReportRow {
                d,
                x,
                mutual_info: rep.mutual_info,
                classical_corr_special: rep.classical_corr_special,
                sqd_upper_bound: rep.sqd_upper_bound,
                printed_sqd_upper_bound: rep.printed_sqd_upper_bound,
                theta_star: rep.theta_star,
                method,
            };
            emit(out, &csv_rows(&[row])?)
        }
    }
}
