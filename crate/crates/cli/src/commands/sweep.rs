//! Werner-family table: `c_i = -c` on a `(c, x)` grid, rows ordered by `c` then `x`.

use serde::Serialize;

use superdiscord::sqd::{sqd_bound_closed_form, EntropyFactor, Strength};

use crate::args::{Format, SweepArgs};
use crate::config::{Resolved, SCHEMA_VERSION};
use crate::error::{CliError, CliResult};
use crate::output::{csv_rows, emit, json};

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub d: usize,
    pub c: f64,
    pub x: f64,
    pub sqd_bound: f64,
    pub projective_bound: f64,
    pub difference: f64,
}

#[derive(Serialize)]
struct SweepDoc<'a> {
    schema_version: u32,
    command: &'static str,
    rows: &'a [SweepRow],
}

fn axis(min: f64, max: f64, steps: usize, name: &str) -> CliResult<Vec<f64>> {
    if steps == 0 || !(min <= max) {
        return Err(CliError::Config(format!("empty {name} grid")));
    }
    if steps == 1 {
        return Ok(vec![min]);
    }
    Ok((0..steps).map(|i| min + (max - min) * i as f64 / (steps - 1) as f64).collect())
}

pub fn sweep_rows(d: usize, cs: &[f64], xs: &[f64]) -> CliResult<Vec<SweepRow>> {
    let mut rows = Vec::with_capacity(cs.len() * xs.len());
    for &c in cs {
        let coeffs = [-c, -c, -c];
        let projective = sqd_bound_closed_form(coeffs, Strength::Projective, d, EntropyFactor::Derived)?;
        for &x in xs {
            let bound = sqd_bound_closed_form(coeffs, Strength::Weak(x), d, EntropyFactor::Derived)?;
            rows.push(SweepRow { d, c, x, sqd_bound: bound, projective_bound: projective, difference: bound - projective });
        }
    }
    Ok(rows)
}

pub fn run(args: &SweepArgs) -> CliResult<()> {
    let cfg = Resolved::new(&args.common)?;
    let d = cfg.d_or(2);
    let cs = axis(args.c_min, args.c_max, args.c_steps, "c")?;
    let xs = axis(args.x_min, args.x_max, args.x_steps, "x")?;
    let rows = sweep_rows(d, &cs, &xs)?;
    if let Some(r) = rows.iter().find(|r| r.sqd_bound < r.projective_bound - 1e-12) {
        return Err(CliError::Invariant(format!("bound below its projective limit at c={}, x={}", r.c, r.x)));
    }
    let text = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => csv_rows(&rows)?,
        Format::Json => json(&SweepDoc { schema_version: SCHEMA_VERSION, command: "sweep", rows: &rows })?,
    };
    emit(cfg.out.as_deref(), &text)
}
