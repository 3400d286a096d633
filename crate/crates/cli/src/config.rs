//! Run configuration: one TOML or JSON document per run, chosen by extension.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::args::{Common, Format, SamplerKind, StateArgs};
use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

/// Matrix entry: a real number or a `[re, im]` pair.
#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Real(f64),
    Complex([f64; 2]),
}

impl Entry {
    pub fn parts(self) -> (f64, f64) {
        match self {
            Self::Real(r) => (r, 0.0),
            Self::Complex([r, i]) => (r, i),
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelConfig {
    pub gamma: Option<f64>,
    pub kraus: Option<Vec<Vec<Vec<Entry>>>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub d: Option<usize>,
    pub c: Option<[f64; 3]>,
    pub tmatrix: Option<[[f64; 3]; 3]>,
    pub x: Option<f64>,
    pub gamma: Option<f64>,
    pub step: Option<f64>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub sampler: Option<SamplerKind>,
    pub samples: Option<usize>,
    pub restarts: Option<usize>,
    pub channel: Option<ChannelConfig>,
}

pub fn load(path: &Path) -> CliResult<FileConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("toml") => toml::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display()))),
        Some("json") => serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display()))),
        _ => Err(CliError::Config(format!("{}: config must end in .toml or .json", path.display()))),
    }
}

/// Which correlated family a run uses.
#[derive(Clone, Debug, PartialEq)]
pub enum StateSpec {
    Diag([f64; 3]),
    Block([[f64; 3]; 3]),
}

/// Flags merged over the optional config file.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub file: FileConfig,
    pub d: Option<usize>,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

impl Resolved {
    pub fn new(common: &Common) -> CliResult<Self> {
        let file = match &common.config {
            Some(p) => load(p)?,
            None => FileConfig::default(),
        };
        Ok(Self {
            d: common.d.or(file.d),
            seed: common.seed.or(file.seed).unwrap_or(0),
            out: common.out.clone().or_else(|| file.out.clone()),
            format: common.format.or(file.format),
            file,
        })
    }

    pub fn d_or(&self, default: usize) -> usize {
        self.d.unwrap_or(default)
    }

    pub fn state(&self, args: &StateArgs) -> CliResult<StateSpec> {
        match (&args.c, &args.tmatrix) {
            (Some(_), Some(_)) => Err(CliError::Config("give either --c or --tmatrix, not both".into())),
            (Some(c), None) => Ok(StateSpec::Diag(parse_triple(c)?)),
            (None, Some(p)) => Ok(StateSpec::Block(read_tmatrix(p)?)),
            (None, None) => match (self.file.c, self.file.tmatrix) {
                (Some(c), None) => Ok(StateSpec::Diag(c)),
                (None, Some(t)) => Ok(StateSpec::Block(t)),
                (Some(_), Some(_)) => Err(CliError::Config("config gives both c and tmatrix".into())),
                (None, None) => Err(CliError::Config("missing state: use --c or --tmatrix".into())),
            },
        }
    }
}

pub fn require<T>(v: Option<T>, name: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Config(format!("missing --{name}")))
}

pub fn parse_triple(s: &str) -> CliResult<[f64; 3]> {
    let v = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| CliError::Config(format!("bad coefficient {p:?}: {e}"))))
        .collect::<CliResult<Vec<f64>>>()?;
    v.try_into().map_err(|v: Vec<f64>| CliError::Config(format!("expected 3 coefficients, got {}", v.len())))
}

/// Three rows of three numbers, or a JSON `[[..],[..],[..]]`.
pub fn read_tmatrix(path: &Path) -> CliResult<[[f64; 3]; 3]> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())));
    }
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_row(&l.replace(',', " ")))
        .collect::<CliResult<Vec<[f64; 3]>>>()?;
    rows.try_into().map_err(|r: Vec<_>| CliError::Config(format!("{}: expected 3 rows, got {}", path.display(), r.len())))
}

fn parse_row(line: &str) -> CliResult<[f64; 3]> {
    let v = line
        .split_whitespace()
        .map(|p| p.parse::<f64>().map_err(|e| CliError::Config(format!("bad matrix entry {p:?}: {e}"))))
        .collect::<CliResult<Vec<f64>>>()?;
    v.try_into().map_err(|v: Vec<f64>| CliError::Config(format!("expected 3 entries per row, got {}", v.len())))
}
