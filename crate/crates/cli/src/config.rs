use std::path::{Path, PathBuf};

use exponacci::spiral::{AmplitudeMode, ZMode};
use exponacci::Params;
use serde::Deserialize;

use crate::error::CliError;

/// Parameter fields of a JSON config; any field may be left out.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsConfig {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub d: Option<f64>,
    pub g0: Option<f64>,
    pub g1: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Svg,
    Json,
    Text,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Svg => "svg",
            Format::Json => "json",
            Format::Text => "text",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Rect,
    Arch,
    Both,
}

impl Style {
    pub fn rect(self) -> bool {
        self != Style::Arch
    }

    pub fn arch(self) -> bool {
        self != Style::Rect
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum WindingChoice {
    Auto,
    Outwinding,
    Inwinding,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ZChoice {
    Linear,
    LocalInput,
    Cumulative,
}

impl From<ZChoice> for ZMode {
    fn from(z: ZChoice) -> Self {
        match z {
            ZChoice::Linear => ZMode::Linear,
            ZChoice::LocalInput => ZMode::LocalInput,
            ZChoice::Cumulative => ZMode::Cumulative,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum AmplitudeChoice {
    C,
    P,
}

impl From<AmplitudeChoice> for AmplitudeMode {
    fn from(a: AmplitudeChoice) -> Self {
        match a {
            AmplitudeChoice::C => AmplitudeMode::UseC,
            AmplitudeChoice::P => AmplitudeMode::UseP,
        }
    }
}

/// Everything a run can be configured with. Flags override these fields.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub params: ParamsConfig,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub n: Option<u64>,
    pub style: Option<Style>,
    pub corners: Option<u64>,
    pub arcs: Option<u64>,
    pub samples: Option<u32>,
    pub winding: Option<WindingChoice>,
    pub z_mode: Option<ZChoice>,
    pub amplitude: Option<AmplitudeChoice>,
    pub quadruple: Option<u64>,
    pub csv: Option<PathBuf>,
    pub t_max: Option<f64>,
    pub step: Option<f64>,
    pub identity: Option<String>,
    pub fuzz_samples: Option<usize>,
    pub seed: Option<u64>,
    pub max_index: Option<i64>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::invalid(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::invalid(format!("bad config {}: {e}", path.display())))
    }

    /// Flag values first, then config values, then the Fibonacci numbers.
    pub fn params(&self, flags: &ParamsConfig) -> Params {
        let f = Params::FIBONACCI;
        let pick = |flag: Option<f64>, cfg: Option<f64>, dflt: f64| flag.or(cfg).unwrap_or(dflt);
        let c = &self.params;
        Params::new(
            pick(flags.a, c.a, f.a),
            pick(flags.b, c.b, f.b),
            pick(flags.c, c.c, f.c),
            pick(flags.d, c.d, f.d),
            pick(flags.g0, c.g0, f.g0),
            pick(flags.g1, c.g1, f.g1),
        )
    }
}

pub const SEED_VAR: &str = "EXPONACCI_SEED";

/// Seed from the flag, the config, `EXPONACCI_SEED`, or 42.
pub fn resolve_seed(flag: Option<u64>, config: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = flag.or(config) {
        return Ok(s);
    }
    match std::env::var(SEED_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::invalid(format!("{SEED_VAR}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(exponacci::sampling::DEFAULT_SEED),
    }
}
