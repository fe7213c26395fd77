//! Run configuration: defaults, `key = value` files and flag overrides.

use std::fmt;
use std::str::FromStr;

use hyperreal_core::calculus::{default_schedule, RefinementSchedule};
use hyperreal_core::FieldConfig;

use crate::error::CliError;

/// Names a config file to load when `--config` is not given.
pub const CONFIG_ENV: &str = "HYPERREAL_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format '{s}' (expected text or json)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub field: FieldConfig,
    pub format: Format,
    pub seed: u64,
    /// Riemann sum partition counts.
    pub schedule: Vec<u64>,
    pub refinement: RefinementSchedule,
    pub samples: usize,
    pub witness_pool: usize,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            field: FieldConfig::default(),
            format: Format::Text,
            seed: 0,
            schedule: default_schedule(),
            refinement: RefinementSchedule::default(),
            samples: 1000,
            witness_pool: 200,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T, String>
where
    T::Err: fmt::Display,
{
    value.parse().map_err(|e| format!("bad value for {key}: {e}"))
}

pub fn parse_schedule(value: &str) -> Result<Vec<u64>, String> {
    value
        .split(',')
        .map(|s| s.trim().parse::<u64>().map_err(|e| format!("bad schedule entry '{s}': {e}")))
        .collect()
}

impl CliConfig {
    /// Sets one field by its config-file key.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "depth" => self.field.depth = parse(key, value)?,
            "max_terms" => self.field.max_terms = parse(key, value)?,
            "zero_tol" => self.field.zero_tol = parse(key, value)?,
            "eq_tol" => self.field.eq_tol = parse(key, value)?,
            "format" => self.format = parse(key, value)?,
            "seed" => self.seed = parse(key, value)?,
            "schedule" => self.schedule = parse_schedule(value)?,
            "points_per_round" => self.refinement.points_per_round = parse(key, value)?,
            "max_rounds" => self.refinement.max_rounds = parse(key, value)?,
            "tol_x" => self.refinement.tol_x = parse(key, value)?,
            "samples" => self.samples = parse(key, value)?,
            "witness_pool" => self.witness_pool = parse(key, value)?,
            _ => return Err(format!("unknown key '{key}'")),
        }
        Ok(())
    }

    /// Applies a config file on top of `self`. Blank lines and `#` comments
    /// are ignored.
    pub fn load(&mut self, text: &str) -> Result<(), CliError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(CliError::Config {
                    line: i + 1,
                    message: "expected key = value".into(),
                });
            };
            self.set(k.trim(), v.trim())
                .map_err(|message| CliError::Config { line: i + 1, message })?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.field.validate()?;
        if self.samples == 0 {
            return Err(CliError::Config {
                line: 0,
                message: "samples must be positive".into(),
            });
        }
        Ok(())
    }
}
