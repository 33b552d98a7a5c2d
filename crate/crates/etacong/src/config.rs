//! Flat key=value run configuration.
//!
//! Zero-dependency format for reproducible batch runs: one `key = value` per
//! line, `#` comments, unknown keys rejected. The CLI reads the file named by
//! `ETACONG_CONFIG` (or `--config`) and lets individual flags override.

use std::fs;
use std::path::Path;

use crate::engine::EngineCaps;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::Config(format!("unknown output format `{s}`"))),
        }
    }
}

/// Tunables for the verification drivers, with the documented defaults.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Default q-precision for series checks.
    pub precision: i64,
    /// Congruence-check window M for l <= 7.
    pub bound_congruence: u64,
    /// Congruence-check window M for l >= 13.
    pub bound_congruence_large: u64,
    /// Witness-search window M.
    pub bound_witness: u64,
    /// |r| caps for the S-polynomial machinery.
    pub r_cap_5: i64,
    pub r_cap_7: i64,
    pub r_cap_13: i64,
    /// Lattice-enumeration visit cap.
    pub lattice_cap: u64,
    /// Largest oracle table index a claim may demand.
    pub oracle_index_cap: u64,
    pub format: OutputFormat,
    pub verbosity: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision: 200,
            bound_congruence: 40,
            bound_congruence_large: 20,
            bound_witness: 50,
            r_cap_5: 40,
            r_cap_7: 40,
            r_cap_13: 15,
            lattice_cap: 100_000_000,
            oracle_index_cap: 60_000,
            format: OutputFormat::Text,
            verbosity: 1,
        }
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<RunConfig> {
        let mut cfg = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key=value", lineno + 1)))?;
            let key = key.trim();
            let value = value.trim();
            let bad =
                |what: &str| Error::Config(format!("line {}: bad {what} `{value}`", lineno + 1));
            match key {
                "precision" => cfg.precision = value.parse().map_err(|_| bad("integer"))?,
                "bound_congruence" => {
                    cfg.bound_congruence = value.parse().map_err(|_| bad("integer"))?
                }
                "bound_congruence_large" => {
                    cfg.bound_congruence_large = value.parse().map_err(|_| bad("integer"))?
                }
                "bound_witness" => cfg.bound_witness = value.parse().map_err(|_| bad("integer"))?,
                "r_cap_5" => cfg.r_cap_5 = value.parse().map_err(|_| bad("integer"))?,
                "r_cap_7" => cfg.r_cap_7 = value.parse().map_err(|_| bad("integer"))?,
                "r_cap_13" => cfg.r_cap_13 = value.parse().map_err(|_| bad("integer"))?,
                "lattice_cap" => cfg.lattice_cap = value.parse().map_err(|_| bad("integer"))?,
                "oracle_index_cap" => {
                    cfg.oracle_index_cap = value.parse().map_err(|_| bad("integer"))?
                }
                "format" => cfg.format = OutputFormat::parse(value)?,
                "verbosity" => cfg.verbosity = value.parse().map_err(|_| bad("integer"))?,
                _ => {
                    return Err(Error::Config(format!(
                        "line {}: unknown key `{key}`",
                        lineno + 1
                    )))
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<RunConfig> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        RunConfig::parse(&text)
    }

    /// Config from `ETACONG_CONFIG` when set, defaults otherwise.
    pub fn from_env() -> Result<RunConfig> {
        match std::env::var_os("ETACONG_CONFIG") {
            Some(path) => RunConfig::load(Path::new(&path)),
            None => Ok(RunConfig::default()),
        }
    }

    fn validate(&self) -> Result<()> {
        let positive = [self.precision, self.r_cap_5, self.r_cap_7, self.r_cap_13];
        if positive.iter().any(|&v| v <= 0)
            || self.bound_congruence == 0
            || self.bound_witness == 0
            || self.lattice_cap == 0
            || self.oracle_index_cap == 0
        {
            return Err(Error::Config("all bounds must be positive".into()));
        }
        Ok(())
    }

    pub fn congruence_bound(&self, ell: u64) -> u64 {
        if ell <= 7 {
            self.bound_congruence
        } else {
            self.bound_congruence_large
        }
    }

    pub fn r_cap(&self, ell: u64) -> i64 {
        match ell {
            5 => self.r_cap_5,
            7 => self.r_cap_7,
            _ => self.r_cap_13,
        }
    }

    pub fn engine_caps(&self) -> EngineCaps {
        EngineCaps {
            lattice_cap: self.lattice_cap,
            oracle_index_cap: self.oracle_index_cap,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides_and_comments() {
        let cfg = RunConfig::parse("# comment\nprecision = 300\nformat=json\n").unwrap();
        assert_eq!(cfg.precision, 300);
        assert_eq!(cfg.format, OutputFormat::Json);
        assert_eq!(cfg.bound_witness, 50);
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(RunConfig::parse("precison = 300\n").is_err());
        assert!(RunConfig::parse("precision: 300\n").is_err());
        assert!(RunConfig::parse("precision = -1\n").is_err());
    }
}
