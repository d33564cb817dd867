//! Line-oriented `key = value` configuration files with `[section]`
//! headers. Unset keys fall back to the embedded defaults; command-line
//! flags override file values.
//!
//! Recognized top-level keys: `seed`, `grid_z`, `grid_w`, `trunc`,
//! `theta`, `out`, `format`, `timing` (`on`/`off`). A `[tolerances]`
//! section maps check ids to tolerance overrides.

use crate::verify::report::ReportFormat;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config file: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Values parsed from a config file; `None` means "keep the default".
#[derive(Clone, Debug, Default)]
pub struct PartialConfig {
    pub seed: Option<u64>,
    pub grid_z: Option<usize>,
    pub grid_w: Option<usize>,
    pub trunc: Option<usize>,
    pub theta: Option<f64>,
    pub out_dir: Option<PathBuf>,
    pub format: Option<ReportFormat>,
    pub include_timing: Option<bool>,
    pub tol_overrides: BTreeMap<String, f64>,
}

pub fn parse_config_str(text: &str) -> Result<PartialConfig, ConfigError> {
    let mut cfg = PartialConfig::default();
    let mut section = String::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let name = name.strip_suffix(']').ok_or(ConfigError::Parse {
                line: idx + 1,
                message: "unterminated section header".into(),
            })?;
            section = name.trim().to_string();
            continue;
        }
        let (key, value) = line.split_once('=').ok_or(ConfigError::Parse {
            line: idx + 1,
            message: "expected key = value".into(),
        })?;
        let key = key.trim();
        let value = value.trim();
        let bad = |message: String| ConfigError::Parse {
            line: idx + 1,
            message,
        };
        match section.as_str() {
            "" => match key {
                "seed" => cfg.seed = Some(value.parse().map_err(|e| bad(format!("seed: {e}")))?),
                "grid_z" => {
                    cfg.grid_z = Some(value.parse().map_err(|e| bad(format!("grid_z: {e}")))?)
                }
                "grid_w" => {
                    cfg.grid_w = Some(value.parse().map_err(|e| bad(format!("grid_w: {e}")))?)
                }
                "trunc" => {
                    cfg.trunc = Some(value.parse().map_err(|e| bad(format!("trunc: {e}")))?)
                }
                "theta" => {
                    cfg.theta = Some(value.parse().map_err(|e| bad(format!("theta: {e}")))?)
                }
                "out" => cfg.out_dir = Some(PathBuf::from(value)),
                "format" => cfg.format = Some(ReportFormat::from_str(value).map_err(bad)?),
                "timing" => {
                    cfg.include_timing = Some(match value {
                        "on" => true,
                        "off" => false,
                        other => return Err(bad(format!("timing must be on|off, got '{other}'"))),
                    })
                }
                other => return Err(bad(format!("unknown key '{other}'"))),
            },
            "tolerances" => {
                let tol: f64 = value.parse().map_err(|e| bad(format!("tolerance: {e}")))?;
                cfg.tol_overrides.insert(key.to_string(), tol);
            }
            other => return Err(bad(format!("unknown section '[{other}]'"))),
        }
    }
    Ok(cfg)
}

pub fn parse_config_file(path: &std::path::Path) -> Result<PartialConfig, ConfigError> {
    parse_config_str(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_sections_and_comments() {
        let text = "\
# comment
seed = 99
grid_z = 16
format = csv
timing = off

[tolerances]
fourier.transform.round_trip = 1e-8
";
        let cfg = parse_config_str(text).unwrap();
        assert_eq!(cfg.seed, Some(99));
        assert_eq!(cfg.grid_z, Some(16));
        assert_eq!(cfg.format, Some(ReportFormat::Csv));
        assert_eq!(cfg.include_timing, Some(false));
        assert_eq!(
            cfg.tol_overrides.get("fourier.transform.round_trip"),
            Some(&1e-8)
        );
        assert_eq!(cfg.grid_w, None);
    }

    #[test]
    fn rejects_unknown_keys_with_line_numbers() {
        let err = parse_config_str("seed = 1\nwat = 2\n").unwrap_err();
        match err {
            ConfigError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_values() {
        assert!(parse_config_str("seed = abc\n").is_err());
        assert!(parse_config_str("format = yaml\n").is_err());
        assert!(parse_config_str("no_equals_here\n").is_err());
    }
}
