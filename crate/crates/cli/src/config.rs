//! Suite configuration: flags, config-file parsing, defaults.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;

/// Which checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Lie,
    Group,
    Forms,
    Kernels,
    Modes,
    Fields,
    Currents,
    SpecialCases,
    Taylor,
}

impl Suite {
    pub fn all() -> [Suite; 9] {
        [
            Suite::Lie,
            Suite::Group,
            Suite::Forms,
            Suite::Kernels,
            Suite::Modes,
            Suite::Fields,
            Suite::Currents,
            Suite::SpecialCases,
            Suite::Taylor,
        ]
    }

    pub fn parse(s: &str) -> Result<Vec<Suite>> {
        Ok(match s {
            "all" => Suite::all().to_vec(),
            "lie" => vec![Suite::Lie],
            "group" => vec![Suite::Group],
            "forms" => vec![Suite::Forms],
            "kernels" => vec![Suite::Kernels],
            "modes" => vec![Suite::Modes],
            "fields" => vec![Suite::Fields],
            "currents" => vec![Suite::Currents],
            "special-cases" => vec![Suite::SpecialCases],
            "taylor" => vec![Suite::Taylor],
            other => bail!("unknown suite '{other}'"),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Lie => "lie",
            Suite::Group => "group",
            Suite::Forms => "forms",
            Suite::Kernels => "kernels",
            Suite::Modes => "modes",
            Suite::Fields => "fields",
            Suite::Currents => "currents",
            Suite::SpecialCases => "special-cases",
            Suite::Taylor => "taylor",
        }
    }
}

/// Variant selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VariantSel {
    AsWritten,
    Corrected,
    Both,
}

impl VariantSel {
    pub fn parse(s: &str) -> Result<VariantSel> {
        Ok(match s {
            "as-written" => VariantSel::AsWritten,
            "corrected" => VariantSel::Corrected,
            "both" => VariantSel::Both,
            other => bail!("unknown variant '{other}' (expected as-written|corrected|both)"),
        })
    }
}

/// Fully resolved configuration of one run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    /// `None` means per-suite default parameter sets.
    pub params: Option<(i64, i64)>,
    pub window: i64,
    pub log_degree: u8,
    pub mode_grid: i64,
    pub monomial_window: i64,
    pub variant: VariantSel,
    pub jobs: usize,
    pub seed: u64,
    pub samples: usize,
    #[serde(skip)]
    pub report_path: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: Suite::all().to_vec(),
            params: None,
            window: 6,
            log_degree: 3,
            mode_grid: 4,
            monomial_window: 12,
            variant: VariantSel::Corrected,
            jobs: 0,
            seed: 1,
            samples: 100,
            report_path: None,
        }
    }
}

/// `key = value` config file (a TOML subset); flags override file values.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub suite: Option<String>,
    pub k: Option<i64>,
    pub j: Option<i64>,
    pub window: Option<i64>,
    #[serde(rename = "log-degree")]
    pub log_degree: Option<u8>,
    #[serde(rename = "mode-grid")]
    pub mode_grid: Option<i64>,
    #[serde(rename = "monomial-window")]
    pub monomial_window: Option<i64>,
    pub variant: Option<String>,
    pub jobs: Option<usize>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub report: Option<String>,
}

impl FileConfig {
    pub fn load(path: &std::path::Path) -> Result<FileConfig> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config file {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config file {}", path.display()))
    }
}

pub fn validate(cfg: &SuiteConfig) -> Result<()> {
    if cfg.window < 1 {
        bail!("window must be at least 1");
    }
    if cfg.log_degree > 3 {
        bail!("log-degree is capped at 3");
    }
    let needs_fields = cfg
        .suites
        .iter()
        .any(|s| matches!(s, Suite::Fields | Suite::Currents | Suite::SpecialCases));
    if needs_fields && cfg.window < 4 {
        bail!("field and current checks need a window of at least 4");
    }
    let needs_l3 = cfg.suites.iter().any(|s| {
        matches!(
            s,
            Suite::Kernels | Suite::Fields | Suite::Currents | Suite::SpecialCases | Suite::Taylor
        )
    });
    if needs_l3 && cfg.log_degree != 3 {
        bail!("kernel and field checks need log-degree 3");
    }
    if cfg.mode_grid < 1 || cfg.monomial_window < 1 {
        bail!("mode-grid and monomial-window must be positive");
    }
    Ok(())
}
