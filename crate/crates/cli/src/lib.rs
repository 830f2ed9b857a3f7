//! Command-line verifier over the exact-arithmetic engine: configuration,
//! suite orchestration, machine-readable reports.

pub mod config;
pub mod explain;
pub mod report;
pub mod suites;

pub use config::{FileConfig, Suite, SuiteConfig, VariantSel};
pub use report::{assemble, JsonReport};

use anyhow::Result;

/// Run a configuration and assemble its report.
pub fn run(cfg: &SuiteConfig) -> Result<JsonReport> {
    config::validate(cfg)?;
    let (results, diff) = suites::run_all(cfg)?;
    let json: Vec<report::JsonResult> = results
        .iter()
        .map(|r| report::to_json_result(r, None))
        .collect();
    Ok(report::assemble(cfg, json, diff))
}
