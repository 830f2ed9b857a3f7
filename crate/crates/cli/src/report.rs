//! Machine-readable run reports. Reports are deterministic byte-for-byte
//! for a fixed configuration: results are sorted, scalars are serialized as
//! `numerator/denominator` strings, and wall times are excluded by default.

use crate::config::SuiteConfig;
use anyhow::{Context, Result};
use nilva_core::{CheckStatus, VerificationReport};
use serde::Serialize;
use std::io::Write;
use std::path::Path;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct JsonCounterexample {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct JsonResult {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<&'static str>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<JsonCounterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
       #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct JsonReport {
    pub version: u32,
    pub config: SuiteConfig,
    pub results: Vec<JsonResult>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub variant_diff: Vec<String>,
}

pub fn to_json_result(r: &VerificationReport, timing_ms: Option<u64>) -> JsonResult {
    JsonResult {
        check: r.check.clone(),
        k: r.params.map(|p| p.k),
        j: r.params.map(|p| p.j),
        variant: r.variant,
        status: r.status.to_string(),
        counterexample: r.counterexample.as_ref().map(|c| JsonCounterexample {
            location: c.location.clone(),
            expected: c.expected.clone(),
            actual: c.actual.clone(),
        }),
        notes: r.notes.clone(),
        timing_ms,
    }
}

pub fn assemble(
    config: &SuiteConfig,
    mut results: Vec<JsonResult>,
    variant_diff: Vec<String>,
) -> JsonReport {
    results.sort_by(|a, b| {
        (&a.check, a.k, a.j, a.variant).cmp(&(&b.check, b.k, b.j, b.variant))
    });
    JsonReport {
        version: REPORT_VERSION,
        config: config.clone(),
        results,
        variant_diff,
    }
}

/// Every asserted (non-reported) check passed?
pub fn all_asserted_pass(results: &[JsonResult]) -> bool {
    results.iter().all(|r| r.status != CheckStatus::Fail.to_string())
}

/// Write the report atomically: a temp file in the same directory, then a
/// rename.
pub fn write_atomic(report: &JsonReport, path: &Path) -> Result<()> {
    let body = serde_json::to_string_pretty(report).context("serializing report")?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    std::fs::create_dir_all(dir).ok();
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| String::from("report.json"))
    ));
    {
        let mut f = std::fs::File::create(&tmp)
            .with_context(|| format!("creating {}", tmp.display()))?;
        f.write_all(body.as_bytes())?;
        f.write_all(b"\n")?;
        f.sync_all().ok();
    }
    std::fs::rename(&tmp, path)
        .with_context(|| format!("renaming report into place at {}", path.display()))?;
    Ok(())
}

pub fn render_text(report: &JsonReport) -> String {
    let mut out = String::new();
    for r in &report.results {
        let params = match (r.k, r.j) {
            (Some(k), Some(j)) => format!(" (k={k}, j={j})"),
            _ => String::new(),
        };
        let variant = r.variant.map(|v| format!(" [{v}]")).unwrap_or_default();
        out.push_str(&format!("{:<10} {}{}{}\n", r.status, r.check, params, variant));
        if let Some(cx) = &r.counterexample {
            out.push_str(&format!(
                "           at {}\n           expected {}, got {}\n",
                cx.location, cx.expected, cx.actual
            ));
        }
        for note in &r.notes {
            out.push_str(&format!("           note: {note}\n"));
        }
    }
    if !report.variant_diff.is_empty() {
        out.push_str("variant diff (as-written vs corrected):\n");
        for line in &report.variant_diff {
            out.push_str(&format!("  {line}\n"));
        }
    }
    out
}
