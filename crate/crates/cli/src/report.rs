//! Reports: a versioned JSON document and a plain-text rendering of it.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const REPORT_SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
        let status = if pass { CheckStatus::Pass } else { CheckStatus::Fail };
        Check { name: name.into(), status, detail: detail.into() }
    }

    pub fn skipped(name: impl Into<String>, why: impl Into<String>) -> Check {
        Check { name: name.into(), status: CheckStatus::Skipped, detail: why.into() }
    }
}

#[derive(Clone, Copy, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum JobStatus {
    Ok,
    Failed,
    Error,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
pub struct JobReport {
    pub name: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub status: JobStatus,
    pub seed: String,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
pub struct Report {
    pub schema_version: String,
    pub seed: String,
    pub mode: String,
    pub tolerance: f64,
    pub jobs: Vec<JobReport>,
    pub summary: Summary,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
pub struct Summary {
    pub total: usize,
    pub ok: usize,
    pub failed: usize,
    pub errors: usize,
    pub exit_code: i32,
}

impl Report {
    pub fn new(seed: u64, mode: &str, tolerance: f64, mut jobs: Vec<JobReport>) -> Report {
        jobs.sort_by(|a, b| a.name.cmp(&b.name));
        let ok = jobs.iter().filter(|j| j.status == JobStatus::Ok).count();
        let failed = jobs.iter().filter(|j| j.status == JobStatus::Failed).count();
        let errors = jobs.iter().filter(|j| j.status == JobStatus::Error).count();
        let input_error = jobs.iter().any(|j| j.error.as_ref().is_some_and(|e| e.kind == "input"));
        let exit_code = if input_error {
            2
        } else if failed + errors > 0 {
            1
        } else {
            0
        };
        Report {
            schema_version: REPORT_SCHEMA_VERSION.to_string(),
            seed: seed.to_string(),
            mode: mode.to_string(),
            tolerance,
            summary: Summary { total: jobs.len(), ok, failed, errors, exit_code },
            jobs,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "multiheight report (schema {}, seed {}, mode {})", self.schema_version, self.seed, self.mode);
        for job in &self.jobs {
            let status = match job.status {
                JobStatus::Ok => "ok",
                JobStatus::Failed => "FAILED",
                JobStatus::Error => "ERROR",
            };
            let _ = write!(out, "\n[{status}] {} ({})", job.name, job.command);
            if let Some(t) = job.timing_ms {
                let _ = write!(out, " {t:.1} ms");
            }
            out.push('\n');
            if let Some(note) = &job.note {
                let _ = writeln!(out, "  {note}");
            }
            if let Some(e) = &job.error {
                let _ = writeln!(out, "  {} error: {}", e.kind, e.message);
            }
            if let Value::Object(map) = &job.outputs {
                for (k, v) in map {
                    let _ = writeln!(out, "  {k} = {}", render(v));
                }
            }
            for c in &job.checks {
                let tag = match c.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skipped => "skip",
                };
                let _ = writeln!(out, "  {tag:<4} {}: {}", c.name, c.detail);
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "\n{} jobs: {} ok, {} failed, {} errors", s.total, s.ok, s.failed, s.errors);
        out
    }
}

const TEXT_LIMIT: usize = 160;

fn render(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.chars().count() > TEXT_LIMIT {
        let head: String = s.chars().take(TEXT_LIMIT).collect();
        format!("{head}... ({} chars)", s.chars().count())
    } else {
        s
    }
}
