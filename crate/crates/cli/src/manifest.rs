//! Job manifests. Integers are carried as decimal strings so that sizes,
//! seeds and bound inputs of any magnitude survive a JSON round trip.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::JobError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub schema_version: String,
    pub jobs: Vec<Job>,
}

#[derive(Clone, Copy, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Certify,
    CertifyStrong,
    Implicitize,
    NewtonCheck,
    Hilbert,
    Chow,
    Resultant,
    Bounds,
    VerifyExamples,
}

impl Command {
    pub fn as_str(&self) -> &'static str {
        match self {
            Command::Certify => "certify",
            Command::CertifyStrong => "certify-strong",
            Command::Implicitize => "implicitize",
            Command::NewtonCheck => "newton-check",
            Command::Hilbert => "hilbert",
            Command::Chow => "chow",
            Command::Resultant => "resultant",
            Command::Bounds => "bounds",
            Command::VerifyExamples => "verify-examples",
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct VarDecl {
    pub name: String,
    pub size: String,
    /// `projective`, `affine`, `parameter` or `auxiliary`.
    pub kind: String,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
    /// `symbolic-u` or `random-u`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_retries: Option<String>,
    /// Monomial order for `hilbert`: `lex` or `grlex` (informational).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    /// Dimension for `chow`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
    /// Comma-separated index for eliminants, e.g. `"1,1"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<String>,
    /// Canonical height of `V` over ℤ when it is not `Aⁿ`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height_v: Option<String>,
    /// Newton region variant: `param`, `z`, `z-nonfinite`, `rational-param`, `rational-z`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct InvariantsDecl {
    pub n: String,
    pub r: String,
    pub d: Vec<String>,
    #[serde(default)]
    pub h: Vec<String>,
    #[serde(default)]
    pub delta: Vec<Vec<String>>,
    #[serde(default)]
    pub supp: Vec<String>,
    #[serde(default)]
    pub p: Vec<String>,
    #[serde(default)]
    pub deg_v: Option<String>,
    #[serde(default)]
    pub h_v: Option<String>,
    #[serde(default)]
    pub h_v_t: Vec<String>,
    #[serde(default)]
    pub d0: Option<String>,
    #[serde(default)]
    pub h0: Option<String>,
    #[serde(default)]
    pub h0_t: Option<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Equals(String),
    UpToSign(String),
    Approx(String),
    AtLeast(String),
    AtMost(String),
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
pub struct Expectation {
    /// Dotted path into the job outputs; array entries by index.
    pub path: String,
    #[serde(flatten)]
    pub rule: Rule,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub name: String,
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub variables: Vec<VarDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideal: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub polys: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub map: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default)]
    pub options: Options,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expect: Vec<Expectation>,
}

impl Manifest {
    pub fn from_json(text: &str) -> Result<Manifest, JobError> {
        let m: Manifest = serde_json::from_str(text).map_err(|e| JobError::Input(format!("manifest: {e}")))?;
        if m.schema_version != SCHEMA_VERSION {
            return Err(JobError::Input(format!(
                "manifest schema version {} is not supported (expected {SCHEMA_VERSION})",
                m.schema_version
            )));
        }
        let mut names = std::collections::BTreeSet::new();
        for job in &m.jobs {
            if !names.insert(job.name.as_str()) {
                return Err(JobError::Input(format!("duplicate job name `{}`", job.name)));
            }
        }
        Ok(m)
    }
}

pub fn parse_num<T: FromStr>(field: &str, text: &str) -> Result<T, JobError>
where
    T::Err: std::fmt::Display,
{
    text.trim().parse::<T>().map_err(|e| JobError::Input(format!("{field}: cannot parse `{text}`: {e}")))
}

pub fn parse_list<T: FromStr>(field: &str, items: &[String]) -> Result<Vec<T>, JobError>
where
    T::Err: std::fmt::Display,
{
    items.iter().enumerate().map(|(i, s)| parse_num(&format!("{field}[{i}]"), s)).collect()
}
