use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tamper::{FlipReport, Method};

/// Bumped on any incompatible change to [`Report`].
pub const SCHEMA_VERSION: u32 = 1;

/// Fields that legitimately differ between otherwise identical runs.
pub const VOLATILE_FIELDS: [&str; 2] = ["timestamp", "runtime_ms"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    /// RFC 3339, UTC, whole seconds.
    pub timestamp: String,
    pub config: ConfigEcho,
    pub graph: GraphStats,
    pub results: Results,
    pub runtime_ms: u64,
}

/// Everything that determines the results. Thread count and output
/// location are deliberately absent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigEcho {
    pub graph: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adversary: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub confidence: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bit: Option<u8>,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaSource {
    /// Dense eigensolver.
    Computed,
    /// The `pt` bound of the LD construction.
    Bound,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphStats {
    pub name: String,
    pub n: usize,
    pub d: usize,
    /// Whether `d` counts edge multiplicity.
    pub multigraph: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_source: Option<LambdaSource>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_star: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precondition_ratio: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Results {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flips: Vec<FlipReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mixing: Option<MixingSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codeword: Option<CodewordReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MixingSummary {
    /// Always `"mixing_lemma"`.
    pub method: String,
    pub lambda: f64,
    pub slack: f64,
    /// Random pairs, not counting the forced `S = T = V` pair.
    pub pairs: usize,
    pub violations: usize,
    /// Largest `lhs / rhs` over pairs with `rhs > 0`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_ratio: Option<f64>,
    pub max_lhs: f64,
    /// `lhs` for `S = T = V`, which is zero for any regular graph.
    pub full_set_lhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumReport {
    /// Always `"dense_symmetric_eigen"`.
    pub method: String,
    /// `"simple"` or `"multiplicity"`.
    pub adjacency: String,
    /// Descending.
    pub eigenvalues: Vec<f64>,
    pub lambda: f64,
    pub trace: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodewordReport {
    /// `"encode"` or `"decode"`.
    pub method: String,
    pub bit: u8,
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::Usage(format!("format must be json or csv, got {s:?}"))),
        }
    }
}

fn method_name(m: Method) -> String {
    serde_json::to_value(m)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

const CSV_HEADER: [&str; 16] = [
    "method",
    "adversary",
    "graph",
    "n",
    "d",
    "lambda",
    "t",
    "epsilon",
    "q0",
    "q1",
    "estimate",
    "half_width",
    "epsilon_estimate",
    "trials",
    "confidence",
    "seed",
];

impl Report {
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Validation(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Report> {
        let report: Report = serde_json::from_str(text).map_err(|e| Error::Validation(format!("report: {e}")))?;
        if report.schema_version != SCHEMA_VERSION {
            return Err(Error::Validation(format!(
                "report schema {} is not the supported version {SCHEMA_VERSION}",
                report.schema_version
            )));
        }
        Ok(report)
    }

    /// One row per flip report; the other result kinds have no CSV form.
    pub fn to_csv(&self) -> Result<String> {
        if self.results.flips.is_empty() {
            return Err(Error::Usage(format!(
                "{} produces no flip reports; csv output needs --format json",
                self.command
            )));
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record(CSV_HEADER).map_err(io)?;
        let opt = |x: Option<String>| x.unwrap_or_default();
        for r in &self.results.flips {
            w.write_record([
                method_name(r.method),
                r.adversary.clone(),
                r.graph.name.clone(),
                r.graph.n.to_string(),
                r.graph.d.to_string(),
                opt(r.graph.lambda.map(|x| x.to_string())),
                opt(r.t.clone()),
                opt(r.epsilon.clone()),
                opt(r.q0.clone()),
                opt(r.q1.clone()),
                opt(r.estimate.map(|x| x.to_string())),
                opt(r.half_width.map(|x| x.to_string())),
                opt(r.epsilon_estimate.map(|x| x.to_string())),
                opt(r.trials.map(|x| x.to_string())),
                opt(r.confidence.map(|x| x.to_string())),
                opt(r.seed.map(|x| x.to_string())),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
        String::from_utf8(bytes).map_err(|e| Error::Validation(e.to_string()))
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
        }
    }

    /// The report as JSON with [`VOLATILE_FIELDS`] removed, for comparing runs.
    pub fn stable_payload(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("reports always serialize");
        if let Some(obj) = v.as_object_mut() {
            for key in VOLATILE_FIELDS {
                obj.remove(key);
            }
        }
        v
    }
}
