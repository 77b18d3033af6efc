use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::exact::BruteForce;
use super::maps::TamperPair;
use super::montecarlo::MonteCarloEstimate;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::nmcode::epsilon_from_max_flip;

/// Exact rationals are always written as `num/den`, including integers.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| Error::Usage(format!("expected num/den, got {s:?}")))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Usage(format!("bad integer {x:?}: {e}")))
    };
    let den = parse(den)?;
    if den == BigInt::from(0) {
        return Err(Error::Usage(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(parse(num)?, den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    BruteForce,
    MonteCarlo,
    ExhaustiveMax,
    SearchMax,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphParams {
    pub name: String,
    pub n: usize,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdversaryTables {
    pub g: Vec<VertexId>,
    pub h: Vec<VertexId>,
}

/// One flip-probability result. Exact methods fill `t` and `epsilon`;
/// Monte Carlo fills the estimate fields instead.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlipReport {
    pub method: Method,
    pub adversary: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tables: Option<AdversaryTables>,
    pub graph: GraphParams,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q0: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub estimate: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub half_width: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_estimate: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub confidence: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl FlipReport {
    fn base(method: Method, adversary: &TamperPair, graph: GraphParams) -> Self {
        FlipReport {
            method,
            adversary: adversary.describe(),
            tables: None,
            graph,
            t: None,
            epsilon: None,
            q0: None,
            q1: None,
            estimate: None,
            half_width: None,
            epsilon_estimate: None,
            trials: None,
            confidence: None,
            seed: None,
        }
    }

    pub fn exact(method: Method, adversary: &TamperPair, graph: GraphParams, t: &BigRational) -> Self {
        FlipReport {
            t: Some(format_rational(t)),
            epsilon: Some(format_rational(&epsilon_from_max_flip(t))),
            ..Self::base(method, adversary, graph)
        }
    }

    pub fn brute_force(adversary: &TamperPair, graph: GraphParams, bf: &BruteForce) -> Self {
        FlipReport {
            q0: Some(format_rational(&bf.q0)),
            q1: Some(format_rational(&bf.q1)),
            ..Self::exact(Method::BruteForce, adversary, graph, &bf.t)
        }
    }

    pub fn monte_carlo(adversary: &TamperPair, graph: GraphParams, est: &MonteCarloEstimate, seed: u64) -> Self {
        FlipReport {
            estimate: Some(est.estimate),
            half_width: Some(est.half_width),
            epsilon_estimate: Some((est.estimate - 0.5).max(0.0)),
            trials: Some(est.trials),
            confidence: Some(est.confidence),
            seed: Some(seed),
            ..Self::base(Method::MonteCarlo, adversary, graph)
        }
    }

    pub fn with_tables(mut self, g: Vec<VertexId>, h: Vec<VertexId>) -> Self {
        self.tables = Some(AdversaryTables { g, h });
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// The exact flip probability, if this is an exact report.
    pub fn exact_t(&self) -> Option<BigRational> {
        self.t.as_deref().and_then(|s| parse_rational(s).ok())
    }
}
