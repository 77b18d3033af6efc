//! Experiment commands behind the `nmc` binary. Each command takes an
//! [`ExperimentConfig`] and returns a [`Report`]; writing it out is the
//! caller's job.

mod report;
mod spec;

use std::time::{Instant, SystemTime};

use rand::seq::index;
use rand::Rng;
use rayon::prelude::*;

pub use report::{
    CodewordReport, ConfigEcho, GraphStats, LambdaSource, MixingSummary, OutputFormat, Report, Results,
    SpectrumReport, SCHEMA_VERSION, VOLATILE_FIELDS,
};
pub use spec::{AdversarySpec, GraphSpec, LoadedGraph};

use crate::error::{Error, Result};
use crate::graph::{DenseGraph, VertexId};
use crate::nmcode::{decode, encode, Bit, Codeword};
use crate::seed;
use crate::spectral::{self, expansion_from_spectrum, mixing_check, nm_figure_of_merit, TOLERANCES};
use crate::tamper::{
    flip_prob_bruteforce, flip_prob_closed_form, flip_prob_montecarlo, parse_adversary, parse_table_file,
    worst_tampering_exhaustive, worst_tampering_search, Evaluator, FlipReport, GraphParams, Method, TamperPair,
};

pub const DEFAULT_TRIALS: u64 = 100_000;
pub const DEFAULT_CONFIDENCE: f64 = 0.95;
pub const DEFAULT_PAIRS: usize = 1000;

/// Graphs up to this size get a computed `lambda` in tamper reports.
pub const TAMPER_SPECTRUM_MAX_VERTICES: usize = 512;

/// How `tamper` evaluates explicit adversaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    ClosedForm,
    BruteForce,
    MonteCarlo,
    /// Closed form and brute force, side by side.
    Exact,
}

impl std::str::FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "closed_form" => Ok(MethodChoice::ClosedForm),
            "brute_force" => Ok(MethodChoice::BruteForce),
            "monte_carlo" => Ok(MethodChoice::MonteCarlo),
            "exact" => Ok(MethodChoice::Exact),
            _ => Err(Error::Usage(format!(
                "method must be closed_form, brute_force, monte_carlo or exact, got {s:?}"
            ))),
        }
    }
}

impl std::fmt::Display for MethodChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MethodChoice::ClosedForm => "closed_form",
            MethodChoice::BruteForce => "brute_force",
            MethodChoice::MonteCarlo => "monte_carlo",
            MethodChoice::Exact => "exact",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub graph: GraphSpec,
    pub adversary: Option<AdversarySpec>,
    pub method: Option<MethodChoice>,
    pub trials: u64,
    pub confidence: f64,
    pub pairs: usize,
    pub seed: u64,
}

impl ExperimentConfig {
    pub fn new(graph: GraphSpec, seed: u64) -> Self {
        ExperimentConfig {
            graph,
            adversary: None,
            method: None,
            trials: DEFAULT_TRIALS,
            confidence: DEFAULT_CONFIDENCE,
            pairs: DEFAULT_PAIRS,
            seed,
        }
    }

    pub fn with_adversary(mut self, adversary: AdversarySpec) -> Self {
        self.adversary = Some(adversary);
        self
    }

    pub fn with_method(mut self, method: MethodChoice) -> Self {
        self.method = Some(method);
        self
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            graph: self.graph.to_string(),
            adversary: None,
            method: None,
            trials: None,
            confidence: None,
            pairs: None,
            bit: None,
            seed: self.seed,
        }
    }
}

fn timestamp() -> String {
    humantime::format_rfc3339_seconds(SystemTime::now()).to_string()
}

fn finish(command: &str, config: ConfigEcho, graph: GraphStats, results: Results, start: Instant) -> Report {
    Report {
        schema_version: SCHEMA_VERSION,
        command: command.into(),
        timestamp: timestamp(),
        config,
        graph,
        results,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

/// Graph statistics; `lambda` is computed when `compute` is set and the
/// graph fits the dense backend, otherwise LD graphs fall back to `pt`.
pub fn graph_stats(g: &LoadedGraph, compute: bool) -> Result<GraphStats> {
    let (n, d) = (g.n(), g.d());
    let mut stats = GraphStats {
        name: g.name(),
        n,
        d,
        multigraph: g.as_regular().counts_multiplicity(),
        lambda: None,
        lambda_source: None,
        connected: None,
        epsilon_star: None,
        precondition_ratio: None,
        warnings: Vec::new(),
    };
    if compute && g.fits_dense() {
        let dense = g.spectral_graph()?;
        let cert = spectral::expansion_lambda(&dense)?;
        stats.lambda = Some(cert.lambda);
        stats.lambda_source = Some(LambdaSource::Computed);
        stats.connected = Some(cert.connected);
        stats.warnings.extend(cert.warning);
    } else if let LoadedGraph::Ld(ld) = g {
        match ld.params().expansion_bound() {
            Some(bound) => {
                stats.lambda = Some(bound as f64);
                stats.lambda_source = Some(LambdaSource::Bound);
            }
            None => stats
                .warnings
                .push("no spectral bound is known for t >= p; lambda not reported".into()),
        }
    }
    if let Some(lambda) = stats.lambda {
        let fom = nm_figure_of_merit(n, d, lambda);
        stats.epsilon_star = Some(fom.epsilon_star);
        stats.precondition_ratio = Some(fom.precondition_ratio);
    }
    if d >= n {
        stats.warnings.push("d >= n: the graph has no non-edges and cannot encode 0".into());
    }
    Ok(stats)
}

pub fn cmd_graph_info(config: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let g = config.graph.build()?;
    let stats = graph_stats(&g, true)?;
    Ok(finish("graph-info", config.echo(), stats, Results::default(), start))
}

pub fn cmd_spectrum(config: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let g = config.graph.build()?;
    if !g.fits_dense() {
        return Err(Error::Capability(format!(
            "{} has {} vertices; full spectra need the dense backend (n <= {})",
            g.name(),
            g.n(),
            crate::graph::DENSE_MAX_VERTICES
        )));
    }
    let dense = g.spectral_graph()?;
    let spectrum = spectral::graph_spectrum(&dense)?;
    let cert = expansion_from_spectrum(&dense, &spectrum);
    let mut stats = graph_stats(&g, false)?;
    stats.lambda = Some(cert.lambda);
    stats.lambda_source = Some(LambdaSource::Computed);
    stats.connected = Some(cert.connected);
    stats.warnings.extend(cert.warning.clone());
    let fom = nm_figure_of_merit(g.n(), g.d(), cert.lambda);
    stats.epsilon_star = Some(fom.epsilon_star);
    stats.precondition_ratio = Some(fom.precondition_ratio);
    let results = Results {
        spectrum: Some(SpectrumReport {
            method: "dense_symmetric_eigen".into(),
            adjacency: if dense.is_simple() { "simple" } else { "multiplicity" }.into(),
            trace: spectrum.sum(),
            lambda: cert.lambda,
            eigenvalues: spectrum.eigenvalues,
        }),
        ..Results::default()
    };
    Ok(finish("spectrum", config.echo(), stats, results, start))
}

/// Encodes `bit` with randomness `seed::stream(config.seed, 0)`.
pub fn cmd_encode(config: &ExperimentConfig, bit: Bit) -> Result<(Codeword, Report)> {
    let start = Instant::now();
    let g = config.graph.build()?;
    let mut rng = seed::stream(config.seed, 0);
    let c = encode(g.as_regular(), bit, &mut rng)?;
    let echo = ConfigEcho {
        bit: Some(bit.as_u8()),
        ..config.echo()
    };
    let results = Results {
        codeword: Some(CodewordReport {
            method: "encode".into(),
            bit: bit.as_u8(),
            left: c.left,
            right: c.right,
        }),
        ..Results::default()
    };
    Ok((c, finish("encode", echo, graph_stats(&g, false)?, results, start)))
}

pub fn cmd_decode(config: &ExperimentConfig, left: VertexId, right: VertexId) -> Result<(Bit, Report)> {
    let start = Instant::now();
    let g = config.graph.build()?;
    let n = g.n();
    for v in [left, right] {
        if v >= n {
            return Err(Error::Usage(format!("vertex {v} out of range for n = {n}")));
        }
    }
    let b = decode(g.as_regular(), Codeword { left, right });
    let results = Results {
        codeword: Some(CodewordReport {
            method: "decode".into(),
            bit: b.as_u8(),
            left,
            right,
        }),
        ..Results::default()
    };
    Ok((b, finish("decode", config.echo(), graph_stats(&g, false)?, results, start)))
}

fn graph_params(g: &LoadedGraph, stats: &GraphStats) -> GraphParams {
    GraphParams {
        name: g.name(),
        n: g.n(),
        d: g.d(),
        lambda: stats.lambda,
    }
}

fn need_dense<'a>(g: &'a LoadedGraph, what: &str) -> Result<&'a DenseGraph> {
    g.dense().ok_or_else(|| {
        Error::Capability(format!(
            "{what} needs an explicit graph; {} is implicit, use --method monte_carlo",
            g.name()
        ))
    })
}

fn load_adversary(spec: &AdversarySpec, g: &LoadedGraph) -> Result<TamperPair> {
    let pair = match spec {
        AdversarySpec::File(path) => {
            let text = std::fs::read_to_string(path)?;
            let pair = parse_table_file(&text)?;
            if let (crate::tamper::VertexMap::Table(l), _) = (&pair.left, &pair.right) {
                if l.len() != g.n() {
                    return Err(Error::Usage(format!(
                        "adversary file is for n = {}, graph has n = {}",
                        l.len(),
                        g.n()
                    )));
                }
            }
            pair
        }
        AdversarySpec::Maps(s) => parse_adversary(s, g.coord_space())?,
        _ => unreachable!("worst-case specs are handled by the caller"),
    };
    pair.validate(g.n())?;
    Ok(pair)
}

pub fn cmd_tamper(config: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let spec = config
        .adversary
        .as_ref()
        .ok_or_else(|| Error::Usage("tamper needs --adversary".into()))?;
    let g = config.graph.build()?;
    let stats = graph_stats(&g, g.n() <= TAMPER_SPECTRUM_MAX_VERTICES)?;
    let params = graph_params(&g, &stats);
    let mut echo = ConfigEcho {
        adversary: Some(spec.to_string()),
        ..config.echo()
    };
    let mut flips = Vec::new();

    match spec {
        AdversarySpec::Exhaustive => {
            let dense = need_dense(&g, "exhaustive search")?;
            let evaluator = match config.method {
                None | Some(MethodChoice::ClosedForm) => Evaluator::ClosedForm,
                Some(MethodChoice::BruteForce) => Evaluator::BruteForce,
                Some(other) => {
                    return Err(Error::Usage(format!(
                        "exhaustive search evaluates with closed_form or brute_force, not {other}"
                    )))
                }
            };
            echo.method = Some(
                match evaluator {
                    Evaluator::ClosedForm => "closed_form",
                    Evaluator::BruteForce => "brute_force",
                }
                .into(),
            );
            let worst = worst_tampering_exhaustive(dense, evaluator)?;
            flips.push(
                FlipReport::exact(Method::ExhaustiveMax, &worst.pair(), params, &worst.t_max)
                    .with_tables(worst.left, worst.right),
            );
        }
        AdversarySpec::Search(search) => {
            let dense = need_dense(&g, "adversary search")?;
            if config.method.is_some_and(|m| m != MethodChoice::ClosedForm) {
                return Err(Error::Usage("adversary search always scores with the closed form".into()));
            }
            let found = worst_tampering_search(dense, *search, config.seed)?;
            flips.push(
                FlipReport::exact(Method::SearchMax, &found.pair(), params, &found.t_best)
                    .with_tables(found.left, found.right)
                    .with_seed(config.seed),
            );
        }
        _ => {
            let pair = load_adversary(spec, &g)?;
            let method = config.method.unwrap_or(match g {
                LoadedGraph::Dense(_) => MethodChoice::ClosedForm,
                LoadedGraph::Ld(_) => MethodChoice::MonteCarlo,
            });
            echo.method = Some(method.to_string());
            if matches!(method, MethodChoice::ClosedForm | MethodChoice::Exact) {
                let t = flip_prob_closed_form(need_dense(&g, "the closed form")?, &pair)?;
                flips.push(FlipReport::exact(Method::ClosedForm, &pair, params.clone(), &t));
            }
            if matches!(method, MethodChoice::BruteForce | MethodChoice::Exact) {
                let bf = flip_prob_bruteforce(need_dense(&g, "brute force")?, &pair)?;
                flips.push(FlipReport::brute_force(&pair, params.clone(), &bf));
            }
            if method == MethodChoice::MonteCarlo {
                echo.trials = Some(config.trials);
                echo.confidence = Some(config.confidence);
                let est = flip_prob_montecarlo(g.as_regular(), &pair, config.trials, config.confidence, config.seed)?;
                flips.push(FlipReport::monte_carlo(&pair, params, &est, config.seed));
            }
        }
    }
    let results = Results {
        flips,
        ..Results::default()
    };
    Ok(finish("tamper", echo, stats, results, start))
}

/// Checks the mixing lemma on `config.pairs` random `(S, T)` plus the forced
/// pair `S = T = V`. Pair `k` draws from `seed::stream(config.seed, k)`.
pub fn cmd_mixing(config: &ExperimentConfig) -> Result<Report> {
    let start = Instant::now();
    let g = config.graph.build()?;
    if !g.fits_dense() {
        return Err(Error::Capability(format!(
            "mixing checks count edges on the dense backend; {} has {} vertices",
            g.name(),
            g.n()
        )));
    }
    let dense = g.spectral_graph()?;
    let cert = spectral::expansion_lambda(&dense)?;
    let lambda = cert.lambda;
    let n = dense.n();

    let draw = |k: u64| -> (Vec<VertexId>, Vec<VertexId>) {
        let mut rng = seed::stream(config.seed, k);
        let s_len = rng.random_range(1..=n);
        let t_len = rng.random_range(1..=n);
        let s = index::sample(&mut rng, n, s_len).into_vec();
        let t = index::sample(&mut rng, n, t_len).into_vec();
        (s, t)
    };
    let checks = (0..config.pairs as u64)
        .into_par_iter()
        .map(|k| {
            let (s, t) = draw(k);
            mixing_check(&dense, lambda, &s, &t)
        })
        .collect::<Result<Vec<_>>>()?;
    let all: Vec<VertexId> = (0..n).collect();
    let full = mixing_check(&dense, lambda, &all, &all)?;

    let violations = checks.iter().chain([&full]).filter(|c| !c.holds).count();
    let max_ratio = checks
        .iter()
        .chain([&full])
        .filter(|c| c.rhs > 0.0)
        .map(|c| c.lhs / c.rhs)
        .reduce(f64::max);
    let max_lhs = checks.iter().map(|c| c.lhs).fold(full.lhs, f64::max);

    let mut stats = graph_stats(&g, false)?;
    stats.lambda = Some(lambda);
    stats.lambda_source = Some(LambdaSource::Computed);
    stats.connected = Some(cert.connected);
    stats.warnings.extend(cert.warning);
    let fom = nm_figure_of_merit(g.n(), g.d(), lambda);
    stats.epsilon_star = Some(fom.epsilon_star);
    stats.precondition_ratio = Some(fom.precondition_ratio);

    let echo = ConfigEcho {
        pairs: Some(config.pairs),
        ..config.echo()
    };
    let results = Results {
        mixing: Some(MixingSummary {
            method: "mixing_lemma".into(),
            lambda,
            slack: TOLERANCES.mixing_slack,
            pairs: config.pairs,
            violations,
            max_ratio,
            max_lhs,
            full_set_lhs: full.lhs,
        }),
        ..Results::default()
    };
    Ok(finish("mixing", echo, stats, results, start))
}
