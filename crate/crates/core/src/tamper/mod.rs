//! Split-state tampering experiments.
//!
//! An adversary is a pair of vertex maps `(g, h)` acting as
//! `f(L, R) = (g(L), h(R))`. The left output never sees the right input; the
//! types make anything else inexpressible. This module measures the flip
//! probability `T = Pr_b[dec(f(enc(b))) = 1 - b]` exactly (closed form and
//! brute force), by sampling, and as a worst case over adversaries.

mod exact;
mod maps;
mod montecarlo;
mod report;
mod worst;

pub use exact::{flip_prob_bruteforce, flip_prob_closed_form, BruteForce, MAX_BRUTE_FORCE_VERTICES};
pub use maps::{
    parse_adversary, parse_table_file, parse_vertex_map, preimage_index, CoordSpace, PreimageIndex, TamperPair,
    VertexMap,
};
pub use montecarlo::{flip_prob_montecarlo, hoeffding_half_width, MonteCarloEstimate, MC_CHUNK_TRIALS};
pub use report::{format_rational, parse_rational, AdversaryTables, FlipReport, GraphParams, Method};
pub use worst::{
    worst_tampering_exhaustive, worst_tampering_search, Evaluator, SearchConfig, SearchResult, WorstCase,
    MAX_EXHAUSTIVE_VERTICES,
};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::DenseGraph;

/// Checks the preconditions shared by the exact evaluators: no multi-edges
/// and at least one non-edge per vertex.
pub(crate) fn check_exact_graph(g: &DenseGraph) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::Capability(format!(
            "{} has multi-edges; exact flip probabilities need a simple graph (use monte-carlo)",
            crate::graph::RegularGraph::describe(g)
        )));
    }
    if g.d() >= g.n() {
        return Err(Error::Capability(format!(
            "d = {} >= n = {}: the code needs non-edges",
            g.d(),
            g.n()
        )));
    }
    Ok(())
}

/// The common denominator `2 d n (n - d)` of every exact flip probability.
pub(crate) fn flip_denominator(g: &DenseGraph) -> BigInt {
    let (n, d) = (g.n() as u64, g.d() as u64);
    BigInt::from(2u64) * BigInt::from(d) * BigInt::from(n) * BigInt::from(n - d)
}

pub(crate) fn ratio(num: impl Into<BigInt>, den: BigInt) -> BigRational {
    BigRational::new(num.into(), den)
}
