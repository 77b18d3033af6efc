//! Exact flip probabilities on explicit simple graphs.
//!
//! `flip_prob_closed_form` evaluates
//!
//! ```text
//! T = 1/2 + 1/(2d(n-d)) * sum_{(v,u) in E} ( d |g^-1(v)| |h^-1(u)| / n - |E(g^-1(v), h^-1(u))| )
//! ```
//!
//! `flip_prob_bruteforce` enumerates all `n^2` ordered pairs and counts how
//! many non-edges land on edges (`Q0`) and edges land on non-edges (`Q1`).
//! The two share nothing but the adjacency test, so agreement between them
//! checks the closed form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::maps::{preimage_index, TamperPair};
use super::{check_exact_graph, flip_denominator, ratio};
use crate::error::{Error, Result};
use crate::graph::{edge_count_between, DenseGraph};

pub const MAX_BRUTE_FORCE_VERTICES: usize = 512;

/// Closed-form flip probability, in exact rational arithmetic.
pub fn flip_prob_closed_form(g: &DenseGraph, adv: &TamperPair) -> Result<BigRational> {
    check_exact_graph(g)?;
    let n = g.n();
    let (left, right) = adv.to_tables(n)?;
    let pre_left = preimage_index(&left)?;
    let pre_right = preimage_index(&right)?;

    let d = BigRational::from_integer(BigInt::from(g.d()));
    let n_q = BigRational::from_integer(BigInt::from(n));
    let mut sum = BigRational::zero();
    // Row-major over directed edges.
    for (v, u) in g.directed_edges() {
        let sizes = BigInt::from(pre_left.size(v)) * BigInt::from(pre_right.size(u));
        let crossing = edge_count_between(g, pre_left.preimage(v), pre_right.preimage(u))?;
        sum += &d * BigRational::from_integer(sizes) / &n_q - BigRational::from_integer(BigInt::from(crossing));
    }
    let half = BigRational::one() / BigRational::from_integer(BigInt::from(2));
    let scale = BigRational::from_integer(BigInt::from(2 * g.d() * (n - g.d())));
    Ok(half + sum / scale)
}

/// Exact `Q0`, `Q1` and `T = (Q0 + Q1) / 2` by enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForce {
    /// Non-edges `(v, u)` with `(g(v), h(u))` an edge.
    pub nonedges_to_edges: u64,
    /// Edges `(v, u)` with `(g(v), h(u))` a non-edge.
    pub edges_to_nonedges: u64,
    pub q0: BigRational,
    pub q1: BigRational,
    pub t: BigRational,
}

pub fn flip_prob_bruteforce(g: &DenseGraph, adv: &TamperPair) -> Result<BruteForce> {
    check_exact_graph(g)?;
    let n = g.n();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::Capability(format!(
            "brute force enumerates n^2 pairs and stops at n = {MAX_BRUTE_FORCE_VERTICES}; use closed-form"
        )));
    }
    let (left, right) = adv.to_tables(n)?;
    let (mut c0, mut c1) = (0u64, 0u64);
    for v in 0..n {
        for u in 0..n {
            let before = g.adjacent(v, u);
            let after = g.adjacent(left[v], right[u]);
            match (before, after) {
                (false, true) => c0 += 1,
                (true, false) => c1 += 1,
                _ => {}
            }
        }
    }
    let (n64, d64) = (n as u64, g.d() as u64);
    let q0 = ratio(c0, BigInt::from(n64 * (n64 - d64)));
    let q1 = ratio(c1, BigInt::from(d64 * n64));
    // (Q0 + Q1) / 2 over the shared denominator 2dn(n-d).
    let t = ratio(BigInt::from(d64 * c0 + (n64 - d64) * c1), flip_denominator(g));
    debug_assert_eq!(t, (&q0 + &q1) / BigRational::from_integer(BigInt::from(2)));
    Ok(BruteForce {
        nonedges_to_edges: c0,
        edges_to_nonedges: c1,
        q0,
        q1,
        t,
    })
}
