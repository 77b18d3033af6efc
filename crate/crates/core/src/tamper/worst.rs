//! Worst-case adversaries: exhaustive enumeration of every table pair on
//! tiny graphs, and hill climbing on larger ones.
//!
//! Both work with integer flip numerators: every exact flip probability on a
//! `d`-regular graph is `N / (2 d n (n - d))` for an integer `N`, so
//! candidates compare without rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rayon::prelude::*;

use super::maps::{PreimageIndex, TamperPair};
use super::{check_exact_graph, flip_denominator, ratio};
use crate::error::{Error, Result};
use crate::graph::{DenseGraph, VertexId};
use crate::seed;

/// Exhaustion visits `n^{2n}` pairs; 6 is already about `2 * 10^9`.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 6;

/// Which exact evaluator scores each candidate pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evaluator {
    /// The closed form over preimage partitions.
    ClosedForm,
    /// Direct enumeration of all ordered vertex pairs.
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorstCase {
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
    pub t_max: BigRational,
    pub evaluator: Evaluator,
    pub pairs_examined: u64,
}

impl WorstCase {
    pub fn pair(&self) -> TamperPair {
        TamperPair::tables(self.left.clone(), self.right.clone())
    }
}

/// Shared constants of a graph for integer scoring.
struct Scorer<'a> {
    g: &'a DenseGraph,
    n: usize,
    d: i64,
    /// `d n (n - d)`, the closed form's `1/2` on the numerator scale.
    half: i64,
    edges: Vec<(VertexId, VertexId)>,
}

impl<'a> Scorer<'a> {
    fn new(g: &'a DenseGraph) -> Self {
        let (n, d) = (g.n() as i64, g.d() as i64);
        Scorer {
            g,
            n: g.n(),
            d,
            half: d * n * (n - d),
            edges: g.directed_edges().collect(),
        }
    }

    /// `2dn(n-d) * T` from the closed form: `dn(n-d) + sum over edges of
    /// (d |g^-1 v| |h^-1 u| - n |E(g^-1 v, h^-1 u)|)`.
    fn closed_form(&self, left: &PreimageIndex, right: &PreimageIndex) -> i64 {
        let mut sizes = 0i64;
        let mut crossing = 0i64;
        for &(v, u) in &self.edges {
            sizes += (left.size(v) * right.size(u)) as i64;
            for &x in left.preimage(v) {
                for &y in right.preimage(u) {
                    crossing += self.g.adjacent(x, y) as i64;
                }
            }
        }
        self.half + self.d * sizes - self.n as i64 * crossing
    }

    /// `2dn(n-d) * T` from counting: `d * Q0-count + (n - d) * Q1-count`.
    fn brute_force(&self, left: &[VertexId], right: &[VertexId]) -> i64 {
        let (mut c0, mut c1) = (0i64, 0i64);
        for v in 0..self.n {
            let lv = left[v];
            for u in 0..self.n {
                let before = self.g.adjacent(v, u);
                let after = self.g.adjacent(lv, right[u]);
                c0 += (!before && after) as i64;
                c1 += (before && !after) as i64;
            }
        }
        self.d * c0 + (self.n as i64 - self.d) * c1
    }

    fn to_t(&self, numerator: i64) -> BigRational {
        ratio(BigInt::from(numerator), flip_denominator(self.g))
    }
}

/// The `index`-th table of `[0, n)^n` in lexicographic order.
fn table_at(mut index: u64, n: usize, out: &mut [VertexId]) {
    for slot in out.iter_mut().rev() {
        *slot = (index % n as u64) as VertexId;
        index /= n as u64;
    }
}

/// Advances `table` to its lexicographic successor; false after the last one.
fn next_table(table: &mut [VertexId], n: usize) -> bool {
    for slot in table.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Maximises `T` over all `n^{2n}` table pairs. Ties go to the
/// lexicographically smallest `(left, right)`; the result does not depend on
/// the thread count.
pub fn worst_tampering_exhaustive(g: &DenseGraph, evaluator: Evaluator) -> Result<WorstCase> {
    check_exact_graph(g)?;
    let n = g.n();
    if n > MAX_EXHAUSTIVE_VERTICES {
        return Err(Error::Capability(format!(
            "exhaustive search covers n <= {MAX_EXHAUSTIVE_VERTICES}, got n = {n}; use search"
        )));
    }
    let scorer = Scorer::new(g);
    let tables = (n as u64).pow(n as u32);

    // Best right table for each left table, in left-table order.
    let per_left: Vec<(i64, Vec<VertexId>)> = (0..tables)
        .into_par_iter()
        .map(|gi| {
            let mut left = vec![0; n];
            table_at(gi, n, &mut left);
            let mut left_pre = PreimageIndex::with_capacity(n);
            left_pre.rebuild(&left);
            let mut right_pre = PreimageIndex::with_capacity(n);
            let mut right = vec![0; n];
            let mut best = (i64::MIN, right.clone());
            loop {
                let score = match evaluator {
                    Evaluator::ClosedForm => {
                        right_pre.rebuild(&right);
                        scorer.closed_form(&left_pre, &right_pre)
                    }
                    Evaluator::BruteForce => scorer.brute_force(&left, &right),
                };
                if score > best.0 {
                    best = (score, right.clone());
                }
                if !next_table(&mut right, n) {
                    break;
                }
            }
            best
        })
        .collect();

    let (best_left, (best_score, best_right)) = per_left
        .into_iter()
        .enumerate()
        .fold(None::<(usize, (i64, Vec<VertexId>))>, |acc, (gi, cand)| match acc {
            Some(cur) if cur.1 .0 >= cand.0 => Some(cur),
            _ => Some((gi, cand)),
        })
        .expect("at least one table");
    let mut left = vec![0; n];
    table_at(best_left as u64, n, &mut left);
    Ok(WorstCase {
        left,
        right: best_right,
        t_max: scorer.to_t(best_score),
        evaluator,
        pairs_examined: tables * tables,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub iters: usize,
    pub restarts: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            iters: 2000,
            restarts: 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
    pub t_best: BigRational,
    /// Restart that produced the result: 0 starts from a constant pair onto
    /// an edge, 1 from the identity, the rest from random tables.
    pub restart: usize,
    pub accepted_moves: usize,
}

impl SearchResult {
    pub fn pair(&self) -> TamperPair {
        TamperPair::tables(self.left.clone(), self.right.clone())
    }
}

/// Hill-climbing state with the closed-form sums kept up to date under
/// single-entry table changes.
///
/// With `sl`, `sr` the preimage sizes of the left and right tables:
/// `A = sum_{(v,u) in E} sl[v] sr[u]` and `X = #{(x,y) in E : (left[x], right[y]) in E}`,
/// and the flip numerator is `dn(n-d) + d A - n X`.
pub(crate) struct ClimbState<'a> {
    g: &'a DenseGraph,
    n: usize,
    d: i64,
    half: i64,
    pub(crate) left: Vec<VertexId>,
    pub(crate) right: Vec<VertexId>,
    left_sizes: Vec<i64>,
    right_sizes: Vec<i64>,
    /// `left_weight[u] = sum_{v in N(u)} sl[v]`
    left_weight: Vec<i64>,
    /// `right_weight[v] = sum_{u in N(v)} sr[u]`
    right_weight: Vec<i64>,
    sum_sizes: i64,
    crossing: i64,
    gain: Vec<i64>,
}

impl<'a> ClimbState<'a> {
    pub(crate) fn new(g: &'a DenseGraph, left: Vec<VertexId>, right: Vec<VertexId>) -> Self {
        let (n, d) = (g.n(), g.d() as i64);
        let mut s = ClimbState {
            g,
            n,
            d,
            half: d * n as i64 * (n as i64 - d),
            left,
            right,
            left_sizes: vec![0; n],
            right_sizes: vec![0; n],
            left_weight: vec![0; n],
            right_weight: vec![0; n],
            sum_sizes: 0,
            crossing: 0,
            gain: vec![0; n],
        };
        let (a, x) = s.recompute();
        s.sum_sizes = a;
        s.crossing = x;
        s
    }

    /// Rebuilds every derived quantity from the tables and returns `(A, X)`.
    pub(crate) fn recompute(&mut self) -> (i64, i64) {
        let g = self.g;
        self.left_sizes.iter_mut().for_each(|s| *s = 0);
        self.right_sizes.iter_mut().for_each(|s| *s = 0);
        for v in 0..self.n {
            self.left_sizes[self.left[v]] += 1;
            self.right_sizes[self.right[v]] += 1;
        }
        for u in 0..self.n {
            self.left_weight[u] = g.neighbor_slice(u).iter().map(|&v| self.left_sizes[v]).sum();
            self.right_weight[u] = g.neighbor_slice(u).iter().map(|&v| self.right_sizes[v]).sum();
        }
        let a = (0..self.n).map(|v| self.left_sizes[v] * self.right_weight[v]).sum();
        let mut x = 0;
        for v in 0..self.n {
            for &u in g.neighbor_slice(v) {
                x += g.adjacent(self.left[v], self.right[u]) as i64;
            }
        }
        (a, x)
    }

    pub(crate) fn numerator(&self) -> i64 {
        self.half + self.d * self.sum_sizes - self.n as i64 * self.crossing
    }

    #[cfg(test)]
    pub(crate) fn sums(&self) -> (i64, i64) {
        (self.sum_sizes, self.crossing)
    }

    /// Numerator change for every target of `left[x]` (`right_side = false`)
    /// or `right[x]`, written into `self.gain`.
    fn gains(&mut self, right_side: bool, x: VertexId) {
        let g = self.g;
        let n = self.n as i64;
        let old = if right_side { self.right[x] } else { self.left[x] };
        let (weights, other) = if right_side {
            (&self.left_weight, &self.left)
        } else {
            (&self.right_weight, &self.right)
        };
        let adj = |a: VertexId, b: VertexId| -> i64 {
            if right_side {
                g.adjacent(b, a) as i64
            } else {
                g.adjacent(a, b) as i64
            }
        };
        let nb = g.neighbor_slice(x);
        let base: i64 = nb.iter().map(|&y| adj(old, other[y])).sum();
        for w in 0..self.n {
            let dx: i64 = nb.iter().map(|&y| adj(w, other[y])).sum::<i64>() - base;
            let da = weights[w] - weights[old];
            self.gain[w] = self.d * da - n * dx;
        }
    }

    fn apply(&mut self, right_side: bool, x: VertexId, w: VertexId) {
        let g = self.g;
        let old = if right_side { self.right[x] } else { self.left[x] };
        let (da, dx) = {
            let (weights, other) = if right_side {
                (&self.left_weight, &self.left)
            } else {
                (&self.right_weight, &self.right)
            };
            let adj = |a: VertexId, b: VertexId| -> i64 {
                if right_side {
                    g.adjacent(b, a) as i64
                } else {
                    g.adjacent(a, b) as i64
                }
            };
            let dx: i64 = g.neighbor_slice(x).iter().map(|&y| adj(w, other[y]) - adj(old, other[y])).sum();
            (weights[w] - weights[old], dx)
        };
        let (table, sizes, weights) = if right_side {
            (&mut self.right, &mut self.right_sizes, &mut self.right_weight)
        } else {
            (&mut self.left, &mut self.left_sizes, &mut self.left_weight)
        };
        table[x] = w;
        sizes[old] -= 1;
        sizes[w] += 1;
        for &u in g.neighbor_slice(old) {
            weights[u] -= 1;
        }
        for &u in g.neighbor_slice(w) {
            weights[u] += 1;
        }
        self.sum_sizes += da;
        self.crossing += dx;
    }

    /// One proposal: pick a side and entry, move it to the target with the
    /// largest gain if that gain is non-negative (lowest target on ties).
    fn step<R: Rng + ?Sized>(&mut self, rng: &mut R) -> bool {
        let right_side = rng.random::<bool>();
        let x = rng.random_range(0..self.n);
        let current = if right_side { self.right[x] } else { self.left[x] };
        self.gains(right_side, x);
        let best = (0..self.n)
            .filter(|&w| w != current)
            .max_by(|&a, &b| self.gain[a].cmp(&self.gain[b]).then(b.cmp(&a)));
        match best {
            Some(w) if self.gain[w] >= 0 => {
                self.apply(right_side, x, w);
                true
            }
            _ => false,
        }
    }
}

/// Hill climbing over table pairs with plateau moves. Restart `r` uses the
/// random stream `seed::stream(seed, r)`; the best restart wins, ties to the
/// lexicographically smallest tables.
pub fn worst_tampering_search(g: &DenseGraph, config: SearchConfig, seed: u64) -> Result<SearchResult> {
    check_exact_graph(g)?;
    if config.restarts == 0 {
        return Err(Error::Usage("search needs at least one restart".into()));
    }
    let n = g.n();
    let (v0, u0) = g.directed_edges().next().expect("regular graph with d >= 1 has an edge");
    let runs: Vec<(i64, SearchResult)> = (0..config.restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = seed::stream(seed, r as u64);
            let (left, right) = match r {
                0 => (vec![v0; n], vec![u0; n]),
                1 => ((0..n).collect(), (0..n).collect()),
                _ => {
                    let TamperPair { left, right } = TamperPair::random_tables(n, &mut rng);
                    (left.to_table(n).unwrap(), right.to_table(n).unwrap())
                }
            };
            let mut state = ClimbState::new(g, left, right);
            let mut accepted = 0;
            for _ in 0..config.iters {
                accepted += state.step(&mut rng) as usize;
            }
            let score = state.numerator();
            let result = SearchResult {
                left: state.left.clone(),
                right: state.right.clone(),
                t_best: ratio(BigInt::from(score), flip_denominator(g)),
                restart: r,
                accepted_moves: accepted,
            };
            (score, result)
        })
        .collect();

    let best = runs
        .into_iter()
        .reduce(|a, b| {
            let better = b.0 > a.0 || (b.0 == a.0 && (&b.1.left, &b.1.right) < (&a.1.left, &a.1.right));
            if better {
                b
            } else {
                a
            }
        })
        .expect("at least one restart");
    Ok(best.1)
}
