//! Regular graphs as seen by the graph code.
//!
//! All edge counts are over ordered pairs: an undirected edge `{u, v}`
//! contributes `(u, v)` and `(v, u)`, a self-loop contributes `(v, v)` once.
//! A `d`-regular graph therefore has `d * n` directed edges and
//! `n * (n - d)` directed non-edges when it has no multi-edges.

use std::fmt::Write as _;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

/// Largest vertex count the dense backend accepts.
pub const DENSE_MAX_VERTICES: usize = 4096;

/// The capabilities the graph code needs from a `d`-regular graph.
pub trait RegularGraph: Send + Sync {
    fn vertex_count(&self) -> usize;

    /// Directed out-degree, counting multiplicity when
    /// [`counts_multiplicity`](Self::counts_multiplicity) is true.
    fn degree(&self) -> usize;

    /// True when some vertex pair is joined by more than one edge, in which
    /// case `degree()` is larger than the number of distinct neighbours.
    fn counts_multiplicity(&self) -> bool;

    fn is_edge(&self, u: VertexId, v: VertexId) -> bool;

    /// Uniform over directed edges, with multiplicity.
    fn sample_edge(&self, rng: &mut dyn RngCore) -> (VertexId, VertexId);

    /// Uniform over ordered pairs `(u, v)` with `!is_edge(u, v)`.
    fn sample_nonedge(&self, rng: &mut dyn RngCore) -> Result<(VertexId, VertexId)>;

    /// Distinct neighbours of `v`. Backends without cheap enumeration return
    /// a capability error.
    fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>>;

    /// Short human-readable name, e.g. `cycle(n=5)`.
    fn describe(&self) -> String;
}

/// Explicit adjacency with integer edge multiplicities, for `n <= 4096`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseGraph {
    n: usize,
    d: usize,
    name: String,
    /// Row-major `n * n` multiplicities.
    mult: Vec<u32>,
    /// Per-vertex targets, repeated by multiplicity, ascending.
    out: Vec<Vec<VertexId>>,
    /// Per-vertex distinct targets, ascending.
    distinct: Vec<Vec<VertexId>>,
    /// Prefix sums of per-row non-edge counts, length `n + 1`.
    nonedge_prefix: Vec<usize>,
    simple: bool,
}

impl DenseGraph {
    /// Builds a graph from a symmetric multiplicity matrix, checking symmetry
    /// and regularity.
    pub fn from_multiplicities(n: usize, mult: Vec<u32>, name: impl Into<String>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter("graph must have at least one vertex".into()));
        }
        if n > DENSE_MAX_VERTICES {
            return Err(Error::Capability(format!(
                "dense backend supports at most {DENSE_MAX_VERTICES} vertices, got {n}"
            )));
        }
        if mult.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: mult.len(),
                right: n * n,
            });
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if mult[u * n + v] != mult[v * n + u] {
                    return Err(Error::VertexValidation {
                        vertex: u,
                        reason: format!("edge ({u}, {v}) is not symmetric"),
                    });
                }
            }
        }
        let row_sum = |u: usize| -> usize { mult[u * n..(u + 1) * n].iter().map(|&m| m as usize).sum() };
        let d = row_sum(0);
        if let Some(u) = (1..n).find(|&u| row_sum(u) != d) {
            return Err(Error::VertexValidation {
                vertex: u,
                reason: format!("degree {} differs from degree {d} of vertex 0", row_sum(u)),
            });
        }

        let mut out = Vec::with_capacity(n);
        let mut distinct = Vec::with_capacity(n);
        let mut nonedge_prefix = Vec::with_capacity(n + 1);
        nonedge_prefix.push(0);
        for u in 0..n {
            let row = &mult[u * n..(u + 1) * n];
            let mut targets = Vec::with_capacity(d);
            let mut uniq = Vec::new();
            for (v, &m) in row.iter().enumerate() {
                if m > 0 {
                    uniq.push(v);
                    targets.extend(std::iter::repeat_n(v, m as usize));
                }
            }
            nonedge_prefix.push(nonedge_prefix[u] + (n - uniq.len()));
            out.push(targets);
            distinct.push(uniq);
        }
        let simple = mult.iter().all(|&m| m <= 1);
        Ok(DenseGraph {
            n,
            d,
            name: name.into(),
            mult,
            out,
            distinct,
            nonedge_prefix,
            simple,
        })
    }

    /// Builds a simple graph from undirected edges, each listed once. A pair
    /// `(v, v)` is a self-loop.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)], name: impl Into<String>) -> Result<Self> {
        if n > DENSE_MAX_VERTICES {
            return Err(Error::Capability(format!(
                "dense backend supports at most {DENSE_MAX_VERTICES} vertices, got {n}"
            )));
        }
        let mut mult = vec![0u32; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Usage(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if mult[u * n + v] != 0 {
                return Err(Error::VertexValidation {
                    vertex: u,
                    reason: format!("duplicate edge ({u}, {v})"),
                });
            }
            mult[u * n + v] = 1;
            mult[v * n + u] = 1;
        }
        Self::from_multiplicities(n, mult, name)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// True when every multiplicity is 0 or 1 (self-loops allowed).
    pub fn is_simple(&self) -> bool {
        self.simple
    }

    #[inline]
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u32 {
        self.mult[u * self.n + v]
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.mult[u * self.n + v] != 0
    }

    /// Distinct neighbours of `v`, ascending.
    pub fn neighbor_slice(&self, v: VertexId) -> &[VertexId] {
        &self.distinct[v]
    }

    /// Directed edges `(u, v)` in row-major order, ignoring multiplicity.
    pub fn directed_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.distinct
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (u, v)))
    }

    /// Trace of the adjacency matrix.
    pub fn loop_count(&self) -> u64 {
        (0..self.n).map(|v| self.multiplicity(v, v) as u64).sum()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.distinct[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Adjacency as a dense `f64` matrix (row-major), entries are multiplicities.
    pub fn adjacency_f64(&self) -> Vec<f64> {
        self.mult.iter().map(|&m| m as f64).collect()
    }

    /// Edge-list text: header `n d`, then each undirected edge once.
    /// Multi-edges are written once per unit of multiplicity.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.d);
        for u in 0..self.n {
            for &v in &self.distinct[u] {
                if v >= u {
                    for _ in 0..self.multiplicity(u, v) {
                        let _ = writeln!(s, "{u} {v}");
                    }
                }
            }
        }
        s
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::Usage(format!("vertex {v} out of range for n = {}", self.n)))
        }
    }
}

impl RegularGraph for DenseGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn degree(&self) -> usize {
        self.d
    }

    fn counts_multiplicity(&self) -> bool {
        !self.simple
    }

    fn is_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.adjacent(u, v)
    }

    fn sample_edge(&self, rng: &mut dyn RngCore) -> (VertexId, VertexId) {
        let u = rng.random_range(0..self.n);
        let v = self.out[u][rng.random_range(0..self.d)];
        (u, v)
    }

    fn sample_nonedge(&self, rng: &mut dyn RngCore) -> Result<(VertexId, VertexId)> {
        let total = self.nonedge_prefix[self.n];
        if total == 0 {
            return Err(Error::Capability(format!("{} has no non-edges", self.name)));
        }
        let r = rng.random_range(0..total);
        // Row u holds indices [prefix[u], prefix[u + 1]).
        let u = self.nonedge_prefix.partition_point(|&s| s <= r) - 1;
        let mut k = r - self.nonedge_prefix[u];
        for v in 0..self.n {
            if !self.adjacent(u, v) {
                if k == 0 {
                    return Ok((u, v));
                }
                k -= 1;
            }
        }
        unreachable!("non-edge prefix sums out of sync with adjacency")
    }

    fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(v)?;
        Ok(self.distinct[v].clone())
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

/// `|E(S, T)|`: ordered pairs `(s, t)` in `S x T` that are edges, counted
/// with multiplicity.
pub fn edge_count_between(g: &DenseGraph, s: &[VertexId], t: &[VertexId]) -> Result<u64> {
    for &v in s.iter().chain(t) {
        g.check_vertex(v)?;
    }
    let mut count = 0u64;
    for &a in s {
        for &b in t {
            count += g.multiplicity(a, b) as u64;
        }
    }
    Ok(count)
}

pub fn build_cycle(n: usize) -> Result<DenseGraph> {
    if n < 3 {
        return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    DenseGraph::from_edges(n, &edges, format!("cycle(n={n})"))
}

/// `K_n` without loops, `d = n - 1`.
pub fn build_complete(n: usize) -> Result<DenseGraph> {
    if n < 2 {
        return Err(Error::Parameter(format!("complete graph needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    DenseGraph::from_edges(n, &edges, format!("complete(n={n})"))
}

/// All-ones adjacency: every ordered pair, including `(v, v)`, is an edge.
/// Here `d = n`, so it has no non-edges and only serves spectral calibration.
pub fn build_complete_with_loops(n: usize) -> Result<DenseGraph> {
    if n == 0 {
        return Err(Error::Parameter("complete graph needs n >= 1".into()));
    }
    DenseGraph::from_multiplicities(n, vec![1; n * n], format!("complete-loops(n={n})"))
}

/// The `k`-cube `Q_k`.
pub fn build_hypercube(k: u32) -> Result<DenseGraph> {
    if !(1..=12).contains(&k) {
        return Err(Error::Parameter(format!("hypercube dimension must be in 1..=12, got {k}")));
    }
    let n = 1usize << k;
    let mut edges = Vec::with_capacity(n * k as usize / 2);
    for u in 0..n {
        for bit in 0..k {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    DenseGraph::from_edges(n, &edges, format!("hypercube(k={k})"))
}

pub fn build_petersen() -> DenseGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    DenseGraph::from_edges(10, &edges, "petersen").expect("petersen graph is 3-regular")
}

/// `K_{2k}` minus a perfect matching (the cocktail-party graph), `d = 2k - 2`.
pub fn build_cocktail_party(k: usize) -> Result<DenseGraph> {
    if k < 2 {
        return Err(Error::Parameter(format!("cocktail party graph needs k >= 2, got {k}")));
    }
    let n = 2 * k;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if v != u ^ 1 {
                edges.push((u, v));
            }
        }
    }
    DenseGraph::from_edges(n, &edges, format!("cocktail(k={k})"))
}

/// Attempts of the pairing model before giving up.
pub const RANDOM_REGULAR_ATTEMPTS: usize = 10_000;

/// Simple `d`-regular graph from the pairing (configuration) model, rejecting
/// pairings with loops or repeated edges. Deterministic for a given `rng` state.
pub fn build_random_regular<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R) -> Result<DenseGraph> {
    if n == 0 || d >= n || !(n * d).is_multiple_of(2) {
        return Err(Error::Parameter(format!(
            "random regular graph needs d < n and n*d even, got n = {n}, d = {d}"
        )));
    }
    if n > DENSE_MAX_VERTICES {
        return Err(Error::Capability(format!(
            "dense backend supports at most {DENSE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut stubs: Vec<VertexId> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut mult = vec![0u32; n * n];
    'attempt: for _ in 0..RANDOM_REGULAR_ATTEMPTS {
        stubs.shuffle(rng);
        mult.iter_mut().for_each(|m| *m = 0);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || mult[u * n + v] != 0 {
                continue 'attempt;
            }
            mult[u * n + v] = 1;
            mult[v * n + u] = 1;
        }
        return DenseGraph::from_multiplicities(n, mult, format!("random-regular(n={n},d={d})"));
    }
    Err(Error::Sampling(format!(
        "pairing model produced no simple graph in {RANDOM_REGULAR_ATTEMPTS} attempts (n = {n}, d = {d})"
    )))
}

/// Parses the edge-list format: first non-comment line `n d`, then one
/// undirected edge `u v` per line; `#` starts a comment line.
pub fn parse_edge_list(text: &str) -> Result<DenseGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected two integers, got {line:?}"),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|e| Error::Parse {
                line: line_no,
                msg: format!("{s:?}: {e}"),
            })
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a >= n || b >= n {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("vertex out of range for n = {n}"),
                    });
                }
                edges.push((a, b));
            }
        }
    }
    let Some((n, d)) = header else {
        return Err(Error::Parse {
            line: 0,
            msg: "missing \"n d\" header".into(),
        });
    };
    let mut degree = vec![0usize; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        if u != v {
            degree[v] += 1;
        }
    }
    if let Some(vertex) = (0..n).find(|&v| degree[v] != d) {
        return Err(Error::VertexValidation {
            vertex,
            reason: format!("degree {} but header declares {d}", degree[vertex]),
        });
    }
    DenseGraph::from_edges(n, &edges, format!("edge-list(n={n})"))
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<DenseGraph> {
    let text = std::fs::read_to_string(path.as_ref())?;
    parse_edge_list(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cycle_examples() {
        let c4 = build_cycle(4).unwrap();
        assert_eq!(c4.d(), 2);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            assert!(c4.is_edge(u, v) && c4.is_edge(v, u));
        }
        assert!(!c4.is_edge(0, 2));
        assert!(!build_cycle(5).unwrap().is_edge(0, 2));
        let c3 = build_cycle(3).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(c3.is_edge(u, v), u != v);
            }
        }
        assert!(matches!(build_cycle(2), Err(Error::Parameter(_))));
    }

    #[test]
    fn complete_with_loops() {
        let g = build_complete_with_loops(3).unwrap();
        assert_eq!(g.d(), 3);
        assert!((0..3).all(|u| (0..3).all(|v| g.is_edge(u, v))));
        let one = build_complete_with_loops(1).unwrap();
        assert!(one.is_edge(0, 0));
        assert_eq!(one.d(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(g.sample_nonedge(&mut rng), Err(Error::Capability(_))));
    }

    #[test]
    fn hypercube_examples() {
        let q3 = build_hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.d()), (8, 3));
        let q2 = build_hypercube(2).unwrap();
        // Q_2 is the 4-cycle 0-1-3-2-0.
        let relabel = [0, 1, 3, 2];
        let c4 = build_cycle(4).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(q2.is_edge(relabel[u], relabel[v]), c4.is_edge(u, v));
            }
        }
        assert!(build_hypercube(0).is_err());
        assert!(build_hypercube(13).is_err());
    }

    #[test]
    fn random_regular_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = build_random_regular(6, 3, &mut rng).unwrap();
        assert!(g.is_simple());
        for v in 0..6 {
            assert_eq!(g.neighbor_slice(v).len(), 3);
            assert!(!g.is_edge(v, v));
        }
        assert!(matches!(build_random_regular(5, 3, &mut rng), Err(Error::Parameter(_))));
        let k4 = build_random_regular(4, 3, &mut rng).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(k4.is_edge(u, v), u != v);
            }
        }
    }

    #[test]
    fn random_regular_is_deterministic() {
        let a = build_random_regular(12, 4, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = build_random_regular(12, 4, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn load_examples() {
        let c4 = parse_edge_list("# the 4-cycle\n4 2\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(c4.mult, build_cycle(4).unwrap().mult);

        let err = parse_edge_list("4 2\n0 1\n1 2\n2 3\n3 0\n0 2\n").unwrap_err();
        assert!(matches!(err, Error::VertexValidation { .. }), "{err}");

        let err = parse_edge_list("4 2\n0 1\n1 2\n2 3\n3 0\n1 3\n").unwrap_err();
        match err {
            Error::VertexValidation { vertex, .. } => assert_eq!(vertex, 1),
            other => panic!("unexpected {other}"),
        }

        // Regular but with the wrong declared degree.
        let err = parse_edge_list("4 3\n0 1\n1 2\n2 3\n3 0\n").unwrap_err();
        assert!(matches!(err, Error::VertexValidation { vertex: 0, .. }));

        assert!(matches!(parse_edge_list("4 2\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("2 1\n0 5\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn asymmetric_matrix_rejected() {
        let err = DenseGraph::from_multiplicities(2, vec![0, 1, 0, 1], "bad").unwrap_err();
        assert!(matches!(err, Error::VertexValidation { vertex: 0, .. }));
    }

    #[test]
    fn self_loops_round_trip_through_edge_list() {
        let g = parse_edge_list("2 2\n0 0\n1 1\n0 1\n").unwrap();
        assert_eq!(g.d(), 2);
        assert!(g.is_edge(0, 0));
        assert_eq!(g.loop_count(), 2);
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn edge_count_examples() {
        let c4 = build_cycle(4).unwrap();
        assert_eq!(edge_count_between(&c4, &[0], &[1, 3]).unwrap(), 2);
        assert_eq!(edge_count_between(&c4, &[], &[0, 1, 2, 3]).unwrap(), 0);
        let all: Vec<_> = (0..4).collect();
        assert_eq!(edge_count_between(&c4, &all, &all).unwrap(), 8);
        assert!(matches!(edge_count_between(&c4, &[4], &[0]), Err(Error::Usage(_))));
    }

    fn test_graphs() -> Vec<DenseGraph> {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        vec![
            build_cycle(7).unwrap(),
            build_hypercube(4).unwrap(),
            build_petersen(),
            build_cocktail_party(4).unwrap(),
            build_random_regular(30, 5, &mut rng).unwrap(),
            build_complete_with_loops(5).unwrap(),
        ]
    }

    #[test]
    fn symmetry_and_total_edges() {
        for g in test_graphs() {
            let n = g.n();
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(g.is_edge(u, v), g.is_edge(v, u));
                }
            }
            let all: Vec<_> = (0..n).collect();
            assert_eq!(edge_count_between(&g, &all, &all).unwrap(), (g.d() * n) as u64);
        }
    }

    #[test]
    fn samplers_respect_supports() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for g in test_graphs() {
            for _ in 0..20_000 {
                let (u, v) = g.sample_edge(&mut rng);
                assert!(g.is_edge(u, v));
                if g.d() < g.n() {
                    let (u, v) = g.sample_nonedge(&mut rng).unwrap();
                    assert!(!g.is_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn sample_edge_marginals_on_c8() {
        let g = build_cycle(8).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let draws = 100_000usize;
        let mut counts = vec![0usize; 64];
        for _ in 0..draws {
            let (u, v) = g.sample_edge(&mut rng);
            counts[u * 8 + v] += 1;
        }
        let p = 1.0 / 16.0;
        let mean = draws as f64 * p;
        let sd = (draws as f64 * p * (1.0 - p)).sqrt();
        for (u, v) in g.directed_edges() {
            let c = counts[u * 8 + v] as f64;
            assert!((c - mean).abs() <= 5.0 * sd, "edge ({u},{v}) count {c}");
        }
        assert_eq!(counts.iter().sum::<usize>(), draws);
    }

    #[test]
    fn sample_nonedge_covers_every_nonedge() {
        let g = build_cycle(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut seen = vec![false; 25];
        for _ in 0..5_000 {
            let (u, v) = g.sample_nonedge(&mut rng).unwrap();
            seen[u * 5 + v] = true;
        }
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(seen[u * 5 + v], !g.is_edge(u, v));
            }
        }
    }
}
