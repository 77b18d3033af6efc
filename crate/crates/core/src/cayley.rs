//! The Cayley expander `LD_{p,t}` on `F_p^{t+1}`.
//!
//! Generators are the moment vectors `(b, ab, a^2 b, ..., a^t b)` for
//! `a, b` in `F_p`. The `p` choices with `b = 0` all give the zero vector,
//! so every vertex carries a self-loop of multiplicity `p` and the graph is
//! `p^2`-regular counting multiplicity, with `p(p - 1) + 1` distinct
//! neighbours. Membership ignores multiplicity; edge sampling keeps it.
//!
//! Vertices are indexed little-endian in base `p`: coordinate `i` is the
//! digit of weight `p^i`.

use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::field::{FieldVector, PrimeModulus};
use crate::graph::{DenseGraph, RegularGraph, VertexId, DENSE_MAX_VERTICES};

/// Draw budget for rejection sampling of non-edges.
pub const NONEDGE_RETRY_BUDGET: usize = 1000;

/// Largest `p` and `t` for which neighbour enumeration is offered.
pub const NEIGHBOR_MAX_P: u64 = 7;
pub const NEIGHBOR_MAX_T: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LdParams {
    p: PrimeModulus,
    t: usize,
}

impl LdParams {
    /// Requires `t >= 1` and `p^{t+1}` to fit a vertex index.
    ///
    /// The construction is well defined for any `t >= 1`; the `pt` expansion
    /// guarantee only covers `1 < t < p` (see [`Self::expansion_bound`]).
    pub fn new(p: u64, t: usize) -> Result<Self> {
        let p = PrimeModulus::new(p)?;
        if t < 1 {
            return Err(Error::Parameter(format!("LD graph needs t >= 1, got t = {t}")));
        }
        let exp = u32::try_from(t + 1).map_err(|_| Error::Parameter(format!("t = {t} too large")))?;
        let n = p
            .get()
            .checked_pow(exp)
            .filter(|&n| usize::try_from(n).is_ok())
            .ok_or_else(|| Error::Capability(format!("p^(t+1) overflows a vertex index for p = {p}, t = {t}")))?;
        debug_assert!(n > 0);
        Ok(LdParams { p, t })
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Vector dimension `t + 1`.
    pub fn dim(&self) -> usize {
        self.t + 1
    }

    /// `p * t`, the known bound on the spectral expansion, when `1 < t < p`.
    pub fn expansion_bound(&self) -> Option<u64> {
        let t = self.t as u64;
        (1 < t && t < self.p.get()).then(|| self.p.get() * t)
    }
}

#[derive(Debug, Clone)]
pub struct LdGraph {
    params: LdParams,
    n: usize,
    /// `p^i` for `i = 0..=t`.
    place: Vec<usize>,
}

impl LdGraph {
    pub fn new(params: LdParams) -> Self {
        let p = params.p.get() as usize;
        let place: Vec<usize> = std::iter::successors(Some(1usize), |&w| w.checked_mul(p))
            .take(params.dim())
            .collect();
        let n = place[params.t] * p;
        LdGraph { params, n, place }
    }

    pub fn params(&self) -> LdParams {
        self.params
    }

    pub fn p(&self) -> u64 {
        self.params.p.get()
    }

    pub fn t(&self) -> usize {
        self.params.t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Multidegree `p^2`.
    pub fn multidegree(&self) -> usize {
        let p = self.p() as usize;
        p * p
    }

    /// Number of distinct neighbours of each vertex, `p(p - 1) + 1`.
    pub fn distinct_degree(&self) -> usize {
        let p = self.p() as usize;
        p * (p - 1) + 1
    }

    pub fn vertex_index(&self, v: &FieldVector) -> Result<VertexId> {
        self.check_vector(v)?;
        Ok(v.coords().iter().zip(&self.place).map(|(&c, &w)| c as usize * w).sum())
    }

    pub fn vertex(&self, index: VertexId) -> Result<FieldVector> {
        if index >= self.n {
            return Err(Error::Usage(format!("vertex index {index} out of range for n = {}", self.n)));
        }
        FieldVector::new(self.params.p, self.digits(index).collect())
    }

    fn digits(&self, index: VertexId) -> impl Iterator<Item = u64> + '_ {
        let p = self.p() as usize;
        self.place.iter().map(move |&w| ((index / w) % p) as u64)
    }

    fn check_vector(&self, v: &FieldVector) -> Result<()> {
        if v.modulus() != self.params.p {
            return Err(Error::ModulusMismatch {
                left: self.p(),
                right: v.modulus().get(),
            });
        }
        if v.dim() != self.params.dim() {
            return Err(Error::DimensionMismatch {
                left: self.params.dim(),
                right: v.dim(),
            });
        }
        Ok(())
    }

    /// The generator `(b, ab, ..., a^t b)`.
    pub fn generator(&self, a: u64, b: u64) -> Vec<u64> {
        let m = self.params.p;
        let (a, b) = (a % m.get(), b % m.get());
        let mut x = Vec::with_capacity(self.params.dim());
        let mut cur = b;
        for _ in 0..self.params.dim() {
            x.push(cur);
            cur = m.mul(cur, a);
        }
        x
    }

    /// Whether the difference vector `x` is some generator. `O(t)` field
    /// operations: `x = 0` is the `b = 0` generator; otherwise `x_0` must be
    /// nonzero and `x_i = a * x_{i-1}` with `a = x_1 / x_0`.
    pub fn is_generator(&self, x: &[u64]) -> bool {
        let m = self.params.p;
        if x.iter().all(|&c| c == 0) {
            return true;
        }
        if x[0] == 0 {
            return false;
        }
        let a = m.mul(x[1], m.inv(x[0]).expect("x_0 is nonzero"));
        x.windows(2).all(|w| w[1] == m.mul(a, w[0]))
    }

    /// Membership of `(u, v)` as field vectors.
    pub fn is_edge_vec(&self, u: &FieldVector, v: &FieldVector) -> Result<bool> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        Ok(self.is_generator(u.sub(v)?.coords()))
    }

    fn difference(&self, u: VertexId, v: VertexId) -> Vec<u64> {
        let m = self.params.p;
        self.digits(u).zip(self.digits(v)).map(|(a, b)| m.sub(a, b)).collect()
    }

    fn translate(&self, x: VertexId, s: &[u64]) -> VertexId {
        let m = self.params.p;
        self.digits(x)
            .zip(s)
            .zip(&self.place)
            .map(|((c, &g), &w)| m.add(c, g) as usize * w)
            .sum()
    }

    /// Edge sample as coordinate vectors.
    pub fn sample_edge_vec(&self, rng: &mut dyn RngCore) -> (FieldVector, FieldVector) {
        let (u, v) = RegularGraph::sample_edge(self, rng);
        (self.vertex(u).unwrap(), self.vertex(v).unwrap())
    }

    /// Rejection sampling of a non-edge, also returning the number of
    /// uniform pairs drawn (at least 1).
    pub fn sample_nonedge_counted(&self, rng: &mut dyn RngCore) -> Result<(VertexId, VertexId, usize)> {
        if self.params.t < 2 {
            return Err(Error::Usage(format!(
                "non-edge rejection sampling requires t > 1, got t = {}",
                self.params.t
            )));
        }
        for draws in 1..=NONEDGE_RETRY_BUDGET {
            let u = rng.random_range(0..self.n);
            let v = rng.random_range(0..self.n);
            if !self.is_edge(u, v) {
                return Ok((u, v, draws));
            }
        }
        Err(Error::Sampling(format!(
            "no non-edge found in {NONEDGE_RETRY_BUDGET} draws on {}",
            self.describe()
        )))
    }

    /// Probability that a uniform ordered pair is adjacent,
    /// `(p(p - 1) + 1) / p^{t+1}`, as (numerator, denominator).
    pub fn edge_hit_probability(&self) -> (u64, u64) {
        (self.distinct_degree() as u64, self.n as u64)
    }

    /// Distinct generators, zero vector first, then `b != 0` in `(a, b)` order.
    pub fn distinct_generators(&self) -> Vec<Vec<u64>> {
        let p = self.p();
        let mut gens = vec![vec![0; self.params.dim()]];
        for a in 0..p {
            for b in 1..p {
                gens.push(self.generator(a, b));
            }
        }
        gens
    }

    /// Adjacency with generator multiplicities: entry `(u, v)` counts the
    /// pairs `(a, b)` with `v = u + (b, ab, ..., a^t b)`. The diagonal is `p`.
    pub fn multiplicity_graph(&self) -> Result<DenseGraph> {
        if self.n > DENSE_MAX_VERTICES {
            return Err(Error::Capability(format!(
                "{} has {} vertices; the dense backend stops at {DENSE_MAX_VERTICES}",
                self.describe(),
                self.n
            )));
        }
        let p = self.p();
        let n = self.n;
        let mut mult = vec![0u32; n * n];
        let gens: Vec<Vec<u64>> = (0..p).flat_map(|a| (0..p).map(move |b| (a, b))).map(|(a, b)| self.generator(a, b)).collect();
        for x in 0..n {
            for s in &gens {
                mult[x * n + self.translate(x, s)] += 1;
            }
        }
        DenseGraph::from_multiplicities(n, mult, format!("{} (multigraph)", self.describe()))
    }

    /// Adjacency ignoring multiplicity: the graph the decoder sees, which is
    /// `p(p - 1) + 1`-regular with a single self-loop per vertex.
    pub fn distinct_graph(&self) -> Result<DenseGraph> {
        let multi = self.multiplicity_graph()?;
        let n = self.n;
        let mut mult = vec![0u32; n * n];
        for u in 0..n {
            for &v in multi.neighbor_slice(u) {
                mult[u * n + v] = 1;
            }
        }
        DenseGraph::from_multiplicities(n, mult, self.describe())
    }
}

impl RegularGraph for LdGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn degree(&self) -> usize {
        self.multidegree()
    }

    fn counts_multiplicity(&self) -> bool {
        true
    }

    fn is_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.is_generator(&self.difference(v, u))
    }

    fn sample_edge(&self, rng: &mut dyn RngCore) -> (VertexId, VertexId) {
        let p = self.p();
        let x = rng.random_range(0..self.n);
        let a = rng.random_range(0..p);
        let b = rng.random_range(0..p);
        (x, self.translate(x, &self.generator(a, b)))
    }

    fn sample_nonedge(&self, rng: &mut dyn RngCore) -> Result<(VertexId, VertexId)> {
        self.sample_nonedge_counted(rng).map(|(u, v, _)| (u, v))
    }

    fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        if self.p() > NEIGHBOR_MAX_P || self.t() > NEIGHBOR_MAX_T {
            return Err(Error::Capability(format!(
                "neighbour enumeration needs p <= {NEIGHBOR_MAX_P} and t <= {NEIGHBOR_MAX_T}; use is_edge on {}",
                self.describe()
            )));
        }
        if v >= self.n {
            return Err(Error::Usage(format!("vertex {v} out of range for n = {}", self.n)));
        }
        let mut out: Vec<VertexId> = self.distinct_generators().iter().map(|s| self.translate(v, s)).collect();
        out.sort_unstable();
        Ok(out)
    }

    fn describe(&self) -> String {
        format!("ld(p={},t={})", self.p(), self.t())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    fn ld(p: u64, t: usize) -> LdGraph {
        LdGraph::new(LdParams::new(p, t).unwrap())
    }

    fn vec_of(g: &LdGraph, c: &[u64]) -> FieldVector {
        FieldVector::new(g.params().p(), c.to_vec()).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(LdParams::new(5, 2).is_ok());
        assert!(matches!(LdParams::new(4, 2), Err(Error::NotPrime(4))));
        assert!(matches!(LdParams::new(5, 0), Err(Error::Parameter(_))));
        assert_eq!(LdParams::new(5, 3).unwrap().expansion_bound(), Some(15));
        assert_eq!(LdParams::new(5, 1).unwrap().expansion_bound(), None);
        assert_eq!(LdParams::new(3, 3).unwrap().expansion_bound(), None);
        assert!(matches!(LdParams::new(4_294_967_291, 3), Err(Error::Capability(_))));
        assert_eq!(ld(101, 5).n(), 101usize.pow(6));
    }

    #[test]
    fn membership_examples() {
        let g = ld(5, 2);
        let zero = vec_of(&g, &[0, 0, 0]);
        assert!(g.is_edge_vec(&vec_of(&g, &[1, 2, 4]), &zero).unwrap());
        assert!(!g.is_edge_vec(&vec_of(&g, &[1, 2, 3]), &zero).unwrap());
        let u = vec_of(&g, &[3, 1, 4]);
        assert!(g.is_edge_vec(&u, &u).unwrap());
        assert!(!g.is_edge_vec(&vec_of(&g, &[0, 1, 0]), &zero).unwrap());
        let short = FieldVector::new(g.params().p(), vec![0, 0]).unwrap();
        assert!(matches!(g.is_edge_vec(&short, &zero), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn index_examples() {
        let g = ld(3, 2);
        assert_eq!(g.vertex_index(&vec_of(&g, &[0, 0, 0])).unwrap(), 0);
        assert_eq!(g.vertex_index(&vec_of(&g, &[1, 0, 0])).unwrap(), 1);
        assert_eq!(g.vertex_index(&vec_of(&g, &[2, 2, 2])).unwrap(), 26);
        for i in 0..27 {
            assert_eq!(g.vertex_index(&g.vertex(i).unwrap()).unwrap(), i);
        }
        assert!(matches!(g.vertex(27), Err(Error::Usage(_))));
    }

    #[test]
    fn edge_sampling_from_zero_on_f2() {
        let g = ld(2, 1);
        let from_zero: std::collections::BTreeSet<Vec<u64>> =
            (0..2).flat_map(|a| (0..2).map(move |b| (a, b))).map(|(a, b)| g.generator(a, b)).collect();
        // (0,0) twice, (1,0), (1,1).
        let expected: std::collections::BTreeSet<Vec<u64>> =
            [vec![0, 0], vec![1, 0], vec![1, 1]].into_iter().collect();
        assert_eq!(from_zero, expected);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..1000 {
            let (u, v) = g.sample_edge_vec(&mut rng);
            let x = v.sub(&u).unwrap();
            assert!(expected.contains(x.coords()));
        }
    }

    #[test]
    fn sampled_difference_matches_generator_multiplicities() {
        let g = ld(3, 2);
        // Exact multiset by enumeration of (a, b).
        let mut exact: HashMap<Vec<u64>, usize> = HashMap::new();
        for a in 0..3 {
            for b in 0..3 {
                *exact.entry(g.generator(a, b)).or_default() += 1;
            }
        }
        assert_eq!(exact[&vec![0, 0, 0]], 3);
        assert_eq!(exact.len(), 7);

        let draws = 100_000usize;
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
        for _ in 0..draws {
            let (u, v) = g.sample_edge_vec(&mut rng);
            *seen.entry(v.sub(&u).unwrap().coords().to_vec()).or_default() += 1;
        }
        assert_eq!(seen.len(), exact.len());
        for (x, &m) in &exact {
            let p = m as f64 / 9.0;
            let mean = draws as f64 * p;
            let sd = (draws as f64 * p * (1.0 - p)).sqrt();
            assert!((seen[x] as f64 - mean).abs() <= 5.0 * sd, "{x:?}: {} vs {mean}", seen[x]);
        }
    }

    #[test]
    fn nonedge_sampling() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for (p, t) in [(3, 2), (5, 2), (3, 3), (5, 3)] {
            let g = ld(p, t);
            for _ in 0..100_000 {
                let (u, v) = g.sample_edge(&mut rng);
                assert!(g.is_edge(u, v));
                let (u, v) = g.sample_nonedge(&mut rng).unwrap();
                assert!(!g.is_edge(u, v));
            }
        }
        assert!(matches!(ld(5, 1).sample_nonedge(&mut rng), Err(Error::Usage(_))));
    }

    #[test]
    fn hit_probabilities_from_distinct_generators() {
        assert_eq!(ld(3, 2).edge_hit_probability(), (7, 27));
        assert_eq!(ld(5, 3).edge_hit_probability(), (21, 625));
        for (p, t) in [(3, 2), (5, 3), (7, 2)] {
            let g = ld(p, t);
            let gens = g.distinct_generators();
            let set: std::collections::HashSet<_> = gens.iter().cloned().collect();
            assert_eq!(set.len(), gens.len());
            assert_eq!(gens.len(), g.distinct_degree());
            let (num, den) = g.edge_hit_probability();
            assert!(num * p < den, "hit probability must be below 1/p");
        }
    }

    #[test]
    fn neighbor_enumeration() {
        let g = ld(3, 2);
        for v in 0..27 {
            let nb = g.neighbors(v).unwrap();
            assert_eq!(nb.len(), 7);
            assert!(nb.contains(&v));
            for &u in &nb {
                assert!(g.neighbors(u).unwrap().contains(&v));
            }
        }
        assert!(matches!(ld(11, 2).neighbors(0), Err(Error::Capability(_))));
    }

    #[test]
    fn membership_agrees_with_multigraph() {
        for (p, t) in [(3, 2), (5, 2), (3, 3)] {
            let g = ld(p, t);
            let m = g.multiplicity_graph().unwrap();
            assert_eq!(m.d(), g.multidegree());
            for u in 0..g.n() {
                assert_eq!(m.multiplicity(u, u) as u64, p);
                for v in 0..g.n() {
                    assert_eq!(m.adjacent(u, v), g.is_edge(u, v));
                    assert_eq!(g.is_edge(u, v), g.is_edge(v, u));
                }
            }
            let s = g.distinct_graph().unwrap();
            assert_eq!(s.d(), g.distinct_degree());
        }
    }

    #[test]
    fn multiplicity_graph_refuses_large_instances() {
        assert!(matches!(ld(11, 3).multiplicity_graph(), Err(Error::Capability(_))));
    }
}
