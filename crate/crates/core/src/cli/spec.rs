//! The flat `name:key=value,...` graph and adversary spec languages.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cayley::{LdGraph, LdParams};
use crate::error::{Error, Result};
use crate::graph::{self, DenseGraph, RegularGraph, DENSE_MAX_VERTICES};
use crate::tamper::{CoordSpace, SearchConfig};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Cycle { n: usize },
    Complete { n: usize },
    /// All-ones adjacency (loops included).
    CompleteLoops { n: usize },
    Hypercube { k: u32 },
    Petersen,
    Cocktail { k: usize },
    RandomRegular { n: usize, d: usize, seed: u64 },
    Ld { p: u64, t: usize },
    File(PathBuf),
}

struct Params<'a> {
    spec: &'a str,
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> Params<'a> {
    fn parse(spec: &'a str, body: &'a str) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Usage(format!("expected key=value in {spec:?}, got {item:?}")))?;
            pairs.push((k.trim(), v.trim()));
        }
        Ok(Params { spec, pairs })
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: fmt::Display,
    {
        match self.pairs.iter().find(|(k, _)| *k == key) {
            None => Ok(None),
            Some((_, v)) => v
                .parse()
                .map(Some)
                .map_err(|e| Error::Usage(format!("bad value for {key} in {:?}: {e}", self.spec))),
        }
    }

    fn require<T: FromStr>(&self, key: &str) -> Result<T>
    where
        T::Err: fmt::Display,
    {
        self.get(key)?
            .ok_or_else(|| Error::Usage(format!("{:?} is missing {key}=", self.spec)))
    }

    fn only(&self, keys: &[&str]) -> Result<()> {
        match self.pairs.iter().find(|(k, _)| !keys.contains(k)) {
            Some((k, _)) => Err(Error::Usage(format!("unknown key {k:?} in {:?}", self.spec))),
            None => Ok(()),
        }
    }
}

const GRAPH_NAMES: [&str; 8] = [
    "cycle",
    "complete",
    "complete-loops",
    "hypercube",
    "petersen",
    "cocktail",
    "random-regular",
    "ld",
];

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, body) = s.split_once(':').unwrap_or((s, ""));
        if !GRAPH_NAMES.contains(&name) {
            if Path::new(s).is_file() {
                return Ok(GraphSpec::File(PathBuf::from(s)));
            }
            return Err(Error::Usage(format!(
                "unknown graph {s:?}: expected one of {} or an edge-list file",
                GRAPH_NAMES.join(", ")
            )));
        }
        let p = Params::parse(s, body)?;
        let spec = match name {
            "cycle" => {
                p.only(&["n"])?;
                GraphSpec::Cycle { n: p.require("n")? }
            }
            "complete" => {
                p.only(&["n"])?;
                GraphSpec::Complete { n: p.require("n")? }
            }
            "complete-loops" => {
                p.only(&["n"])?;
                GraphSpec::CompleteLoops { n: p.require("n")? }
            }
            "hypercube" => {
                p.only(&["k"])?;
                GraphSpec::Hypercube { k: p.require("k")? }
            }
            "petersen" => {
                p.only(&[])?;
                GraphSpec::Petersen
            }
            "cocktail" => {
                p.only(&["k"])?;
                GraphSpec::Cocktail { k: p.require("k")? }
            }
            "random-regular" => {
                p.only(&["n", "d", "seed"])?;
                GraphSpec::RandomRegular {
                    n: p.require("n")?,
                    d: p.require("d")?,
                    seed: p.get("seed")?.unwrap_or(0),
                }
            }
            _ => {
                p.only(&["p", "t"])?;
                GraphSpec::Ld {
                    p: p.require("p")?,
                    t: p.require("t")?,
                }
            }
        };
        Ok(spec)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Cycle { n } => write!(f, "cycle:n={n}"),
            GraphSpec::Complete { n } => write!(f, "complete:n={n}"),
            GraphSpec::CompleteLoops { n } => write!(f, "complete-loops:n={n}"),
            GraphSpec::Hypercube { k } => write!(f, "hypercube:k={k}"),
            GraphSpec::Petersen => write!(f, "petersen"),
            GraphSpec::Cocktail { k } => write!(f, "cocktail:k={k}"),
            GraphSpec::RandomRegular { n, d, seed } => write!(f, "random-regular:n={n},d={d},seed={seed}"),
            GraphSpec::Ld { p, t } => write!(f, "ld:p={p},t={t}"),
            GraphSpec::File(path) => write!(f, "{}", path.display()),
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<LoadedGraph> {
        let dense = match *self {
            GraphSpec::Cycle { n } => graph::build_cycle(n),
            GraphSpec::Complete { n } => graph::build_complete(n),
            GraphSpec::CompleteLoops { n } => graph::build_complete_with_loops(n),
            GraphSpec::Hypercube { k } => graph::build_hypercube(k),
            GraphSpec::Petersen => Ok(graph::build_petersen()),
            GraphSpec::Cocktail { k } => graph::build_cocktail_party(k),
            GraphSpec::RandomRegular { n, d, seed } => {
                graph::build_random_regular(n, d, &mut ChaCha8Rng::seed_from_u64(seed))
            }
            GraphSpec::Ld { p, t } => {
                let params = LdParams::new(p, t)?;
                return Ok(LoadedGraph::Ld(LdGraph::new(params)));
            }
            GraphSpec::File(ref path) => graph::load_graph(path),
        };
        dense.map(LoadedGraph::Dense)
    }
}

/// A graph ready for experiments: an explicit adjacency matrix, or the
/// implicit Cayley graph.
#[derive(Debug, Clone)]
pub enum LoadedGraph {
    Dense(DenseGraph),
    Ld(LdGraph),
}

impl LoadedGraph {
    pub fn as_regular(&self) -> &dyn RegularGraph {
        match self {
            LoadedGraph::Dense(g) => g,
            LoadedGraph::Ld(g) => g,
        }
    }

    pub fn n(&self) -> usize {
        self.as_regular().vertex_count()
    }

    pub fn d(&self) -> usize {
        self.as_regular().degree()
    }

    pub fn name(&self) -> String {
        self.as_regular().describe()
    }

    pub fn dense(&self) -> Option<&DenseGraph> {
        match self {
            LoadedGraph::Dense(g) => Some(g),
            LoadedGraph::Ld(_) => None,
        }
    }

    /// The matrix spectral statements are about; for LD graphs this is the
    /// multiplicity adjacency.
    pub fn spectral_graph(&self) -> Result<DenseGraph> {
        match self {
            LoadedGraph::Dense(g) => Ok(g.clone()),
            LoadedGraph::Ld(g) => g.multiplicity_graph(),
        }
    }

    pub fn fits_dense(&self) -> bool {
        self.n() <= DENSE_MAX_VERTICES
    }

    pub fn coord_space(&self) -> Option<CoordSpace> {
        match self {
            LoadedGraph::Dense(_) => None,
            LoadedGraph::Ld(g) => Some(CoordSpace {
                p: g.params().p(),
                dim: g.params().dim(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdversarySpec {
    Exhaustive,
    Search(SearchConfig),
    /// Table file: `n`, then the left and right tables.
    File(PathBuf),
    /// Parametric maps such as `const:0,const:3` or `perm-coords:1,0,2`.
    Maps(String),
}

impl FromStr for AdversarySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "exhaustive" {
            return Ok(AdversarySpec::Exhaustive);
        }
        if s == "search" || s.starts_with("search:") {
            let p = Params::parse(s, s.strip_prefix("search").unwrap().trim_start_matches(':'))?;
            p.only(&["iters", "restarts"])?;
            let default = SearchConfig::default();
            return Ok(AdversarySpec::Search(SearchConfig {
                iters: p.get("iters")?.unwrap_or(default.iters),
                restarts: p.get("restarts")?.unwrap_or(default.restarts),
            }));
        }
        if Path::new(s).is_file() {
            return Ok(AdversarySpec::File(PathBuf::from(s)));
        }
        if s.is_empty() {
            return Err(Error::Usage("empty adversary spec".into()));
        }
        Ok(AdversarySpec::Maps(s.to_string()))
    }
}

impl fmt::Display for AdversarySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdversarySpec::Exhaustive => write!(f, "exhaustive"),
            AdversarySpec::Search(c) => write!(f, "search:iters={},restarts={}", c.iters, c.restarts),
            AdversarySpec::File(path) => write!(f, "{}", path.display()),
            AdversarySpec::Maps(s) => write!(f, "{s}"),
        }
    }
}
