use std::fmt::Write as _;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::graph::VertexId;
use crate::nmcode::Codeword;

/// Vertex indices read as little-endian base-`p` coordinate vectors of
/// length `dim`, the same bijection `LdGraph` uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoordSpace {
    pub p: PrimeModulus,
    pub dim: usize,
}

impl CoordSpace {
    pub fn size(&self) -> Option<usize> {
        (self.p.get() as usize).checked_pow(self.dim as u32)
    }

    fn digits(&self, mut v: VertexId) -> Vec<u64> {
        let p = self.p.get() as usize;
        (0..self.dim)
            .map(|_| {
                let d = (v % p) as u64;
                v /= p;
                d
            })
            .collect()
    }

    fn index(&self, digits: &[u64]) -> VertexId {
        let p = self.p.get() as usize;
        digits.iter().rev().fold(0, |acc, &d| acc * p + d as usize)
    }
}

/// One half of a split-state adversary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexMap {
    Identity,
    Constant(VertexId),
    /// Explicit table of length `n`.
    Table(Vec<VertexId>),
    /// Output coordinate `i` is input coordinate `perm[i]`.
    PermuteCoords { space: CoordSpace, perm: Vec<usize> },
    /// `x -> M x + c` over `F_p^dim`, `matrix` given by rows.
    Affine {
        space: CoordSpace,
        matrix: Vec<Vec<u64>>,
        offset: Vec<u64>,
    },
}

impl VertexMap {
    pub fn apply(&self, v: VertexId) -> VertexId {
        match self {
            VertexMap::Identity => v,
            VertexMap::Constant(c) => *c,
            VertexMap::Table(t) => t[v],
            VertexMap::PermuteCoords { space, perm } => {
                let x = space.digits(v);
                let y: Vec<u64> = perm.iter().map(|&i| x[i]).collect();
                space.index(&y)
            }
            VertexMap::Affine { space, matrix, offset } => {
                let m = space.p;
                let x = space.digits(v);
                let y: Vec<u64> = matrix
                    .iter()
                    .zip(offset)
                    .map(|(row, &c)| row.iter().zip(&x).fold(c, |acc, (&a, &xi)| m.add(acc, m.mul(a, xi))))
                    .collect();
                space.index(&y)
            }
        }
    }

    /// Checks that the map is a function `[0, n) -> [0, n)`.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            VertexMap::Identity => Ok(()),
            VertexMap::Constant(c) => {
                if *c < n {
                    Ok(())
                } else {
                    Err(Error::Usage(format!("constant vertex {c} out of range for n = {n}")))
                }
            }
            VertexMap::Table(t) => {
                if t.len() != n {
                    return Err(Error::Usage(format!("table has length {}, graph has n = {n}", t.len())));
                }
                if let Some((i, &v)) = t.iter().enumerate().find(|(_, &v)| v >= n) {
                    return Err(Error::Usage(format!("table entry {i} = {v} out of range for n = {n}")));
                }
                Ok(())
            }
            VertexMap::PermuteCoords { space, perm } => {
                check_space(space, n)?;
                let mut seen = vec![false; space.dim];
                for &i in perm {
                    if i >= space.dim || std::mem::replace(&mut seen[i], true) {
                        return Err(Error::Usage(format!("{perm:?} is not a permutation of 0..{}", space.dim)));
                    }
                }
                if perm.len() != space.dim {
                    return Err(Error::Usage(format!("{perm:?} is not a permutation of 0..{}", space.dim)));
                }
                Ok(())
            }
            VertexMap::Affine { space, matrix, offset } => {
                check_space(space, n)?;
                let p = space.p.get();
                let ok = matrix.len() == space.dim
                    && offset.len() == space.dim
                    && matrix.iter().all(|r| r.len() == space.dim)
                    && matrix.iter().flatten().chain(offset).all(|&c| c < p);
                if ok {
                    Ok(())
                } else {
                    Err(Error::Usage(format!(
                        "affine map needs a {0}x{0} matrix and length-{0} offset with entries below {p}",
                        space.dim
                    )))
                }
            }
        }
    }

    /// The map as an explicit table over `[0, n)`.
    pub fn to_table(&self, n: usize) -> Result<Vec<VertexId>> {
        self.validate(n)?;
        Ok(match self {
            VertexMap::Table(t) => t.clone(),
            other => (0..n).map(|v| other.apply(v)).collect(),
        })
    }

    /// The map in the parametric syntax accepted by [`parse_vertex_map`].
    pub fn describe(&self) -> String {
        let join = |xs: &mut dyn Iterator<Item = String>| xs.collect::<Vec<_>>().join(",");
        match self {
            VertexMap::Identity => "id".into(),
            VertexMap::Constant(c) => format!("const:{c}"),
            VertexMap::Table(t) => format!("table:{}", join(&mut t.iter().map(|v| v.to_string()))),
            VertexMap::PermuteCoords { perm, .. } => {
                format!("perm-coords:{}", join(&mut perm.iter().map(|v| v.to_string())))
            }
            VertexMap::Affine { matrix, offset, .. } => {
                let mut s = String::from("affine:");
                for row in matrix {
                    let _ = write!(s, "{};", join(&mut row.iter().map(|v| v.to_string())));
                }
                s.push_str(&join(&mut offset.iter().map(|v| v.to_string())));
                s
            }
        }
    }
}

fn check_space(space: &CoordSpace, n: usize) -> Result<()> {
    if space.size() == Some(n) {
        Ok(())
    } else {
        Err(Error::Usage(format!(
            "coordinate map over F_{}^{} does not match n = {n}",
            space.p, space.dim
        )))
    }
}

/// A split-state adversary `f(L, R) = (left(L), right(R))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TamperPair {
    pub left: VertexMap,
    pub right: VertexMap,
}

impl TamperPair {
    pub fn new(left: VertexMap, right: VertexMap) -> Self {
        TamperPair { left, right }
    }

    pub fn identity() -> Self {
        Self::new(VertexMap::Identity, VertexMap::Identity)
    }

    pub fn constant(left: VertexId, right: VertexId) -> Self {
        Self::new(VertexMap::Constant(left), VertexMap::Constant(right))
    }

    pub fn tables(left: Vec<VertexId>, right: Vec<VertexId>) -> Self {
        Self::new(VertexMap::Table(left), VertexMap::Table(right))
    }

    /// Independent uniformly random tables.
    pub fn random_tables<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut table = || (0..n).map(|_| rng.random_range(0..n)).collect();
        let left = table();
        let right = table();
        Self::tables(left, right)
    }

    pub fn apply(&self, c: Codeword) -> Codeword {
        Codeword {
            left: self.left.apply(c.left),
            right: self.right.apply(c.right),
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        self.left.validate(n)?;
        self.right.validate(n)
    }

    pub fn to_tables(&self, n: usize) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
        Ok((self.left.to_table(n)?, self.right.to_table(n)?))
    }

    pub fn describe(&self) -> String {
        format!("{},{}", self.left.describe(), self.right.describe())
    }

    /// Adversary table file: `n`, then the left table, then the right table.
    pub fn to_table_file(&self, n: usize) -> Result<String> {
        let (g, h) = self.to_tables(n)?;
        let line = |t: &[VertexId]| t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        Ok(format!("{n}\n{}\n{}\n", line(&g), line(&h)))
    }
}

pub fn parse_table_file(text: &str) -> Result<TamperPair> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut next = |what: &str| {
        lines.next().ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("missing {what}"),
        })
    };
    let (line, header) = next("header line with n")?;
    let n: usize = header.parse().map_err(|e| Error::Parse {
        line,
        msg: format!("{header:?}: {e}"),
    })?;
    let mut table = |what: &str| -> Result<Vec<VertexId>> {
        let (line, text) = next(what)?;
        let t = text
            .split_whitespace()
            .map(|s| {
                s.parse::<VertexId>().map_err(|e| Error::Parse {
                    line,
                    msg: format!("{s:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if t.len() != n {
            return Err(Error::Parse {
                line,
                msg: format!("expected {n} entries, got {}", t.len()),
            });
        }
        Ok(t)
    };
    let g = table("left table")?;
    let h = table("right table")?;
    let pair = TamperPair::tables(g, h);
    pair.validate(n)?;
    Ok(pair)
}

fn parse_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .map_err(|e| Error::Usage(format!("bad integer {x:?}: {e}")))
        })
        .collect()
}

/// Parses one map: `id`, `const:<v>`, `table:<v0>,<v1>,...`,
/// `perm-coords:<i0>,<i1>,...` or `affine:<row0>;<row1>;...;<offset>`.
/// The coordinate forms need the coordinate space of an LD graph.
pub fn parse_vertex_map(s: &str, space: Option<CoordSpace>) -> Result<VertexMap> {
    let s = s.trim();
    if s == "id" || s == "identity" {
        return Ok(VertexMap::Identity);
    }
    let (kind, arg) = s
        .split_once(':')
        .ok_or_else(|| Error::Usage(format!("unrecognised vertex map {s:?}")))?;
    let need_space = || {
        space.ok_or_else(|| Error::Usage(format!("{kind} maps need an LD graph (coordinate vertices)")))
    };
    match kind {
        "const" => {
            let v = arg
                .trim()
                .parse()
                .map_err(|e| Error::Usage(format!("bad constant {arg:?}: {e}")))?;
            Ok(VertexMap::Constant(v))
        }
        "table" => Ok(VertexMap::Table(parse_list(arg)?.into_iter().map(|v| v as usize).collect())),
        "perm-coords" => Ok(VertexMap::PermuteCoords {
            space: need_space()?,
            perm: parse_list(arg)?.into_iter().map(|v| v as usize).collect(),
        }),
        "affine" => {
            let space = need_space()?;
            let mut rows: Vec<Vec<u64>> = arg.split(';').map(parse_list).collect::<Result<_>>()?;
            let offset = rows
                .pop()
                .ok_or_else(|| Error::Usage("affine map needs rows and an offset".into()))?;
            Ok(VertexMap::Affine {
                space,
                matrix: rows,
                offset,
            })
        }
        _ => Err(Error::Usage(format!("unrecognised vertex map {s:?}"))),
    }
}

const MAP_KEYWORDS: [&str; 6] = ["id", "identity", "const:", "table:", "perm-coords:", "affine:"];

/// Parses `<left>,<right>`, splitting at the comma that starts the second
/// map. A single map is applied to both halves.
pub fn parse_adversary(s: &str, space: Option<CoordSpace>) -> Result<TamperPair> {
    let splits: Vec<usize> = s
        .match_indices(',')
        .map(|(i, _)| i)
        .filter(|&i| MAP_KEYWORDS.iter().any(|k| s[i + 1..].trim_start().starts_with(k)))
        .collect();
    match splits.as_slice() {
        [] => {
            let m = parse_vertex_map(s, space)?;
            Ok(TamperPair::new(m.clone(), m))
        }
        [i] => Ok(TamperPair::new(
            parse_vertex_map(&s[..*i], space)?,
            parse_vertex_map(&s[i + 1..], space)?,
        )),
        _ => Err(Error::Usage(format!("adversary {s:?} has more than two maps"))),
    }
}

/// The partition `{g^{-1}(v)}` of the domain, stored as one array grouped by
/// image (`order[start[v]..start[v + 1]]` is `g^{-1}(v)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreimageIndex {
    order: Vec<VertexId>,
    start: Vec<usize>,
}

impl PreimageIndex {
    pub fn with_capacity(n: usize) -> Self {
        PreimageIndex {
            order: vec![0; n],
            start: vec![0; n + 1],
        }
    }

    /// Recomputes the index for `table` in place (counting sort); the table
    /// must have entries below its own length.
    pub(crate) fn rebuild(&mut self, table: &[VertexId]) {
        let n = table.len();
        self.order.resize(n, 0);
        self.start.clear();
        self.start.resize(n + 1, 0);
        for &v in table {
            self.start[v + 1] += 1;
        }
        for v in 0..n {
            self.start[v + 1] += self.start[v];
        }
        let mut fill = self.start.clone();
        for (x, &v) in table.iter().enumerate() {
            self.order[fill[v]] = x;
            fill[v] += 1;
        }
    }

    pub fn preimage(&self, v: VertexId) -> &[VertexId] {
        &self.order[self.start[v]..self.start[v + 1]]
    }

    pub fn size(&self, v: VertexId) -> usize {
        self.start[v + 1] - self.start[v]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.start.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn len(&self) -> usize {
        self.start.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Preimage partition of a table over `[0, table.len())`.
pub fn preimage_index(table: &[VertexId]) -> Result<PreimageIndex> {
    VertexMap::Table(table.to_vec()).validate(table.len())?;
    let mut idx = PreimageIndex::with_capacity(table.len());
    idx.rebuild(table);
    Ok(idx)
}
