//! The graph code: a 1 is a uniformly random directed edge, a 0 a uniformly
//! random directed non-edge, and decoding is the adjacency test.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{RegularGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Bit {
    Zero,
    One,
}

impl Bit {
    pub fn flip(self) -> Bit {
        match self {
            Bit::Zero => Bit::One,
            Bit::One => Bit::Zero,
        }
    }

    pub fn as_u8(self) -> u8 {
        self as u8
    }
}

impl From<bool> for Bit {
    fn from(b: bool) -> Self {
        if b {
            Bit::One
        } else {
            Bit::Zero
        }
    }
}

impl TryFrom<u8> for Bit {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            0 => Ok(Bit::Zero),
            1 => Ok(Bit::One),
            _ => Err(Error::Usage(format!("bit must be 0 or 1, got {v}"))),
        }
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// The two halves `(L, R)` of a split-state codeword.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Codeword {
    pub left: VertexId,
    pub right: VertexId,
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.left, self.right)
    }
}

pub fn encode<G: RegularGraph + ?Sized>(g: &G, b: Bit, rng: &mut dyn RngCore) -> Result<Codeword> {
    if g.degree() >= g.vertex_count() {
        return Err(Error::Capability(format!(
            "{} has d = {} >= n = {}; there are no non-edges to encode 0",
            g.describe(),
            g.degree(),
            g.vertex_count()
        )));
    }
    let (left, right) = match b {
        Bit::One => g.sample_edge(rng),
        Bit::Zero => g.sample_nonedge(rng)?,
    };
    Ok(Codeword { left, right })
}

pub fn decode<G: RegularGraph + ?Sized>(g: &G, c: Codeword) -> Bit {
    Bit::from(g.is_edge(c.left, c.right))
}

/// `max(T_max - 1/2, 0)`: a worst-case flip probability `T_max` over a
/// tampering family certifies non-malleability with this error.
pub fn epsilon_from_max_flip(t_max: &BigRational) -> BigRational {
    let half = BigRational::one() / BigRational::from_integer(2.into());
    let eps = t_max - half;
    if eps < BigRational::zero() {
        BigRational::zero()
    } else {
        eps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{LdGraph, LdParams};
    use crate::graph::{build_complete_with_loops, build_cycle, build_hypercube, build_petersen};
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn decode_examples() {
        let c4 = build_cycle(4).unwrap();
        assert_eq!(decode(&c4, Codeword { left: 0, right: 1 }), Bit::One);
        assert_eq!(decode(&c4, Codeword { left: 0, right: 2 }), Bit::Zero);
        let ld = LdGraph::new(LdParams::new(3, 2).unwrap());
        for v in 0..27 {
            assert_eq!(decode(&ld, Codeword { left: v, right: v }), Bit::One);
        }
        // Out-of-range halves decode rather than fail.
        assert_eq!(decode(&c4, Codeword { left: 9, right: 0 }), Bit::Zero);
    }

    #[test]
    fn encode_postconditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let graphs: Vec<Box<dyn RegularGraph>> = vec![
            Box::new(build_cycle(4).unwrap()),
            Box::new(build_petersen()),
            Box::new(build_hypercube(3).unwrap()),
            Box::new(LdGraph::new(LdParams::new(3, 2).unwrap())),
        ];
        for g in &graphs {
            for _ in 0..2000 {
                let c = encode(g.as_ref(), Bit::One, &mut rng).unwrap();
                assert!(g.is_edge(c.left, c.right));
                let c = encode(g.as_ref(), Bit::Zero, &mut rng).unwrap();
                assert!(!g.is_edge(c.left, c.right));
            }
        }
    }

    #[test]
    fn encode_rejects_graphs_without_nonedges() {
        let g = build_complete_with_loops(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(encode(&g, Bit::Zero, &mut rng), Err(Error::Capability(_))));
        assert!(matches!(encode(&g, Bit::One, &mut rng), Err(Error::Capability(_))));
    }

    #[test]
    fn zero_encoding_on_c4_is_uniform_over_eight_nonedges() {
        let g = build_cycle(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let draws = 10_000usize;
        let mut counts = [0usize; 16];
        for _ in 0..draws {
            let c = encode(&g, Bit::Zero, &mut rng).unwrap();
            counts[c.left * 4 + c.right] += 1;
        }
        let nonedges: Vec<usize> = (0..16).filter(|&i| !g.is_edge(i / 4, i % 4)).collect();
        assert_eq!(nonedges.len(), 8);
        let p = 1.0 / 8.0;
        let sd = (draws as f64 * p * (1.0 - p)).sqrt();
        for i in 0..16 {
            if nonedges.contains(&i) {
                assert!((counts[i] as f64 - draws as f64 * p).abs() <= 5.0 * sd);
            } else {
                assert_eq!(counts[i], 0);
            }
        }
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon_from_max_flip(&q(1, 2)), q(0, 1));
        assert_eq!(epsilon_from_max_flip(&q(0, 1)), q(0, 1));
        assert_eq!(epsilon_from_max_flip(&q(3, 5)), q(1, 10));
        assert_eq!(epsilon_from_max_flip(&q(1, 1)), q(1, 2));
    }

    #[test]
    fn epsilon_is_monotone() {
        let mut prev = epsilon_from_max_flip(&q(0, 1));
        for k in 1..=60 {
            let cur = epsilon_from_max_flip(&q(k, 60));
            assert!(cur >= prev);
            prev = cur;
        }
    }

    #[test]
    fn bit_parsing() {
        assert_eq!(Bit::try_from(1u8).unwrap(), Bit::One);
        assert!(Bit::try_from(2u8).is_err());
        assert_eq!(Bit::One.flip(), Bit::Zero);
    }
}
