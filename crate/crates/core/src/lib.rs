//! Single-bit split-state non-malleable codes from regular graphs.
//!
//! A bit is encoded as an ordered vertex pair of a `d`-regular graph: a
//! uniformly random edge for 1, a uniformly random non-edge for 0. The two
//! vertices are stored separately, and a split-state adversary tampers with
//! each half independently. The crate provides the code, an explicit
//! high-degree Cayley expander over `F_p^{t+1}`, spectral diagnostics, and
//! exact and sampled measurements of how often an adversary flips the bit.

pub mod cayley;
pub mod cli;
pub mod error;
pub mod field;
pub mod graph;
pub mod nmcode;
pub mod seed;
pub mod spectral;
pub mod tamper;

pub use error::{Error, ErrorKind, Result};
