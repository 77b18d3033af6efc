//! Encoding a bit as an edge or non-edge and decoding it back, on an
//! explicit graph and on the implicit Cayley graph.

use expander_nmc::cayley::{LdGraph, LdParams};
use expander_nmc::graph::{build_petersen, RegularGraph};
use expander_nmc::nmcode::{decode, encode, Bit};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn show<G: RegularGraph + ?Sized>(g: &G, rng: &mut ChaCha8Rng) -> expander_nmc::Result<()> {
    for b in [Bit::Zero, Bit::One] {
        let c = encode(g, b, rng)?;
        println!("{}: enc({b}) = {c}, dec = {}", g.describe(), decode(g, c));
    }
    Ok(())
}

fn main() -> expander_nmc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    show(&build_petersen(), &mut rng)?;

    let ld = LdGraph::new(LdParams::new(5, 3)?);
    show(&ld, &mut rng)?;
    let c = encode(&ld, Bit::One, &mut rng)?;
    println!("as vectors: ({}) ({})", ld.vertex(c.left)?, ld.vertex(c.right)?);
    Ok(())
}
