//! The Cayley graph LD_{p,t} on F_p^{t+1}: generators, neighbours,
//! self-loops, and how often a uniform pair is adjacent.

use expander_nmc::cayley::{LdGraph, LdParams};
use expander_nmc::graph::RegularGraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> expander_nmc::Result<()> {
    let g = LdGraph::new(LdParams::new(3, 2)?);
    println!("{}: n = {}, multidegree {}, {} distinct neighbours", g.describe(), g.n(), g.multidegree(), g.distinct_degree());

    for gen in g.distinct_generators() {
        println!("  generator {gen:?}");
    }

    let origin = g.vertex(0)?;
    let nbrs = g.neighbors(0)?;
    print!("neighbours of ({origin}):");
    for v in nbrs {
        print!(" ({})", g.vertex(v)?);
    }
    println!();

    let multi = g.multiplicity_graph()?;
    println!("self-loop multiplicity at 0: {}", multi.multiplicity(0, 0));

    let (hits, n) = g.edge_hit_probability();
    println!("uniform pair adjacent with probability {hits}/{n}");
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (u, v) = g.sample_edge_vec(&mut rng);
    println!("sampled edge ({u}) -> ({v}), adjacent: {}", g.is_edge_vec(&u, &v)?);

    let big = LdGraph::new(LdParams::new(101, 5)?);
    println!(
        "{}: n = {}, degree {}, lambda <= {:?}",
        big.describe(),
        big.n(),
        big.degree(),
        big.params().expansion_bound()
    );
    Ok(())
}
