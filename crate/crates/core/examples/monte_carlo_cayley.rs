//! Sampled flip probabilities on LD_{5,3}, where the graph is never built,
//! using named coordinate adversaries.

use expander_nmc::cayley::{LdGraph, LdParams};
use expander_nmc::tamper::{flip_prob_montecarlo, parse_adversary, CoordSpace};

fn main() -> expander_nmc::Result<()> {
    let g = LdGraph::new(LdParams::new(5, 3)?);
    let space = CoordSpace {
        p: g.params().p(),
        dim: g.params().dim(),
    };
    for spec in [
        "id",
        "const:0,const:0",
        "perm-coords:1,0,2,3",
        "affine:2,0,0,0;0,2,0,0;0,0,2,0;0,0,0,2;0,0,0,0",
        "id,affine:1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1;1,0,0,0",
    ] {
        let adv = parse_adversary(spec, Some(space))?;
        let est = flip_prob_montecarlo(&g, &adv, 100_000, 0.95, 17)?;
        println!("{spec:<50} T ~ {:.4} +- {:.4}", est.estimate, est.half_width);
    }
    Ok(())
}
