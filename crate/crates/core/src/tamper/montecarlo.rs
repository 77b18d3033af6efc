use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::maps::TamperPair;
use crate::error::{Error, Result};
use crate::graph::RegularGraph;
use crate::nmcode::{decode, encode, Bit};
use crate::seed;

/// Trials per independently seeded chunk.
pub const MC_CHUNK_TRIALS: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub half_width: f64,
    pub flips: u64,
    pub trials: u64,
    pub confidence: f64,
}

impl MonteCarloEstimate {
    pub fn covers(&self, t: f64) -> bool {
        (self.estimate - t).abs() <= self.half_width
    }
}

/// Hoeffding half-width `sqrt(ln(2 / (1 - confidence)) / (2 trials))`.
pub fn hoeffding_half_width(trials: u64, confidence: f64) -> f64 {
    ((2.0 / (1.0 - confidence)).ln() / (2.0 * trials as f64)).sqrt()
}

/// Samples `b`, encodes, tampers and decodes `trials` times.
///
/// Trials run in chunks of [`MC_CHUNK_TRIALS`]; chunk `k` draws from
/// `seed::stream(seed, k)`, so the estimate is identical for any thread count.
pub fn flip_prob_montecarlo<G: RegularGraph + ?Sized>(
    g: &G,
    adv: &TamperPair,
    trials: u64,
    confidence: f64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if trials < 100 {
        return Err(Error::Usage(format!("monte carlo needs at least 100 trials, got {trials}")));
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::Usage(format!("confidence must be in (0, 1), got {confidence}")));
    }
    adv.validate(g.vertex_count())?;
    let chunks = trials.div_ceil(MC_CHUNK_TRIALS);
    let flips = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = seed::stream(seed, k);
            let len = MC_CHUNK_TRIALS.min(trials - k * MC_CHUNK_TRIALS);
            let mut flips = 0u64;
            for _ in 0..len {
                let b = Bit::from(rng.random::<bool>());
                let c = encode(g, b, &mut rng)?;
                if decode(g, adv.apply(c)) != b {
                    flips += 1;
                }
            }
            Ok(flips)
        })
        .collect::<Result<Vec<u64>>>()?
        .into_iter()
        .sum::<u64>();
    Ok(MonteCarloEstimate {
        estimate: flips as f64 / trials as f64,
        half_width: hoeffding_half_width(trials, confidence),
        flips,
        trials,
        confidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{LdGraph, LdParams};
    use crate::graph::build_cycle;

    #[test]
    fn half_width_at_95_percent() {
        let hw = hoeffding_half_width(10_000, 0.95);
        assert!((hw - 0.013_58).abs() < 1e-4, "{hw}");
    }

    #[test]
    fn identity_on_ld_never_flips() {
        let g = LdGraph::new(LdParams::new(5, 3).unwrap());
        let est = flip_prob_montecarlo(&g, &TamperPair::identity(), 10_000, 0.95, 1).unwrap();
        assert_eq!(est.flips, 0);
        assert!((est.half_width - 0.0136).abs() < 1e-3);
    }

    #[test]
    fn constant_onto_edge_is_a_coin() {
        let g = build_cycle(8).unwrap();
        let est = flip_prob_montecarlo(&g, &TamperPair::constant(0, 1), 10_000, 0.95, 5).unwrap();
        assert!(est.covers(0.5), "{est:?}");
    }

    #[test]
    fn rejects_bad_arguments() {
        let g = build_cycle(8).unwrap();
        let id = TamperPair::identity();
        assert!(flip_prob_montecarlo(&g, &id, 99, 0.95, 0).is_err());
        assert!(flip_prob_montecarlo(&g, &id, 1000, 1.0, 0).is_err());
        assert!(flip_prob_montecarlo(&g, &TamperPair::constant(8, 0), 1000, 0.9, 0).is_err());
    }

    #[test]
    fn independent_of_thread_count() {
        let g = build_cycle(8).unwrap();
        let adv = TamperPair::tables(vec![3, 1, 4, 1, 5, 1, 2, 6], vec![2, 7, 1, 0, 2, 0, 1, 7]);
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| flip_prob_montecarlo(&g, &adv, 50_000, 0.95, 42).unwrap())
        };
        assert_eq!(run(1), run(4));
    }
}
