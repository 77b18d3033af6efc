//! Exact flip probabilities: the preimage-partition formula against direct
//! enumeration, for a few named adversaries and random tables.

use expander_nmc::graph::build_cycle;
use expander_nmc::tamper::{flip_prob_bruteforce, flip_prob_closed_form, format_rational, TamperPair};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> expander_nmc::Result<()> {
    let g = build_cycle(8)?;
    let mut adversaries = vec![
        TamperPair::identity(),
        TamperPair::constant(0, 1),
        TamperPair::constant(0, 4),
        TamperPair::tables(vec![1, 0, 3, 2, 5, 4, 7, 6], vec![1, 0, 3, 2, 5, 4, 7, 6]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    adversaries.extend((0..4).map(|_| TamperPair::random_tables(8, &mut rng)));

    for adv in &adversaries {
        let closed = flip_prob_closed_form(&g, adv)?;
        let brute = flip_prob_bruteforce(&g, adv)?;
        println!(
            "{:<40} T = {:<8} Q0 = {:<6} Q1 = {:<6} agree: {}",
            adv.describe(),
            format_rational(&closed),
            format_rational(&brute.q0),
            format_rational(&brute.q1),
            closed == brute.t
        );
    }
    Ok(())
}
