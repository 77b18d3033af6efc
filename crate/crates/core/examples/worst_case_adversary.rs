//! Finds the worst split-state adversary on C_5 by exhausting all 3125^2
//! table pairs, then checks that hill climbing finds the same value.

use std::time::Instant;

use expander_nmc::graph::build_cycle;
use expander_nmc::nmcode::epsilon_from_max_flip;
use expander_nmc::spectral::{expansion_lambda, nm_figure_of_merit};
use expander_nmc::tamper::{
    format_rational, worst_tampering_exhaustive, worst_tampering_search, Evaluator, SearchConfig,
};

fn main() -> expander_nmc::Result<()> {
    let c5 = build_cycle(5)?;

    for evaluator in [Evaluator::ClosedForm, Evaluator::BruteForce] {
        let start = Instant::now();
        let worst = worst_tampering_exhaustive(&c5, evaluator)?;
        println!(
            "{evaluator:?}: T_max = {} over {} pairs in {:.2?}, g = {:?}, h = {:?}",
            format_rational(&worst.t_max),
            worst.pairs_examined,
            start.elapsed(),
            worst.left,
            worst.right
        );
    }

    let found = worst_tampering_search(&c5, SearchConfig { iters: 2000, restarts: 20 }, 2024)?;
    println!(
        "search: T_best = {} (restart {}, {} accepted moves)",
        format_rational(&found.t_best),
        found.restart,
        found.accepted_moves
    );

    // At this size the asymptotic bound says nothing; print both side by side.
    let cert = expansion_lambda(&c5)?;
    let merit = nm_figure_of_merit(5, 2, cert.lambda);
    println!(
        "empirical epsilon = {}, lambda^1.5/d = {:.4}",
        format_rational(&epsilon_from_max_flip(&found.t_best)),
        merit.epsilon_star
    );
    Ok(())
}
