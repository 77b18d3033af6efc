//! The expander mixing lemma on random vertex sets, through the same
//! command the binary runs.

use expander_nmc::cli::{cmd_mixing, ExperimentConfig};

fn main() -> expander_nmc::Result<()> {
    for graph in ["petersen", "hypercube:k=4", "ld:p=3,t=2", "random-regular:n=64,d=6,seed=1"] {
        let mut config = ExperimentConfig::new(graph.parse()?, 2024);
        config.pairs = 2000;
        let report = cmd_mixing(&config)?;
        let m = report.results.mixing.expect("mixing summary");
        println!(
            "{graph:<32} lambda={:.4} violations={} max lhs/rhs={:.4}",
            m.lambda,
            m.violations,
            m.max_ratio.unwrap_or(0.0)
        );
    }
    Ok(())
}
