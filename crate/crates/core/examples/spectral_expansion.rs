//! Spectral expansion of small graphs and of LD_{p,t} (with generator
//! multiplicities), next to the bound pt and the figure of merit.

use expander_nmc::cayley::{LdGraph, LdParams};
use expander_nmc::graph::{build_cycle, build_hypercube, build_petersen, RegularGraph};
use expander_nmc::spectral::{expansion_lambda, graph_spectrum, nm_figure_of_merit};

fn main() -> expander_nmc::Result<()> {
    let petersen = build_petersen();
    let spectrum = graph_spectrum(&petersen)?;
    println!("Petersen spectrum: {:?}", spectrum.eigenvalues.iter().map(|x| (x * 1e9).round() / 1e9).collect::<Vec<_>>());

    for g in [build_cycle(5)?, build_hypercube(4)?, petersen] {
        let cert = expansion_lambda(&g)?;
        let fom = nm_figure_of_merit(g.n(), g.d(), cert.lambda);
        println!(
            "{:<18} n={:<4} d={:<3} lambda={:.6} eps*={:.4} precondition={:.4}",
            g.describe(),
            g.n(),
            g.d(),
            cert.lambda,
            fom.epsilon_star,
            fom.precondition_ratio
        );
    }

    for (p, t) in [(3, 2), (5, 2), (5, 3), (3, 3)] {
        let ld = LdGraph::new(LdParams::new(p, t)?);
        let cert = expansion_lambda(&ld.multiplicity_graph()?)?;
        println!(
            "LD({p},{t}) n={:<4} d={:<3} lambda={:.6} bound={:?}{}",
            ld.n(),
            ld.multidegree(),
            cert.lambda,
            ld.params().expansion_bound(),
            cert.warning.map(|w| format!(" ({w})")).unwrap_or_default()
        );
    }
    Ok(())
}
