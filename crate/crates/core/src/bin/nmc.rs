use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use expander_nmc::cli::{
    cmd_decode, cmd_encode, cmd_graph_info, cmd_mixing, cmd_spectrum, cmd_tamper, AdversarySpec, ExperimentConfig,
    GraphSpec, MethodChoice, OutputFormat, Report, DEFAULT_CONFIDENCE, DEFAULT_PAIRS, DEFAULT_TRIALS,
};
use expander_nmc::nmcode::Bit;
use expander_nmc::{Error, Result};

/// Non-malleable codes from regular graphs: encode, decode, and measure tampering.
#[derive(Parser)]
#[command(name = "nmc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// cycle:n=, complete:n=, complete-loops:n=, hypercube:k=, petersen,
    /// cocktail:k=, random-regular:n=,d=,seed=, ld:p=,t=, or an edge-list file
    #[arg(long)]
    graph: GraphSpec,
    /// 64-bit seed; drawn from OS entropy when absent and always reported
    #[arg(long)]
    seed: Option<u64>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// json or csv
    #[arg(long, default_value = "json")]
    format: OutputFormat,
    /// Worker threads
    #[arg(long, env = "NMC_THREADS")]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// n, d, lambda and the figure of merit
    GraphInfo(Common),
    /// Full adjacency spectrum
    Spectrum(Common),
    /// Encode one bit and print the codeword as "u v"
    Encode {
        #[command(flatten)]
        common: Common,
        /// 0 or 1
        #[arg(long)]
        bit: u8,
    },
    /// Decode the codeword "left right"
    Decode {
        #[command(flatten)]
        common: Common,
        left: usize,
        right: usize,
    },
    /// Flip probability of an adversary, or the worst adversary found
    Tamper {
        #[command(flatten)]
        common: Common,
        /// Table file, map pair such as const:0,const:3, exhaustive, or search:iters=,restarts=
        #[arg(long)]
        adversary: AdversarySpec,
        /// closed_form, brute_force, monte_carlo or exact (closed form and brute force)
        #[arg(long)]
        method: Option<MethodChoice>,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_CONFIDENCE)]
        confidence: f64,
    },
    /// Check the expander mixing lemma on random vertex-set pairs
    Mixing {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = DEFAULT_PAIRS)]
        pairs: usize,
    },
}

impl Common {
    fn config(&self) -> ExperimentConfig {
        let seed = self.seed.unwrap_or_else(rand::random);
        ExperimentConfig::new(self.graph.clone(), seed)
    }
}

fn emit(report: &Report, common: &Common) -> Result<()> {
    let text = report.render(common.format)?;
    match &common.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let common = match &cli.command {
        Command::GraphInfo(c) | Command::Spectrum(c) => c,
        Command::Encode { common, .. }
        | Command::Decode { common, .. }
        | Command::Tamper { common, .. }
        | Command::Mixing { common, .. } => common,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(threads) = common.threads {
        if threads == 0 {
            return Err(Error::Usage("--threads must be at least 1".into()));
        }
        pool = pool.num_threads(threads);
    }
    let pool = pool.build().map_err(|e| Error::Usage(e.to_string()))?;
    let config = common.config();

    pool.install(|| match &cli.command {
        Command::GraphInfo(c) => emit(&cmd_graph_info(&config)?, c),
        Command::Spectrum(c) => emit(&cmd_spectrum(&config)?, c),
        Command::Encode { common, bit } => {
            let bit = Bit::try_from(*bit)?;
            let (codeword, report) = cmd_encode(&config, bit)?;
            println!("{codeword}");
            eprintln!("seed {}", report.config.seed);
            if common.out.is_some() {
                emit(&report, common)?;
            }
            Ok(())
        }
        Command::Decode { common, left, right } => {
            let (bit, report) = cmd_decode(&config, *left, *right)?;
            println!("{bit}");
            if common.out.is_some() {
                emit(&report, common)?;
            }
            Ok(())
        }
        Command::Tamper {
            common,
            adversary,
            method,
            trials,
            confidence,
        } => {
            let config = ExperimentConfig {
                adversary: Some(adversary.clone()),
                method: *method,
                trials: *trials,
                confidence: *confidence,
                ..config.clone()
            };
            emit(&cmd_tamper(&config)?, common)
        }
        Command::Mixing { common, pairs } => {
            let config = ExperimentConfig {
                pairs: *pairs,
                ..config.clone()
            };
            emit(&cmd_mixing(&config)?, common)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.kind().exit_code() as u8)
        }
    }
}
