use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qserre::hilbert::Enumeration;
use qserre::tdpair::TDPairInstance;
use qserre_cli::commands::{self, CliError, Report};

#[derive(Parser)]
#[command(name = "qserre", version, about = "Exact computations with the q-Serre relations")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Normalize {
        expr: String,
        /// Specialize q to this rational.
        #[arg(long)]
        q: Option<String>,
        /// Expand q-integers into Laurent polynomials.
        #[arg(long)]
        expanded: bool,
    },
    /// Run identity sweeps.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Compare irreducible-word counts with the product series.
    Hilbert {
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
    },
    /// List the irreducible words of a given length.
    Enumerate {
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value_t = Via::Bijection)]
        via: Via,
    },
    /// Check the specialized triple product identity.
    Jacobi {
        #[arg(long, default_value_t = 25)]
        max_degree: usize,
    },
    /// Tridiagonal pair instances.
    Tdpair {
        #[command(subcommand)]
        what: Tdpair,
    },
    /// Compare normal forms under randomized site choices.
    Confluence {
        /// Number of random words.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Strategies compared with the leftmost one, per word.
        #[arg(long, default_value_t = 3)]
        strategies: usize,
        #[arg(long, default_value_t = 10)]
        max_length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        q: Option<String>,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Higher-order relations and the closed-form expansions.
    Relations {
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long)]
        q: Option<String>,
    },
    /// Membership of balanced elements in the nil span.
    Nil {
        #[arg(long, default_value_t = 3)]
        max: usize,
        /// Bound on i, j for the commutators of y^i x^i; defaults to max + 1.
        #[arg(long)]
        max_commutator: Option<usize>,
        /// Length bound for commutators of arbitrary balanced words.
        #[arg(long, default_value_t = 4)]
        max_balanced: usize,
        #[arg(long)]
        q: Option<String>,
    },
}

#[derive(Subcommand)]
enum Tdpair {
    /// Write a generator instance.
    Generate {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "2")]
        q: String,
        #[arg(long, default_value = "1")]
        a: String,
        #[arg(long, default_value = "1")]
        astar: String,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Full report for an instance file.
    Analyze { file: PathBuf },
    /// The spanning family built from a vector of U_0.
    Spanning {
        file: PathBuf,
        /// Use a pseudorandom nonzero vector of U_0.
        #[arg(long)]
        arbitrary_v: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Bijection,
    Filter,
}

fn load(path: &PathBuf) -> Result<TDPairInstance, CliError> {
    Ok(TDPairInstance::from_json(&std::fs::read_to_string(path)?)?)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Normalize { expr, q, expanded } => commands::normalize(expr, q.as_deref(), *expanded),
        Command::Verify { what } => match what {
            Verify::Relations { max_r, max_n, q } => commands::verify_relations(*max_r, *max_n, q.as_deref()),
            Verify::Nil {
                max,
                max_commutator,
                max_balanced,
                q,
            } => commands::verify_nil(*max, max_commutator.unwrap_or(max + 1), *max_balanced, q.as_deref()),
        },
        Command::Hilbert { max_degree } => commands::hilbert(*max_degree),
        Command::Enumerate { length, via } => commands::enumerate(
            *length,
            match via {
                Via::Bijection => Enumeration::Bijection,
                Via::Filter => Enumeration::Filter,
            },
        ),
        Command::Jacobi { max_degree } => commands::jacobi(*max_degree),
        Command::Confluence {
            trials,
            strategies,
            max_length,
            seed,
            q,
        } => commands::confluence(*trials, *strategies, *max_length, *seed, q.as_deref()),
        Command::Tdpair { what } => match what {
            Tdpair::Generate { d, q, a, astar, output } => {
                let inst = commands::tdpair_generate(*d, q, a, astar)?;
                let text = inst.to_json();
                if let Some(path) = output {
                    std::fs::write(path, format!("{text}\n"))?;
                }
                Ok(Report {
                    ok: true,
                    json: serde_json::from_str(&text).expect("instance JSON"),
                    text: if output.is_some() { String::new() } else { text },
                })
            }
            Tdpair::Analyze { file } => commands::tdpair_analyze(&load(file)?),
            Tdpair::Spanning {
                file,
                arbitrary_v,
                seed,
            } => commands::tdpair_spanning(&load(file)?, *arbitrary_v, *seed),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else if !report.text.is_empty() {
                println!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
