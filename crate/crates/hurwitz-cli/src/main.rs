//! `hurwitz` — enumerate four-branch-point covers and compute their exact
//! invariants from the command line.
//!
//! Every rational quantity is printed as a string `p/q` in lowest terms (or
//! `n` when integral); identical invocations produce byte-identical output.

use clap::{Parser, Subcommand, ValueEnum};

mod output;
mod run;

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Exact invariants of degree-d covers of the line branched at four points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all cover classes of a ramification profile.
    Enumerate {
        /// Degree of the covers.
        #[arg(long)]
        degree: usize,
        /// Four cycle types separated by `|`, parts by `,`; parts of size 1
        /// may be omitted (e.g. "4|4|3,1|3,1" or "4|4|3|3" at degree 4).
        #[arg(long)]
        profile: String,
        #[arg(long, value_enum, default_value_t)]
        output: OutputFormat,
        /// Worker threads for the scan (defaults to sequential).
        #[arg(long)]
        parallel: Option<usize>,
        /// Maximum candidate pairs |c2|·|c3| the scan may visit.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decompose a profile's cover set into braid orbits.
    Orbits {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        profile: String,
        /// Only report the orbit containing this tuple (four permutations
        /// separated by `;`).
        #[arg(long)]
        seed: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        output: OutputFormat,
        #[arg(long)]
        parallel: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Slope report for one orbit (with --tuple) or a whole cover set.
    Slope {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        profile: String,
        /// Restrict to the orbit generated by this tuple.
        #[arg(long)]
        tuple: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        output: OutputFormat,
        #[arg(long)]
        parallel: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Degenerate one cover in one collision direction.
    Degenerate {
        #[arg(long)]
        degree: usize,
        /// Four permutations separated by `;`, e.g.
        /// "(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)".
        #[arg(long)]
        tuple: String,
        /// Which fixed branch point the moving one collides with.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        direction: u8,
        #[arg(long, value_enum, default_value_t)]
        output: OutputFormat,
    },
    /// Closed-form invariants of a cyclic cover y^d = Π (x - z_i)^{a_i}.
    Cyclic {
        /// Degree of the cyclic cover.
        #[arg(long)]
        d: usize,
        /// The four exponents, comma separated, e.g. "1,4,1,4".
        #[arg(long)]
        exponents: String,
        /// Also run the generic pipeline and compare every quantity.
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_enum, default_value_t)]
        output: OutputFormat,
    },
    /// Degree scan of a stratum of quadratic differentials.
    Stratum {
        /// Odd partition of 4g - 4 labelling the stratum, e.g. "1,3".
        #[arg(long)]
        nu: String,
        /// Even degrees to scan, comma separated, e.g. "8,10,12".
        #[arg(long = "d-values")]
        d_values: String,
        /// Maximum candidate pairs per row; larger rows are skipped.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        parallel: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        output: OutputFormat,
    },
    /// Virtual count of quadratic differentials with prescribed zero orders.
    Dejonquieres {
        #[arg(long)]
        genus: usize,
        /// Zero orders with repetition, comma separated, e.g. "1,3".
        #[arg(long)]
        zeros: String,
        #[arg(long, value_enum, default_value_t)]
        output: OutputFormat,
    },
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run::run(cli.command) {
        Ok(rendered) => {
            println!("{rendered}");
            std::process::ExitCode::SUCCESS
        }
        Err(run::CliError::Domain(message)) => {
            eprintln!("error: {message}");
            std::process::ExitCode::from(1)
        }
        Err(run::CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            std::process::ExitCode::from(2)
        }
    }
}
