//! `kpieri`: command-line access to the caterpillar chain semigroups.
//!
//! Reports go to stdout (JSON by default), diagnostics to stderr. Exit
//! status is 0 on success, 1 on invalid input and 2 when a verification
//! finds a violation.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "kpieri", version, about = "Pieri and K-Pieri combinatorics of caterpillar chain semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format. CSV is available for `gens`, `relations` and `hilbert`.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub output: Format,

    /// Size guard on the number of objects a single enumeration may produce.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub max_objects: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenSet {
    #[value(name = "X")]
    X,
    #[value(name = "Y")]
    Y,
}

#[derive(Args, Debug)]
pub struct Shape {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub a: usize,
    #[arg(long)]
    pub b: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension of invariants, or of conformal blocks with `--level`.
    Dim {
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        s: Vec<u64>,
        #[arg(long)]
        level: Option<u64>,
        /// Also list the internal edge weights of every basis element.
        #[arg(long)]
        witnesses: bool,
    },
    /// Level-one generator tuples X (for P) or Y (for Q).
    Gens {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = GenSet::X)]
        set: GenSet,
    },
    /// Swap relations among the generators.
    Relations {
        #[command(flatten)]
        shape: Shape,
        /// Use X and P(a,b) instead of Y and Q(a,b).
        #[arg(long)]
        leveled: bool,
    },
    /// Generator decomposition of an interlacing pattern.
    Decompose {
        #[arg(long)]
        m: usize,
        /// Pattern as `top=3,3,1;bottom=3,2`.
        #[arg(long)]
        pattern: String,
        /// Read the pattern in dual orientation.
        #[arg(long)]
        dual: bool,
        /// Pad the decomposition with the identity up to this level.
        #[arg(long)]
        level: Option<u64>,
    },
    /// Generator tuple of a Weyl invariant.
    Weyl {
        #[command(flatten)]
        shape: Shape,
        /// `Δ_I` for a set of m legs among 1..=a.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["j_set", "pair"])]
        i_set: Option<Vec<usize>>,
        /// `Δ_J` for a set of m legs among 1..=b.
        #[arg(long, value_delimiter = ',', conflicts_with = "pair")]
        j_set: Option<Vec<usize>>,
        /// `P_ij` as `i,j`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        pair: Option<Vec<usize>>,
    },
    /// Connectivity of every swap fiber up to a degree bound.
    Markov {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        leveled: bool,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Gorenstein gluing condition and sampled interior test.
    Gorenstein {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        leveled: bool,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Dimensions of the level-graded pieces of P(a,b), levels 0..=K.
    Hilbert {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        level: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.body);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
