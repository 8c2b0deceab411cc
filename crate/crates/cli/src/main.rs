//! Command-line front end: reads algebras, formulas, points and matrices
//! from plain-text files and prints deterministic reports.
//!
//! Exit status is 0 whenever the computation completes, whatever its
//! boolean outcome, 2 for unreadable or invalid input and 1 if an internal
//! consistency check fails.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "lgtypes",
    version,
    about = "Logical types over finite algebras and free algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Execution {
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Whether a point satisfies a formula.
    Eval {
        #[arg(long)]
        algebra: PathBuf,
        /// Formula document: `(sort x1 ...)` followed by the formula.
        #[arg(long)]
        formula: PathBuf,
        /// `x1=1 x2=3`, bare values for `x1 … xn`, or `@file`.
        #[arg(long)]
        point: String,
    },
    /// Compare the logical kernels of two points on all formulas within the bounds.
    LkerEq {
        #[arg(long)]
        algebra: PathBuf,
        /// Second algebra; defaults to the first.
        #[arg(long)]
        algebra2: Option<PathBuf>,
        #[arg(long)]
        point: String,
        #[arg(long)]
        point2: String,
        #[arg(long)]
        max_length: usize,
        #[arg(long)]
        max_term_depth: usize,
        /// Substitutions allowed in substitution nodes.
        #[arg(long)]
        pool: Option<PathBuf>,
        #[command(flatten)]
        exec: Execution,
    },
    /// Full type equality of two tuples of one finite algebra, decided by automorphism search.
    TypeEq {
        #[arg(long)]
        algebra: PathBuf,
        /// Space-separated elements, or `@file`.
        #[arg(long)]
        tuple: String,
        #[arg(long)]
        tuple2: String,
    },
    /// Ehrenfeucht–Fraïssé game with a fixed number of rounds.
    Ef {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        algebra2: Option<PathBuf>,
        #[arg(long)]
        tuple: String,
        #[arg(long)]
        tuple2: String,
        #[arg(long)]
        rounds: usize,
        #[command(flatten)]
        exec: Execution,
    },
    /// Translate a multi-sorted formula into a one-sorted first-order formula.
    Translate {
        #[arg(long)]
        formula: PathBuf,
    },
    /// Smith normal form `U·M·V = D` of an integer matrix.
    Snf {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Extend `a_i ↦ b_i` to an automorphism of `Zⁿ`.
    AbelianExtend {
        /// Vectors `a_i`, one per line.
        #[arg(long)]
        from: PathBuf,
        /// Vectors `b_i`, one per line.
        #[arg(long)]
        to: PathBuf,
        /// Ambient rank; required when both lists are empty.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Evaluate a formula of the `u` or `v` family on a tuple of `Zᵐ`.
    AbelianFormula {
        #[arg(long, value_enum)]
        kind: Family,
        /// Coefficients `q1 … qn`, or `@file`.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Coefficient of `y`, for the `v` family.
        #[arg(long, allow_hyphen_values = true)]
        q0: Option<String>,
        /// The tuple, one vector per line.
        #[arg(long)]
        tuple: PathBuf,
    },
    /// Extend `a_i ↦ b_i` to an automorphism of the free semigroup.
    SemigroupExtend {
        /// Alphabet size; defaults to the largest letter used.
        #[arg(long)]
        letters: Option<usize>,
        /// Comma-separated words such as `x1 x2, x2`, or `@file`.
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Replay the certificate that two elements of F2 lie in different automorphism orbits.
    F2Verify,
    /// List the formulas of a sort within the bounds, in enumeration order.
    Enumerate {
        /// Algebra supplying the signature.
        #[arg(long)]
        algebra: PathBuf,
        /// Variables of the sort, as in `x1 x2`.
        #[arg(long)]
        sort: String,
        #[arg(long)]
        max_length: usize,
        #[arg(long)]
        max_term_depth: usize,
        #[arg(long)]
        pool: Option<PathBuf>,
        /// Stop after this many formulas.
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    U,
    V,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
