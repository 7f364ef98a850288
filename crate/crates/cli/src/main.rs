//! `latmult`: batch front end for the lattice-path multiplicity engine.

mod ascii;
mod commands;

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Outcome;

const GRAMMAR: &str = "\
Grammar:
  latmult count tableaux --ell L --max-height K [--per-shape]
  latmult count paths --ell L --k K --method brute|formula
  latmult count self-conjugate --ell L --k K --method brute|formula
  latmult count avoiders --ell L --k K --method brute|rsk|formula
  latmult count types --ell L --k K
  latmult mult --n N --k K --ell L
  latmult map tau [--k K] [--ascii]            < tableau.json
  latmult map sigma [--halves] [--ascii]       < sequence.json
  latmult verify --ell-max L --k-max K
  latmult perm lds|rsk WORD
Global options: --format json|tsv, --allow-large";

const AFTER_HELP: &str = "\
TSV columns:
  count tableaux --per-shape   lambda, f
  count types                  lambda, f, f_squared, brute_admissible, brute_self_conjugate
  verify                       check, ell, k, expected, observed, status, witness
Counts print as a bare number. Large values are decimal strings in JSON.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 resource guard (pass --allow-large or set LATMULT_GUARD_OVERRIDE=1).";

#[derive(Debug, Parser)]
#[command(name = "latmult", version, about = "Count and map admissible lattice path sequences, tableaux and avoiding permutations")]
#[command(after_help = AFTER_HELP)]
struct Cli {
    /// Output format. Defaults to json for `mult` and `map`, tsv elsewhere.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Lift the size guards on exhaustive computations.
    #[arg(long, global = true)]
    allow_large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count tableaux, admissible sequences or avoiding permutations.
    #[command(subcommand)]
    Count(CountCommand),
    /// Multiplicity of kΛ₀ − γ_ℓ in V(kΛ₀) for affine sl(n).
    Mult {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Apply tau or sigma to JSON read from standard input.
    #[command(subcommand)]
    Map(MapCommand),
    /// Cross-check every identity and bijection over a grid of (ell, k).
    Verify {
        #[arg(long)]
        ell_max: usize,
        #[arg(long)]
        k_max: usize,
    },
    /// Decreasing subsequences and RSK of a permutation.
    #[command(subcommand)]
    Perm(PermCommand),
}

#[derive(Debug, Args)]
pub struct Grid {
    #[arg(long)]
    pub ell: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PathMethod {
    Brute,
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AvoidMethod {
    Brute,
    Rsk,
    Formula,
}

#[derive(Debug, Subcommand)]
pub enum CountCommand {
    /// Σ f^λ over partitions of ell with at most max-height rows.
    Tableaux {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        max_height: usize,
        /// One TSV row (lambda, f) per shape.
        #[arg(long)]
        per_shape: bool,
    },
    /// Admissible sequences of k−1 paths on the ell×ell square.
    Paths {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum)]
        method: PathMethod,
    },
    /// Self-conjugate admissible sequences.
    SelfConjugate {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum)]
        method: PathMethod,
    },
    /// Permutations of 1..=ell with no decreasing subsequence longer than k.
    Avoiders {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum)]
        method: AvoidMethod,
    },
    /// Per-type brute counts next to f^λ and (f^λ)².
    Types {
        #[command(flatten)]
        grid: Grid,
    },
}

#[derive(Debug, Subcommand)]
pub enum MapCommand {
    /// Tableau rows, e.g. [[1,3],[2,6],[4],[5]], to a self-conjugate sequence.
    Tau {
        /// Number of bands; defaults to max(2, height).
        #[arg(long)]
        k: Option<usize>,
        /// Draw the band of every box instead of printing JSON.
        #[arg(long)]
        ascii: bool,
    },
    /// A self-conjugate sequence, as {"ell","k","paths"} or an array of
    /// full paths, to tableau rows.
    Sigma {
        /// Read an array of first halves (ell moves each) instead.
        #[arg(long)]
        halves: bool,
        /// Draw the band of every box before printing the tableau.
        #[arg(long)]
        ascii: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum PermCommand {
    /// Length of the longest decreasing subsequence.
    Lds {
        /// One-line word such as 26873415, or a JSON array.
        word: String,
    },
    /// Insertion and recording tableaux.
    Rsk { word: String },
}

fn guard_override() -> bool {
    std::env::var("LATMULT_GUARD_OVERRIDE").is_ok_and(|v| !v.is_empty() && v != "0")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            eprintln!("\n{GRAMMAR}");
            return ExitCode::from(2);
        }
    };
    let limits = if cli.allow_large || guard_override() {
        latmult_core::Limits::unbounded()
    } else {
        latmult_core::Limits::default()
    };
    let result = match cli.command {
        Command::Count(c) => commands::count(c, cli.format, &limits),
        Command::Mult { n, k, ell } => commands::mult(n, k, ell, cli.format),
        Command::Map(m) => {
            let mut input = String::new();
            match io::stdin().read_to_string(&mut input) {
                Ok(_) => commands::map(m, &input, cli.format),
                Err(e) => Err(commands::Failure::Input(format!("cannot read standard input: {e}"))),
            }
        }
        Command::Verify { ell_max, k_max } => commands::verify(ell_max, k_max, cli.format, &limits),
        Command::Perm(p) => commands::perm(p, cli.format),
    };
    match result {
        Ok(Outcome { text, success }) => {
            let mut out = io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("latmult: {f}");
            ExitCode::from(f.code())
        }
    }
}
