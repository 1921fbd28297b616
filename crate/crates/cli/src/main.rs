//! `liekit`: command-line access to the liekit library.
//!
//! Matrices are given inline as JSON, as `@path`, or as `-` for stdin.
//! Results go to stdout as JSON (or plain text for `dim`). Failures exit
//! with status 1 and print `{"error": kind, "detail": text}` to stderr;
//! usage errors exit with status 2.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "liekit", version, about = "Matrix Lie groups, Lie algebras and their representations")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Absolute and relative tolerance (overrides LIEKIT_TOL)
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Absolute tolerance only
    #[arg(long, global = true)]
    pub tol_abs: Option<f64>,
    /// Relative tolerance only
    #[arg(long, global = true)]
    pub tol_rel: Option<f64>,
    /// Indent JSON output
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Matrix exponential
    Exp { x: String },
    /// Matrix logarithm (requires |A - I| < 1)
    Log { a: String },
    /// Exact logarithm of a unipotent Heisenberg matrix
    Heislog { a: String },
    /// Test membership in a group such as "SO(3)" or "Sp(2,R)"
    Member { group: String, a: String },
    /// Test membership in a Lie algebra such as "su(2)" or "heis"
    Algebra { algebra: String, x: String },
    /// Commutator XY - YX
    Bracket { x: String, y: String },
    /// Matrix of ad X in a named basis
    Ad {
        #[arg(long)]
        basis: BasisName,
        x: String,
    },
    /// Structure constants c[i][j][k] of a named basis
    Structconst {
        #[arg(long)]
        basis: BasisName,
    },
    /// log(e^X e^Y)
    Bch {
        #[arg(long, value_enum)]
        form: BchForm,
        /// Series order, 1 to 3
        #[arg(long, default_value_t = 3)]
        order: u32,
        /// Simpson panels for the integral form
        #[arg(long, default_value_t = 64)]
        panels: usize,
        /// Terms of the g series for the integral form
        #[arg(long, default_value_t = 30)]
        terms: usize,
        x: String,
        y: String,
    },
    /// The double cover SU(2) -> SO(3)
    Su2so3 {
        #[arg(value_enum)]
        direction: Direction,
        m: String,
    },
    /// Build a representation
    Rep {
        #[command(subcommand)]
        which: RepCommand,
    },
    /// Decompose a representation into irreducibles
    Decompose {
        #[command(subcommand)]
        which: DecomposeCommand,
    },
    /// Clebsch-Gordan series of V_m (x) V_n for sl(2,C)
    Cg { m: u32, n: u32 },
    /// Dimension of an irreducible representation
    Dim {
        #[command(subcommand)]
        which: DimCommand,
    },
    /// Polar decomposition A = RH of a real matrix with determinant one
    Polar { a: String },
}

#[derive(Subcommand, Debug)]
pub enum RepCommand {
    /// Irreducible representation V_m of sl(2,C)
    Sl2 {
        m: u32,
        #[arg(long, value_enum, default_value_t = Model::Abstract)]
        model: Model,
    },
    /// Irreducible representation of sl(3,C) with highest weight (m1, m2)
    Sl3 {
        m1: u32,
        m2: u32,
        /// Write the weight table as CSV here ("-" prints it instead of the JSON)
        #[arg(long)]
        weights_csv: Option<String>,
        /// Largest m1 + m2 accepted
        #[arg(long, default_value_t = liekit::repsl3::DEFAULT_CAP)]
        cap: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum DecomposeCommand {
    /// Highest weights of the summands of an exact sl(2,C) representation
    Sl2 { rep: String },
}

#[derive(Subcommand, Debug)]
pub enum DimCommand {
    Sl3 { m1: u32, m2: u32 },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum BasisName {
    Su2,
    So3,
    Sl2,
    Sl3,
    Heis,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum BchForm {
    Heis,
    Series,
    Integral,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Direction {
    Fwd,
    Lift,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Abstract,
    Poly,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(1)
        }
    }
}
