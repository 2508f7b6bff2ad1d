//! Front end for `zetagraph`: argument parsing, input loading, output
//! formats and the embedded fixture suites.

pub mod commands;
pub mod expr;
pub mod fixtures;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::run;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 1;
    pub const STRUCTURE: i32 = 2;
    pub const MISMATCH: i32 = 3;
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    /// Not a cograph or not a kite graph.
    #[error("{0}")]
    Structure(String),
    /// A verification failed; the payload is the full report.
    #[error("verification failed")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => exit::INPUT,
            CliError::Structure(_) => exit::STRUCTURE,
            CliError::Mismatch(_) => exit::MISMATCH,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Pretty,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HyperRoute {
    Master,
    Recursive,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphRoute {
    /// Hypergraph model, then the weak-order sum.
    Model,
    /// Hadamard products and the join formula along the cotree.
    Join,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Cc,
    Minus,
    Hyper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Oracle,
    Cc,
    All,
}

/// Inputs are inline JSON (starting with `{`), `-` for stdin, `fixture:<id>`
/// where accepted, or a file path.
#[derive(Debug, Parser)]
#[command(
    name = "zetagraph",
    version,
    about = "Exact ask zeta functions of hypergraphs and cographs"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// W_H(X,T) of a hypergraph.
    HyperZeta {
        input: String,
        /// Dimension of an added socle.
        #[arg(long, default_value_t = 0)]
        socle: u32,
        #[arg(long, value_enum, default_value = "master")]
        route: HyperRoute,
    },
    /// W⁻ of a cograph.
    GraphZeta {
        input: String,
        #[arg(long, value_enum, default_value = "model")]
        route: GraphRoute,
    },
    /// Class-counting zeta function of a cograph.
    Cc { input: String },
    /// Incidence matrix of the hypergraph model of a cograph.
    Model { input: String },
    /// Cotree as an s-expression.
    Cotree { input: String },
    /// Composition of a kite graph.
    Kite { input: String },
    /// Leading T-coefficients.
    Series {
        input: String,
        #[arg(long, value_enum, default_value = "cc")]
        kind: SeriesKind,
        #[arg(long, default_value_t = 4)]
        terms: usize,
        /// Evaluate the coefficients at X = q.
        #[arg(long)]
        at_q: Option<u64>,
    },
    /// Compare against enumeration over Z/p^k or conjugacy class counts.
    Verify {
        input: String,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        kmax: u32,
        #[arg(long, value_enum, default_value = "oracle")]
        mode: VerifyMode,
    },
    /// Recheck the embedded fixture suites.
    Fixtures {
        /// table1, table2, table3, table4, eq or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Only list the records.
        #[arg(long)]
        list: bool,
    },
}
