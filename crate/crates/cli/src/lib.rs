//! The `torq` command-line front end: problem files in, JSON reports out.

pub mod problem;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use report::{Report, SCHEMA_VERSION};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] torq_core::Error),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Core(e) if e.is_budget() => 3,
            CliError::Core(
                torq_core::Error::NotAnEquivalenceRelation(_)
                | torq_core::Error::InternalInvariantViolated(_)
                | torq_core::Error::NotDifferenceGenerated
                | torq_core::Error::BinomialityViolated
                | torq_core::Error::NotACocycle,
            ) => 1,
            CliError::Core(_) => 2,
        }
    }

    pub fn kind(&self) -> String {
        match self {
            CliError::Input(_) => "InvalidInput".into(),
            CliError::Io(_) => "Io".into(),
            CliError::Core(e) => e.kind().into(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "torq", version, about = "Toric equivalence relations: axioms, effectivization, quotients")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print a human-readable transcript to stderr.
    #[arg(long, global = true)]
    pub verbose: bool,
    /// Override the coefficient field: Q or Fp:P.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Maximum S-polynomial degree in Gröbner computations.
    #[arg(long = "budget-gb", global = true)]
    pub budget_gb: Option<u64>,
    /// Maximum number of classes visited in a tensor fiber.
    #[arg(long = "budget-fiber", global = true)]
    pub budget_fiber: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check reflexivity, symmetry, transitivity and finiteness.
    Verify { file: PathBuf },
    /// Rewrite the ideal as a difference ideal x^w − y^w.
    Effectivize { file: PathBuf },
    /// Decide whether an effective geometric quotient exists.
    Quotient {
        file: PathBuf,
        /// Height bound for the invariant monoid.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Cohomology of the Amitsur complex of the hom block.
    Amitsur {
        file: PathBuf,
        /// Highest cochain level n_max.
        #[arg(long, default_value_t = 3)]
        levels: usize,
        /// Degrees: `a..b` or `a,b,c` in rank 1, `x1,x2;y1,y2` otherwise. Defaults to heights ≤ 4.
        #[arg(long)]
        degrees: Option<String>,
    },
    /// Prove an ideal element is not generated by differences of invariants.
    CertifyNoneffective {
        file: PathBuf,
        /// Index of the ideal generator to certify.
        #[arg(long)]
        element: usize,
        /// Total degree of that element.
        #[arg(long)]
        bound: i64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Effectivize { .. } => "effectivize",
            Command::Quotient { .. } => "quotient",
            Command::Amitsur { .. } => "amitsur",
            Command::CertifyNoneffective { .. } => "certify-noneffective",
        }
    }

    pub fn file(&self) -> &PathBuf {
        match self {
            Command::Verify { file }
            | Command::Effectivize { file }
            | Command::Quotient { file, .. }
            | Command::Amitsur { file, .. }
            | Command::CertifyNoneffective { file, .. } => file,
        }
    }
}

/// Runs one command and returns the exit code together with the report.
pub fn run(cli: &Cli) -> (i32, Report) {
    let mut rep = Report::new(cli.command.name(), cli.command.file());
    let code = match report::execute(cli, &mut rep) {
        Ok(code) => code,
        Err(e) => {
            rep.fail(&e);
            e.exit_code()
        }
    };
    rep.finish(code);
    (code, rep)
}
