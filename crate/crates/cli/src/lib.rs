//! Command dispatch and reports for the `homleib` binary.
//!
//! [`run`] is the whole program minus process plumbing: it takes the argument
//! vector and returns the exit code together with everything destined for
//! standard output, so tests can drive it in-process.

pub mod document;

mod battery;
mod commands;
mod report;

use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use homleib::catalog;

pub use document::{parse_document, read_document, AlgebraDocument, Document, DocumentError};
pub use commands::{homology_report, tensor_report};
pub use report::{Report, Status};

/// Prime used by `--field-check` to recompute over a finite field.
pub const CHECK_PRIME: u64 = 1_000_003;

#[derive(Debug, Parser)]
#[command(name = "homleib", version, about = "Exact computations with Hom-Leibniz and Hom-associative algebras")]
pub struct Cli {
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Recompute over GF(1000003) and compare every reported dimension.
    #[arg(long, global = true)]
    pub field_check: bool,
    /// Seed for randomized property batteries.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Highest homology degree to compute.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Coeffs {
    Trivial,
    Adjoint,
}

/// Inputs are document paths or `builtin:<name>` for the bundled examples.
#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check the axioms of an algebra or action document.
    Validate { input: String },
    /// Center, derived algebra, twist image and structural predicates.
    Info { input: String },
    /// Quotient by the ideal generated by squares.
    Lieize { input: String },
    /// Yau twist of an untwisted algebra along an endomorphism.
    Twist {
        input: String,
        /// Dense matrix of scalar strings, columns are images of the basis.
        #[arg(long)]
        endo: String,
    },
    /// Semidirect product built from an action document.
    Semidirect { input: String },
    /// Non-abelian tensor product: adjoint actions on one input, trivial actions on two.
    Tensor {
        input: String,
        second: Option<String>,
        /// Also run the full battery of properties of the maps to the factors.
        #[arg(long)]
        properties: bool,
    },
    /// Hom-Leibniz homology with trivial or adjoint coefficients.
    Homology {
        input: String,
        #[arg(long, value_enum, default_value = "trivial")]
        coeffs: Coeffs,
    },
    /// Universal central extension of a perfect algebra.
    Uce { input: String },
    /// Universal alpha-central extension of an alpha-perfect algebra.
    UceAlpha { input: String },
    /// Six-term homology sequence for an ideal.
    SixTerm {
        input: String,
        /// `0`, `all`, or comma-separated basis labels generating the ideal.
        #[arg(long)]
        ideal: String,
    },
    /// The Hom-Leibniz algebra built from a Hom-associative algebra.
    Hochschild { input: String },
    /// First Hochschild and Milnor-type homologies.
    Hh1 { input: String },
    /// Exactness certificate for the Hochschild comparison sequence.
    SequenceCheck { input: String },
    /// Property battery for one input (if given) and for random instances.
    CheckAll {
        input: Option<String>,
        /// Random instances per family.
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Info { .. } => "info",
            Command::Lieize { .. } => "lieize",
            Command::Twist { .. } => "twist",
            Command::Semidirect { .. } => "semidirect",
            Command::Tensor { .. } => "tensor",
            Command::Homology { .. } => "homology",
            Command::Uce { .. } => "uce",
            Command::UceAlpha { .. } => "uce-alpha",
            Command::SixTerm { .. } => "six-term",
            Command::Hochschild { .. } => "hochschild",
            Command::Hh1 { .. } => "hh1",
            Command::SequenceCheck { .. } => "sequence-check",
            Command::CheckAll { .. } => "check-all",
        }
    }

    fn inputs(&self) -> Vec<&str> {
        match self {
            Command::Tensor { input, second, .. } => std::iter::once(input.as_str()).chain(second.as_deref()).collect(),
            Command::CheckAll { input, .. } => input.as_deref().into_iter().collect(),
            Command::Validate { input }
            | Command::Info { input }
            | Command::Lieize { input }
            | Command::Twist { input, .. }
            | Command::Semidirect { input }
            | Command::Homology { input, .. }
            | Command::Uce { input }
            | Command::UceAlpha { input }
            | Command::SixTerm { input, .. }
            | Command::Hochschild { input }
            | Command::Hh1 { input }
            | Command::SequenceCheck { input } => vec![input.as_str()],
        }
    }
}

/// Why a command did not produce a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments or unreadable input: exit code 2.
    Usage(String),
    /// A hypothesis or axiom failed before a report could be built: exit code 1.
    Math { kind: String, message: String },
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<homleib::Error> for CliError {
    fn from(e: homleib::Error) -> Self {
        use homleib::Error as E;
        match e {
            E::Structure(_) | E::LinAlg(_) | E::Field(_) | E::ParentMismatch | E::BaseMismatch => {
                CliError::Usage(e.to_string())
            }
            other => {
                let debug = format!("{other:?}");
                let kind = debug.split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
                CliError::Math { kind, message: other.to_string() }
            }
        }
    }
}

/// Exit code and standard output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Settings shared by all commands.
#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub seed: u64,
    pub max_n: Option<usize>,
}

/// Loads a path or a `builtin:<name>` reference.
pub fn load_input(spec: &str) -> Result<Document, CliError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let f = homleib::FieldSpec::Rationals;
        if let Some(l) = catalog::by_name(name, f) {
            return Ok(Document::Algebra(AlgebraDocument::Leibniz(l)));
        }
        if let Some(a) = catalog::associative_by_name(name, f) {
            return Ok(Document::Algebra(AlgebraDocument::Associative(a)));
        }
        let known: Vec<&str> = catalog::NAMES.iter().chain(&catalog::ASSOCIATIVE_NAMES).copied().collect();
        return Err(CliError::Usage(format!("unknown builtin {name:?}; known: {}", known.join(", "))));
    }
    Ok(read_document(Path::new(spec))?)
}

/// Runs one command on already loaded documents.
pub fn execute(command: &Command, docs: &[Document], opts: Options) -> Result<Report, CliError> {
    let mut report = match command {
        Command::CheckAll { trials, .. } => battery::check_all(docs.first(), *trials, opts)?,
        _ => commands::dispatch(command, docs, opts)?,
    };
    report.command = command.name().to_string();
    Ok(report)
}

/// Re-runs the command with every input reduced modulo [`CHECK_PRIME`].
fn field_check(command: &Command, docs: &[Document], opts: Options, report: &mut Report) {
    if docs.is_empty() {
        report.note("field check: no input document, nothing to reduce");
        return;
    }
    let reduced: Result<Vec<Document>, String> = docs.iter().map(|d| document::reduce_mod(d, CHECK_PRIME)).collect();
    let outcome = match reduced {
        Err(e) => Err(e),
        Ok(rd) => match execute(command, &rd, opts) {
            Ok(r) => Ok(r.dims),
            Err(CliError::Usage(m)) => Err(m),
            Err(CliError::Math { kind, message }) => Err(format!("{kind}: {message}")),
        },
    };
    report.attach_field_check(CHECK_PRIME, outcome);
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return Outcome { code: e.exit_code(), stdout: e.render().to_string() },
    };
    let opts = Options { seed: cli.seed, max_n: cli.max_n };
    let docs: Result<Vec<Document>, CliError> = cli.command.inputs().into_iter().map(load_input).collect();
    let result = docs.and_then(|docs| {
        let mut report = execute(&cli.command, &docs, opts)?;
        if cli.field_check {
            field_check(&cli.command, &docs, opts, &mut report);
        }
        Ok(report)
    });
    match result {
        Ok(report) => Outcome { code: report.exit_code(), stdout: report.render(cli.json) },
        Err(CliError::Usage(message)) => {
            let report = Report::usage_error(cli.command.name(), &message);
            Outcome { code: 2, stdout: report.render(cli.json) }
        }
        Err(CliError::Math { kind, message }) => {
            let report = Report::math_error(cli.command.name(), &kind, &message);
            Outcome { code: 1, stdout: report.render(cli.json) }
        }
    }
}
