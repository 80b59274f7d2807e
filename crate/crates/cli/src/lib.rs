//! Batch front end: reads documents in the text format, runs one computation
//! and reports the outcome through the exit code and two output streams.
//!
//! Exit codes: `0` every check passed, `1` some check failed, `2` a cap was
//! reached or a hypothesis is not met, `3` usage, parse or validation error.

mod commands;
pub mod format;
mod input;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use quivhom_core::Error;

use format::FormatError;
use report::{Format, Report, Verdict};

pub use commands::witness_file;

#[derive(Parser, Debug)]
#[command(name = "quivhom", version, about = "Exact homological algebra of quiver representations")]
pub struct Cli {
    /// Ground field: `q` for the rationals (the default) or `fp:P` for a prime P.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub report: Format,
    /// Largest projective dimension explored before giving up.
    #[arg(long, global = true, default_value_t = 20)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

/// Which objects of the input files a command works on.
#[derive(Args, Debug, Clone, Default)]
pub struct Select {
    /// File defining the quiver (its only quiver, or the one named by `--quiver-name`).
    #[arg(long)]
    pub quiver: Option<PathBuf>,
    #[arg(long)]
    pub quiver_name: Option<String>,
    /// File defining the base algebra; the ground field when omitted.
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    #[arg(long)]
    pub algebra_name: Option<String>,
    /// File defining a triangular matrix ring.
    #[arg(long)]
    pub trimat: Option<PathBuf>,
    #[arg(long)]
    pub trimat_name: Option<String>,
    /// Further files with modules, representations, triples or complexes.
    #[arg(long)]
    pub input: Vec<PathBuf>,
    /// Restricts a command to the named objects; for `repdim-bound` these are
    /// the summands of the generator-cogenerator.
    #[arg(long = "object", visible_alias = "gencogen", value_delimiter = ',')]
    pub objects: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Global dimension of a bound quiver algebra.
    Gldim(Select),
    /// Global dimension of representations of a quiver over a base algebra.
    PathalgGldim(Select),
    /// Global dimension of a triangular matrix ring with its two-sided estimate.
    TrimatGldim(Select),
    /// Checks one of the structural results on concrete input.
    Check {
        #[command(subcommand)]
        which: CheckCommand,
    },
    /// Runs the representation dimension bound for representations over a base algebra.
    RepdimBound {
        #[command(flatten)]
        select: Select,
        /// Expected global dimension of `End A`, compared with the computed one.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Builds and verifies a generation witness for a bounded complex.
    DerivedWitness {
        #[command(flatten)]
        select: Select,
        /// File with the complex (its only complex, or the one named by `--complex-name`).
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        complex_name: Option<String>,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Writes a self-contained witness file for `verify-witness`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verifies a witness file written by `derived-witness --out`.
    VerifyWitness {
        #[arg(long)]
        witness: PathBuf,
        /// Depth bound; defaults to the one recorded in the file.
        #[arg(long)]
        depth: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Representation pd is at most the largest vertex pd plus one.
    Lemma31(Select),
    /// Global dimension of representations is at most that of the base plus one.
    Cor32(Select),
    /// Triple pd is at most `n + 1` when `M` is a projective `S`-module.
    Lemma34(Select),
    /// Lower and upper estimates for the global dimension of a triangular ring.
    Lemma35(Select),
    /// Endomorphism ring of the induced representations against the path ring over `End A`.
    Lemma36(Select),
    /// Hom from coinduced at sinks to induced at non-sinks vanishes.
    Lemma37(Select),
    /// Projectivity criterion for triples against the lifting test.
    Projmods(Select),
    /// Some orientation of D4 gives a non-projective Hom over End.
    Remark39,
}

/// Everything that stops a command before it produces a report.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{file}: {source}")]
    Format { file: String, source: FormatError },
    #[error("{0}")]
    Core(#[from] Error),
}

impl CliError {
    /// Failed certificates are a FAIL, unmet hypotheses INCONCLUSIVE, bad input a usage error.
    fn verdict(&self) -> Option<Verdict> {
        match self {
            CliError::Core(
                Error::IsoCheckFailed(_)
                | Error::CompositionInconsistent(_)
                | Error::CertificateBrokenByFunctor(_)
                | Error::TensorNotExactOnCertificates(_),
            ) => Some(Verdict::Fail),
            CliError::Core(
                Error::HypothesisViolated(_) | Error::NotSplit(_) | Error::NotSemisimple | Error::NotGenCogen(_),
            ) => Some(Verdict::Inconclusive),
            _ => None,
        }
    }
}

fn command_name(cmd: &Command) -> String {
    match cmd {
        Command::Gldim(_) => "gldim".into(),
        Command::PathalgGldim(_) => "pathalg-gldim".into(),
        Command::TrimatGldim(_) => "trimat-gldim".into(),
        Command::Check { which } => {
            let w = match which {
                CheckCommand::Lemma31(_) => "lemma31",
                CheckCommand::Cor32(_) => "cor32",
                CheckCommand::Lemma34(_) => "lemma34",
                CheckCommand::Lemma35(_) => "lemma35",
                CheckCommand::Lemma36(_) => "lemma36",
                CheckCommand::Lemma37(_) => "lemma37",
                CheckCommand::Projmods(_) => "projmods",
                CheckCommand::Remark39 => "remark39",
            };
            format!("check {w}")
        }
        Command::RepdimBound { .. } => "repdim-bound".into(),
        Command::DerivedWitness { .. } => "derived-witness".into(),
        Command::VerifyWitness { .. } => "verify-witness".into(),
    }
}

/// Runs the command line `argv` (program name first) against the given streams.
pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let name = command_name(&cli.command);
    let report = match commands::dispatch(&cli) {
        Ok(r) => r,
        Err(e) => match e.verdict() {
            Some(v) => {
                let mut r = Report::new(&name);
                r.field("error", e.to_string());
                r.say(format!("{name}: {e}"));
                r.verdict = Some(v);
                r
            }
            None => {
                let _ = writeln!(err, "quivhom {name}: {e}");
                return 3;
            }
        },
    };
    if report.emit(cli.report, out, err).is_err() {
        return 3;
    }
    report.verdict().exit_code()
}

/// Runs against the process's stdout and stderr.
pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run_with(argv, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    code
}
