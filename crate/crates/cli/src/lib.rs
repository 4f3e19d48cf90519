//! Command-line front end: input formats, reports and subcommand dispatch.

pub mod commands;
pub mod files;
pub mod report;

use clap::{Parser, Subcommand};

pub use commands::{run, CliError, Command, Input, Options};
pub use files::{parse_param_file, parse_symbol_file, render_param_file, render_symbol_file, FileError};
pub use report::{Outcome, Report};

#[derive(Debug, Parser)]
#[command(
    name = "eulersym",
    version,
    about = "Exact checks for symbol systems of symmetric forms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,

    /// Seed for every random sample.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Number of random trials.
    #[arg(long, global = true)]
    pub trials: Option<usize>,

    /// Degree for `implicitize`.
    #[arg(long, global = true)]
    pub degree: Option<usize>,

    /// Number of sample points for `implicitize`.
    #[arg(long, global = true)]
    pub samples: Option<usize>,

    /// File of rational points on the base locus, one per line.
    #[arg(long, global = true)]
    pub points: Option<std::path::PathBuf>,

    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Check the symbol-system axioms.
    Validate { file: std::path::PathBuf },
    /// Prolongation of every component.
    Prolong { file: std::path::PathBuf },
    /// Order and rank.
    Order { file: std::path::PathBuf },
    /// Base loci of the components and the saturated base-locus ideal.
    Baselocus { file: std::path::PathBuf },
    /// Saturation test for order-one systems.
    Saturated { file: std::path::PathBuf },
    /// Layout of the model variety and its ambient space.
    Model { file: std::path::PathBuf },
    /// Random checks of the group law, equivariance and Euler compatibility.
    ActCheck { file: std::path::PathBuf },
    /// Degrees of orbit closures through the base point.
    CurveDegrees { file: std::path::PathBuf },
    /// Equations of the model variety in a given degree.
    Implicitize { file: std::path::PathBuf },
    /// Fundamental forms of a parametrization (or of a model chart).
    Ff { file: std::path::PathBuf },
    /// Fundamental forms at random base points.
    Cartan { file: std::path::PathBuf },
    /// Every applicable check in one document.
    Report { file: std::path::PathBuf },
}

impl CliCommand {
    pub fn split(&self) -> (Command, &std::path::Path) {
        match self {
            CliCommand::Validate { file } => (Command::Validate, file),
            CliCommand::Prolong { file } => (Command::Prolong, file),
            CliCommand::Order { file } => (Command::Order, file),
            CliCommand::Baselocus { file } => (Command::BaseLocus, file),
            CliCommand::Saturated { file } => (Command::Saturated, file),
            CliCommand::Model { file } => (Command::Model, file),
            CliCommand::ActCheck { file } => (Command::ActCheck, file),
            CliCommand::CurveDegrees { file } => (Command::CurveDegrees, file),
            CliCommand::Implicitize { file } => (Command::Implicitize, file),
            CliCommand::Ff { file } => (Command::Ff, file),
            CliCommand::Cartan { file } => (Command::Cartan, file),
            CliCommand::Report { file } => (Command::Report, file),
        }
    }
}

/// Runs a parsed command line and returns `(exit code, stdout, stderr)`.
pub fn execute(cli: &Cli) -> (i32, String, String) {
    let (command, path) = cli.command.split();
    let display = path.display().to_string();
    let read = |p: &std::path::Path| std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()));
    let contents = match read(path) {
        Ok(c) => c,
        Err(e) => return (2, String::new(), format!("eulersym: {e}\n")),
    };
    let points = match &cli.points {
        Some(p) => match read(p) {
            Ok(c) => Some(c),
            Err(e) => return (2, String::new(), format!("eulersym: {e}\n")),
        },
        None => None,
    };
    let options = Options {
        seed: cli.seed,
        trials: cli.trials,
        degree: cli.degree,
        samples: cli.samples,
        points,
    };
    let name = path
        .file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or(display);
    match run(command, &name, &contents, &options) {
        Ok(report) => {
            let out = if cli.json { report.to_json() } else { report.to_text() };
            (if report.passed() { 0 } else { 1 }, out, String::new())
        }
        Err(e) => (e.exit_code(), String::new(), format!("eulersym: {name}: {e}\n")),
    }
}
