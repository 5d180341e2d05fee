//! Command-line front end for the `chowcalc` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::render::parse_coefficients;
use crate::report::{invert_milnor_inline, run_command, Command, Format};
use crate::scenario::parse_scenario;
use crate::verify::verify_golden_items;

#[derive(Debug, Parser)]
#[command(name = "chowcalc", version, about = "Exact characteristic classes of singular hypersurfaces and complete intersections in P^n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Machine,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Machine => Format::Machine,
        }
    }
}

#[derive(Debug, Args)]
pub struct ScenarioArgs {
    /// Scenario file (TOML)
    #[arg(long)]
    pub scenario: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["scenario", "class"]))]
pub struct InvertArgs {
    /// Hypersurface scenario whose Milnor class is inverted
    #[arg(long)]
    pub scenario: Option<PathBuf>,
    /// Milnor class as comma-separated rationals by codimension
    #[arg(long, allow_hyphen_values = true, requires_all = ["degree", "dim"])]
    pub class: Option<String>,
    /// Degree of the hypersurface
    #[arg(long)]
    pub degree: Option<u32>,
    /// Dimension of the ambient projective space
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Segre class of X in P^n
    Segre(ScenarioArgs),
    /// Fulton class of X
    Fulton(ScenarioArgs),
    /// Chern-Schwartz-MacPherson class (and SM-Segre class) of X
    Csm(ScenarioArgs),
    /// Milnor class of X
    Milnor(ScenarioArgs),
    /// Topological Euler characteristic of X
    Euler(ScenarioArgs),
    /// Recover the Segre class of the singular scheme from a Milnor class
    InvertMilnor(InvertArgs),
    /// Evaluate the calculus identities on the scenario's data
    CheckIdentities(ScenarioArgs),
    /// Run the built-in golden checks
    VerifyPaper,
}

/// Executes a parsed command line; returns the text to print and the exit
/// status. Errors map to exit status 1.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let (command, args) = match &cli.command {
        CliCommand::VerifyPaper => {
            let report = verify_golden_items();
            let code = if report.all_passed() { 0 } else { 1 };
            return Ok((report.render(), code));
        }
        CliCommand::InvertMilnor(args) => return invert(args),
        CliCommand::Segre(a) => (Command::Segre, a),
        CliCommand::Fulton(a) => (Command::Fulton, a),
        CliCommand::Csm(a) => (Command::Csm, a),
        CliCommand::Milnor(a) => (Command::Milnor, a),
        CliCommand::Euler(a) => (Command::Euler, a),
        CliCommand::CheckIdentities(a) => (Command::CheckIdentities, a),
    };
    let scenario = parse_scenario(&args.scenario)?;
    let report = run_command(command, &scenario)?;
    let code = if report.all_flags_hold() { 0 } else { 1 };
    Ok((report.render(args.format.into()), code))
}

fn invert(args: &InvertArgs) -> Result<(String, i32)> {
    let report = match (&args.scenario, &args.class) {
        (Some(path), None) => run_command(Command::InvertMilnor, &parse_scenario(path)?)?,
        (None, Some(csv)) => {
            let (Some(degree), Some(dim)) = (args.degree, args.dim) else {
                return Err(Error::MissingData("--degree and --dim".into()));
            };
            invert_milnor_inline(&parse_coefficients(csv, dim)?, degree)?
        }
        _ => {
            return Err(Error::Unsupported(
                "give either --scenario or --class, not both".into(),
            ))
        }
    };
    Ok((report.render(args.format.into()), 0))
}
