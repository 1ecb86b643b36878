//! Command-line front end: configuration, presets and file output.

// `!(x > 0.0)` is how NaN gets rejected along with the rest.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod presets;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use log::info;

pub use config::{parse_config, RunConfig};
pub use error::{CliError, CliResult};
pub use presets::Preset;

#[derive(Debug, Parser)]
#[command(
    name = "vortexpaths",
    version,
    about = "Particle paths under linear waves with constant vorticity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct CommonArgs {
    /// JSON configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Published parameter set; replaces the configuration.
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Prefix for the output files.
    #[arg(long)]
    pub out: Option<String>,
    /// Also draw the trajectory as SVG.
    #[arg(long)]
    pub svg: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print c, A, B and C.
    Speed(CommonArgs),
    /// Velocity, pressure and elevation on a grid.
    Field(CommonArgs),
    /// One particle path.
    Trajectory(CommonArgs),
    /// Roots of the stagnation equation.
    Stagnation(CommonArgs),
    /// Run a published parameter set end to end.
    Reproduce(CommonArgs),
}

fn load(args: &CommonArgs) -> CliResult<RunConfig> {
    match (&args.preset, &args.config) {
        (Some(p), _) => {
            if args.config.is_some() {
                log::warn!("--preset {} replaces the configuration file", p.name());
            }
            p.config().resolve()
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            parse_config(&text)
        }
        (None, None) => Err(CliError::Validation(
            "give --config <file> or --preset <name>".into(),
        )),
    }
}

/// Executes one subcommand; returns what should go to standard output.
pub fn run(command: &Command) -> CliResult<String> {
    let args = match command {
        Command::Speed(a)
        | Command::Field(a)
        | Command::Trajectory(a)
        | Command::Stagnation(a)
        | Command::Reproduce(a) => a,
    };
    let cfg = load(args)?;
    let prefix = args.out.clone().unwrap_or_else(|| cfg.output.clone());
    let listing = |paths: Vec<PathBuf>| {
        paths
            .iter()
            .map(|p| format!("wrote {}\n", p.display()))
            .collect::<String>()
    };
    match command {
        Command::Speed(_) => commands::speed(&cfg),
        Command::Field(_) => Ok(listing(vec![commands::field(&cfg, &prefix)?])),
        Command::Trajectory(_) => Ok(listing(commands::trajectory(
            &cfg,
            &prefix,
            args.svg || cfg.emit_svg,
        )?)),
        Command::Stagnation(_) => Ok(listing(vec![commands::stagnation(&cfg, &prefix)?])),
        Command::Reproduce(_) => {
            let preset = args
                .preset
                .ok_or_else(|| CliError::Validation("reproduce needs --preset".into()))?;
            let (paths, all_pass) = commands::reproduce(&cfg, preset, &prefix)?;
            info!(
                "{} reproduced: {}",
                preset.name(),
                if all_pass {
                    "all values match"
                } else {
                    "mismatches found"
                }
            );
            let verdict = if all_pass {
                "all published values reproduced"
            } else {
                "some published values differ"
            };
            Ok(format!("{}{verdict}\n", listing(paths)))
        }
    }
}
