use clap::{Args, Parser, Subcommand};
use ctxlab_cli::commands::{self, Flags, Which};
use ctxlab_cli::error::{input, CliResult};
use ctxlab_cli::report::{Format, Report};
use ctxlab_cli::scenario::ScenarioFile;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Contextuality of simplicial distributions with symmetry.
#[derive(Parser, Debug)]
#[command(name = "ctxlab", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Constraints {
    /// Restrict to maps and mixtures commuting with the action.
    #[arg(long)]
    equivariant: bool,
    /// Fix the labels of the relative edges.
    #[arg(long)]
    relative: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the scenario's distribution is contextual.
    Check {
        file: PathBuf,
        #[command(flatten)]
        constraints: Constraints,
        /// Decide through the Borel construction instead of the direct LP.
        #[arg(long)]
        via_borel: bool,
    },
    /// Compute an obstruction class with its class-zero verdict. `phi` uses
    /// the extension when the scenario has one, otherwise a trivialization
    /// of `gamma` on the space.
    Obstruction {
        file: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// List the deterministic distributions on the space.
    Enumerate {
        file: PathBuf,
        #[command(flatten)]
        constraints: Constraints,
    },
    /// The distribution a quantum state induces on the labelled edges.
    Born { file: PathBuf },
    /// Run the built-in example `torus`, `dihedral` or `mermin` and check its anchors.
    Example { name: String },
}

fn truncation() -> CliResult<usize> {
    match std::env::var("CTXLAB_TRUNCATION") {
        Err(_) => Ok(ctxlab::simplicial::DEFAULT_TRUNCATION),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if (2..=ctxlab::simplicial::MAX_TRUNCATION).contains(&n) => Ok(n),
            _ => Err(input(format!(
                "CTXLAB_TRUNCATION must be an integer in 2..={}, got {v:?}",
                ctxlab::simplicial::MAX_TRUNCATION
            ))),
        },
    }
}

fn run(command: &Command) -> CliResult<Report> {
    let trunc = truncation()?;
    let load = |f: &PathBuf| ScenarioFile::read(f)?.load(trunc);
    match command {
        Command::Check { file, constraints, via_borel } => {
            let flags =
                Flags { equivariant: constraints.equivariant, relative: constraints.relative, via_borel: *via_borel };
            commands::check(&load(file)?, flags)
        }
        Command::Obstruction { file, which } => commands::obstruction(&load(file)?, *which),
        Command::Enumerate { file, constraints } => {
            let flags =
                Flags { equivariant: constraints.equivariant, relative: constraints.relative, via_borel: false };
            commands::enumerate(&load(file)?, flags)
        }
        Command::Born { file } => commands::born(&load(file)?),
        Command::Example { name } => commands::example(name, trunc),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli.command);
    eprintln!("ctxlab: finished in {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
