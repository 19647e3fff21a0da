//! `stretchlim` command-line front end.

mod commands;
mod config;
mod emit;

use clap::{Args, Parser, Subcommand};
use commands::{Common, SimOverrides};
use config::{CaseSelect, Format};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "stretchlim",
    version,
    about = "Stretch-limited elastic string solvers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// JSON run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output path prefix.
    #[arg(long)]
    output: Option<String>,
    /// Format of tabular outputs.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the stretch-tension law.
    Constitutive(CommonArgs),
    /// Solve a catenary.
    Catenary {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum)]
        case: Option<CaseSelect>,
    },
    /// Build a two-state shock motion.
    Shock {
        #[command(flatten)]
        common: CommonArgs,
        /// Also write the admissibility grid over (zeta, vplus).
        #[arg(long)]
        sweep: bool,
        /// Fail on inadmissible motions.
        #[arg(long)]
        strict_lax: bool,
    },
    /// Run the finite-volume solver on a shock motion.
    Simulate {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        ncells: Option<usize>,
        #[arg(long)]
        cfl: Option<f64>,
        #[arg(long)]
        t_end: Option<f64>,
        #[arg(long)]
        strict_lax: bool,
    },
}

fn init_logging() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("STRETCHLIM_LOG", "warn"))
        .format(|buf, record| {
            let line = serde_json::json!({
                "level": record.level().as_str().to_lowercase(),
                "kind": "log",
                "target": record.target(),
                "message": record.args().to_string(),
            });
            writeln!(buf, "{line}")
        })
        .init();
}

fn common(args: &CommonArgs) -> Common {
    Common {
        output: args.output.clone(),
        format: args.format,
    }
}

fn run(cli: Cli) -> Result<(), emit::CliError> {
    match cli.command {
        Command::Constitutive(args) => {
            commands::constitutive(config::load(&args.config)?, &common(&args))
        }
        Command::Catenary { common: args, case } => {
            commands::catenary(config::load(&args.config)?, case, &common(&args))
        }
        Command::Shock {
            common: args,
            sweep,
            strict_lax,
        } => commands::shock(
            config::load(&args.config)?,
            sweep,
            strict_lax,
            &common(&args),
        ),
        Command::Simulate {
            common: args,
            ncells,
            cfl,
            t_end,
            strict_lax,
        } => {
            let ov = SimOverrides {
                ncells,
                cfl,
                t_end,
                strict_lax,
            };
            commands::simulate(config::load(&args.config)?, &ov, &common(&args))
        }
    }
}

fn main() -> ExitCode {
    init_logging();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            emit::report(
                &emit::CliError::config(message.trim_end())
                    .with_details(serde_json::json!({ "kind": e.kind().to_string() })),
            );
            return ExitCode::from(emit::EXIT_CONFIG as u8);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            emit::report(&e);
            ExitCode::from(e.code as u8)
        }
    }
}
