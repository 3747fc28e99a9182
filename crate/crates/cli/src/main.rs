use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tsvf_cli::{experiments, run_file, CliError, OutputFormat, Overrides};

#[derive(Parser)]
#[command(
    name = "tsvf",
    version,
    about = "Run two-boundary quantum experiments from scenario files"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the result here instead of the scenario's output path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Result encoding.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    /// Worker threads for Monte Carlo batches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Replace the scenario's seed.
    #[arg(long, global = true)]
    seed_override: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario file.
    Run { config: PathBuf },
    /// List the available experiments.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match cli.command {
        Command::List => {
            print!("{}", experiments::list_experiments());
            ExitCode::SUCCESS
        }
        Command::Run { config } => {
            let overrides = Overrides {
                out: cli.out,
                format: cli.format,
                seed: cli.seed_override,
            };
            match run_file(&config, &overrides) {
                Ok(Some(path)) => {
                    eprintln!("wrote {}", path.display());
                    ExitCode::SUCCESS
                }
                Ok(None) => ExitCode::SUCCESS,
                Err(e) => report(e),
            }
        }
    }
}

fn report(e: CliError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}
