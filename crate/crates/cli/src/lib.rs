//! Batch front end for the two-boundary experiments: strict TOML scenarios in,
//! JSON or CSV result records out.

pub mod error;
pub mod experiments;
pub mod output;
pub mod scenario;

use std::path::{Path, PathBuf};
use std::time::Instant;

pub use error::{CliError, Result};
pub use output::ResultRecord;
pub use scenario::{ExperimentKind, OutputFormat, ScenarioConfig};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Command-line settings that take precedence over the scenario file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub out: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub seed: Option<u64>,
}

/// Runs a parsed scenario and assembles its result record.
pub fn run_scenario(mut cfg: ScenarioConfig, overrides: &Overrides) -> Result<ResultRecord> {
    if let Some(seed) = overrides.seed {
        cfg.seed = Some(seed);
    }
    let scenario = serde_json::to_value(&cfg).map_err(|e| CliError::Output(e.to_string()))?;
    let start = Instant::now();
    let outcome = experiments::run_experiment(&cfg)?;
    Ok(ResultRecord {
        experiment: cfg.experiment.name().to_string(),
        scenario,
        runs: outcome.runs,
        notes: outcome.notes,
        seed: cfg.seed,
        version: VERSION.to_string(),
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

/// Where and how a record is written. Without a path the record goes to
/// standard output.
pub fn resolve_output(
    cfg: &ScenarioConfig,
    overrides: &Overrides,
) -> (Option<PathBuf>, OutputFormat) {
    let spec = cfg.output.as_ref();
    let path = overrides
        .out
        .clone()
        .or_else(|| spec.and_then(|o| o.path.clone()));
    let format = overrides
        .format
        .or_else(|| spec.and_then(|o| o.format))
        .or_else(|| {
            path.as_ref()
                .and_then(|p| match p.extension().and_then(|e| e.to_str()) {
                    Some("csv") => Some(OutputFormat::Csv),
                    _ => None,
                })
        })
        .unwrap_or(OutputFormat::Json);
    (path, format)
}

pub fn render(record: &ResultRecord, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => record.to_json_string(),
        OutputFormat::Csv => record.to_csv_string(),
    }
}

/// Loads, runs and writes one scenario. Relative output paths in the
/// scenario file resolve against the file's directory.
pub fn run_file(config_path: &Path, overrides: &Overrides) -> Result<Option<PathBuf>> {
    let cfg = ScenarioConfig::load(config_path)?;
    let (path, format) = resolve_output(&cfg, overrides);
    let path = match (path, &overrides.out) {
        (Some(p), None) if p.is_relative() => {
            Some(config_path.parent().map(|d| d.join(&p)).unwrap_or(p))
        }
        (p, _) => p,
    };
    let record = run_scenario(cfg, overrides)?;
    let text = render(&record, format)?;
    match &path {
        Some(p) => {
            let io_err = |source| CliError::Io {
                path: p.display().to_string(),
                source,
            };
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(io_err)?;
            }
            std::fs::write(p, text).map_err(io_err)?
        }
        None => print!("{text}"),
    }
    Ok(path)
}
