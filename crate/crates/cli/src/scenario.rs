//! Scenario files: one TOML document per run.
//!
//! ```toml
//! experiment = "born_emergence"
//! seed = 42
//! samples = 10000
//!
//! [output]
//! path = "born.json"
//! format = "json"
//!
//! [params]
//! theta = [0.0, 1.5707963267948966]
//! ```
//!
//! Parsing is strict: unknown keys anywhere are rejected, and physical
//! parameters have no defaults.

use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    Abl,
    BornEmergence,
    CatWitness,
    Cpt,
    Dominance,
    Ellipsoid,
    Hbt,
    OverlapScaling,
    SternGerlach,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 9] = [
        ExperimentKind::Abl,
        ExperimentKind::BornEmergence,
        ExperimentKind::CatWitness,
        ExperimentKind::Cpt,
        ExperimentKind::Dominance,
        ExperimentKind::Ellipsoid,
        ExperimentKind::Hbt,
        ExperimentKind::OverlapScaling,
        ExperimentKind::SternGerlach,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::Abl => "abl",
            ExperimentKind::BornEmergence => "born_emergence",
            ExperimentKind::CatWitness => "cat_witness",
            ExperimentKind::Cpt => "cpt",
            ExperimentKind::Dominance => "dominance",
            ExperimentKind::Ellipsoid => "ellipsoid",
            ExperimentKind::Hbt => "hbt",
            ExperimentKind::OverlapScaling => "overlap_scaling",
            ExperimentKind::SternGerlach => "stern_gerlach",
        }
    }

    /// Experiments that always draw random numbers and therefore need a seed.
    pub fn is_stochastic(self) -> bool {
        matches!(
            self,
            ExperimentKind::BornEmergence
                | ExperimentKind::Dominance
                | ExperimentKind::OverlapScaling
        )
    }

    /// Experiments that take a sample (or trial) count.
    pub fn uses_samples(self) -> bool {
        matches!(
            self,
            ExperimentKind::BornEmergence | ExperimentKind::Dominance
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub path: Option<PathBuf>,
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub experiment: ExperimentKind,
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    pub output: Option<OutputSpec>,
    pub params: toml::Table,
}

impl ScenarioConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: ScenarioConfig =
            toml::from_str(text).map_err(|e| CliError::config(e.to_string()))?;
        cfg.validate(text)?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    fn validate(&self, text: &str) -> Result<()> {
        let kind = self.experiment;
        if kind.is_stochastic() && self.seed.is_none() {
            return Err(CliError::config(format!(
                "missing field `seed`: experiment `{}` is stochastic and requires a seed",
                kind.name()
            )));
        }
        match (kind.uses_samples(), self.samples) {
            (true, None) => {
                return Err(CliError::config(format!(
                    "missing field `samples`: experiment `{}` requires a sample count",
                    kind.name()
                )))
            }
            (true, Some(0)) => return Err(CliError::config("field `samples` must be at least 1")),
            (false, Some(_)) => {
                return Err(CliError::config(format!(
                    "field `samples` is not used by experiment `{}`",
                    kind.name()
                )))
            }
            _ => {}
        }
        // typed parse of the params block so schema errors surface before any run
        crate::experiments::check_params(self).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(match params_line(text) {
                Some(line) => format!("in [params] (line {line}): {msg}"),
                None => format!("in [params]: {msg}"),
            }),
            other => other,
        })
    }

    pub fn params<P: DeserializeOwned>(&self) -> Result<P> {
        toml::Value::Table(self.params.clone())
            .try_into()
            .map_err(|e: toml::de::Error| CliError::config(e.to_string()))
    }

    pub fn require_seed(&self) -> Result<u64> {
        self.seed
            .ok_or_else(|| CliError::config("missing field `seed`"))
    }
}

fn params_line(text: &str) -> Option<usize> {
    text.lines()
        .position(|l| l.trim() == "[params]")
        .map(|i| i + 1)
}

/// A scalar or an explicit list of sweep values.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T: Clone> OneOrMany<T> {
    pub fn values(&self) -> Vec<T> {
        match self {
            OneOrMany::One(x) => vec![x.clone()],
            OneOrMany::Many(xs) => xs.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_scenario() {
        let cfg = ScenarioConfig::parse(
            r#"
experiment = "hbt"
[params]
a13 = [1.0, 0.0]
a14 = [1.0, 0.0]
a23 = [1.0, 0.0]
a24 = [1.0, 0.0]
statistics = "boson"
"#,
        )
        .unwrap();
        assert_eq!(cfg.experiment, ExperimentKind::Hbt);
        assert!(cfg.seed.is_none());
    }

    #[test]
    fn unknown_top_level_key_rejected() {
        let err = ScenarioConfig::parse(
            "experiment = \"cpt\"\ncolour = 3\n[params]\na = [1.0, 0.0]\na_prime = [1.0, 0.0]\n",
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("colour"), "{err}");
    }

    #[test]
    fn unknown_param_rejected_with_line() {
        let err = ScenarioConfig::parse(
            "experiment = \"cpt\"\n\n[params]\na = [1.0, 0.0]\na_prime = [1.0, 0.0]\nepsilon = 1\n",
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("epsilon") && msg.contains("line 3"), "{msg}");
    }

    #[test]
    fn missing_seed_names_field() {
        let err = ScenarioConfig::parse(
            "experiment = \"dominance\"\nsamples = 10\n[params]\nh = 10.0\nk = 2\n",
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("`seed`"));
    }

    #[test]
    fn samples_rules() {
        let err = ScenarioConfig::parse(
            "experiment = \"born_emergence\"\nseed = 1\n[params]\ntheta = 0.0\n",
        )
        .unwrap_err();
        assert!(err.to_string().contains("`samples`"));
        let err = ScenarioConfig::parse(
            "experiment = \"cat_witness\"\nsamples = 3\n[params]\nc = [1.0, 0.0]\n",
        )
        .unwrap_err();
        assert!(err.to_string().contains("not used"));
    }

    #[test]
    fn syntax_error_reports_line() {
        let err = ScenarioConfig::parse("experiment = \"cpt\"\nseed = = 3\n").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn one_or_many() {
        #[derive(Deserialize)]
        struct P {
            x: OneOrMany<f64>,
            z: OneOrMany<[f64; 2]>,
        }
        let p: P = toml::from_str("x = 1.5\nz = [1.0, 2.0]").unwrap();
        assert_eq!(p.x.values(), vec![1.5]);
        assert_eq!(p.z.values(), vec![[1.0, 2.0]]);
        let p: P = toml::from_str("x = [1.0, 2.0]\nz = [[1.0, 2.0], [3.0, 4.0]]").unwrap();
        assert_eq!(p.x.values(), vec![1.0, 2.0]);
        assert_eq!(p.z.values().len(), 2);
    }
}
