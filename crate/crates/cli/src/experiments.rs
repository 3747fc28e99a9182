//! Experiment catalogue: typed parameter blocks and the glue from a parsed
//! scenario to library calls.

use serde::Deserialize;
use tsvf_core::bidirectional::{
    born_emergence_experiment, cpt_asymmetry, dominance_experiment, CptAmplitudePair,
    DominanceModel,
};
use tsvf_core::decision_tree::{
    enumerate_histories_capped, overlap_scaling_experiment, DecisionRun,
};
use tsvf_core::gedanken::{
    cat_witness_coherence, ellipsoid_experiment, hbt_rate, stern_gerlach_with_witness, DarkArc,
    EllipsoidConfig, HbtConfig, Statistics, WitnessConfig,
};
use tsvf_core::two_boundary::DEFAULT_HISTORY_CAP;
use tsvf_core::{
    FinalBoundary, MeasurementEvent, Operator, Schedule, SeededRng, StateVector, Step,
    TwoBoundaryProcess, Unitary, C64,
};

use crate::error::{CliError, Result};
use crate::fields;
use crate::output::{Run, Table, Value};
use crate::scenario::{ExperimentKind, OneOrMany, ScenarioConfig};

pub struct ExperimentInfo {
    pub kind: ExperimentKind,
    pub required: &'static str,
    pub description: &'static str,
    pub anchor: &'static str,
}

/// Alphabetical by name.
pub fn catalogue() -> Vec<ExperimentInfo> {
    use ExperimentKind as K;
    let mut all = vec![
        ExperimentInfo {
            kind: K::Abl,
            required: "dim, initial, final, steps",
            description: "enumerate all histories of a pre/post-selected schedule with ABL probabilities",
            anchor: "two-boundary measurement ratio <initial|U1 P U2|final>",
        },
        ExperimentInfo {
            kind: K::BornEmergence,
            required: "seed, samples, theta",
            description: "frequency of the dominant matched history vs cos^2(theta/2)",
            anchor: "P(sideward->upward) = |<sideward|upward>|^2",
        },
        ExperimentInfo {
            kind: K::CatWitness,
            required: "c",
            description: "cat coherence after tracing out a witness with overlap c",
            anchor: "coexistence of live and dead cat",
        },
        ExperimentInfo {
            kind: K::Cpt,
            required: "a, a_prime",
            description: "CPT asymmetry |conj(a) a' - a conj(a')| of two boundary amplitudes",
            anchor: "Amplitude^CPT * Amplitude' != Amplitude * Amplitude'^CPT",
        },
        ExperimentInfo {
            kind: K::Dominance,
            required: "seed, samples, h, k",
            description: "fraction of trials where one matched history outweighs the next by 100x",
            anchor: "statistical spread sqrt(huge) of 10^-huge weights",
        },
        ExperimentInfo {
            kind: K::Ellipsoid,
            required: "semi_major, semi_minor, wavenumber, n_surface, dark_fraction | dark_spots, relative_phase",
            description: "two antennae at the foci of a mirrored ellipse with a dark spot",
            anchor: "antennae in the focal points of a mirrored ellipsoid",
        },
        ExperimentInfo {
            kind: K::Hbt,
            required: "a13, a14, a23, a24, statistics",
            description: "two-particle rate |a13 a24 +- a14 a23|^2",
            anchor: "[a1 a3+][a2 a4+] +- [a1 a4+][a2 a3+]",
        },
        ExperimentInfo {
            kind: K::OverlapScaling,
            required: "seed, n_decisions, branching",
            description: "decay of |<initial|final>| with the number of decisions",
            anchor: "<initial|final> ~ 0.5^decisions",
        },
        ExperimentInfo {
            kind: K::SternGerlach,
            required: "input, witness",
            description: "split and recombine a spin with or without a which-path witness",
            anchor: "traceless Stern-Gerlach splitting",
        },
    ];
    all.sort_by_key(|e| e.kind.name());
    all
}

/// Fixed-width text listing; identical on every call.
pub fn list_experiments() -> String {
    let entries = catalogue();
    let w_name = entries
        .iter()
        .map(|e| e.kind.name().len())
        .max()
        .unwrap_or(0)
        .max(4);
    let mut out = format!("{:<w_name$}  {}\n", "NAME", "DESCRIPTION");
    for e in entries {
        out.push_str(&format!("{:<w_name$}  {}\n", e.kind.name(), e.description));
        out.push_str(&format!("{:<w_name$}    params: {}\n", "", e.required));
        out.push_str(&format!("{:<w_name$}    anchor: {}\n", "", e.anchor));
    }
    out
}

type Complex = [f64; 2];

fn cx(c: Complex) -> C64 {
    C64::new(c[0], c[1])
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum NamedState {
    Uniform,
    Random,
    BasisAverage,
}

#[derive(Debug, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum StateSpec {
    Amplitudes { amplitudes: Vec<Complex> },
    Basis { basis: usize },
    Named { kind: NamedState },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepSpec {
    evolve: Option<String>,
    evolve_matrix: Option<Vec<Vec<Complex>>>,
    measure: Option<String>,
    measure_partition: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AblParams {
    dim: usize,
    initial: StateSpec,
    #[serde(rename = "final")]
    final_state: StateSpec,
    steps: Vec<StepSpec>,
    history_cap: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OverlapParams {
    n_decisions: usize,
    branching: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BornParams {
    theta: OneOrMany<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DominanceParams {
    h: OneOrMany<f64>,
    k: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CptParams {
    a: OneOrMany<Complex>,
    a_prime: OneOrMany<Complex>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
enum StatisticsSpec {
    Boson,
    Fermion,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HbtParams {
    a13: Complex,
    a14: Complex,
    a23: Complex,
    a24: Complex,
    statistics: OneOrMany<StatisticsSpec>,
    /// Extra phase applied to `a14`, swept in order.
    phase: Option<OneOrMany<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EllipsoidParams {
    semi_major: f64,
    semi_minor: f64,
    wavenumber: f64,
    n_surface: usize,
    dark_fraction: Option<OneOrMany<f64>>,
    /// Explicit `[start, length]` arcs, perimeter fractions.
    dark_spots: Option<Vec<[f64; 2]>>,
    relative_phase: OneOrMany<f64>,
    inverse_distance_weighting: Option<bool>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
enum WitnessMode {
    None,
    Orthogonal,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
enum WitnessSpec {
    Mode(WitnessMode),
    Overlap(Complex),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SternGerlachParams {
    input: Vec<Complex>,
    witness: OneOrMany<WitnessSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatParams {
    c: OneOrMany<Complex>,
}

/// Schema check for the params block.
pub fn check_params(cfg: &ScenarioConfig) -> Result<()> {
    use ExperimentKind as K;
    match cfg.experiment {
        K::Abl => {
            let p: AblParams = cfg.params()?;
            if p.history_cap == Some(0) {
                return Err(CliError::config("`history_cap` must be positive"));
            }
            let needs_seed = p
                .steps
                .iter()
                .any(|s| s.evolve.as_deref() == Some("random"))
                || matches!(
                    p.initial,
                    StateSpec::Named {
                        kind: NamedState::Random
                    }
                )
                || matches!(
                    p.final_state,
                    StateSpec::Named {
                        kind: NamedState::Random
                    }
                );
            if needs_seed && cfg.seed.is_none() {
                return Err(CliError::config(
                    "missing field `seed`: random states or unitaries require a seed",
                ));
            }
        }
        K::OverlapScaling => {
            cfg.params::<OverlapParams>()?;
        }
        K::BornEmergence => {
            cfg.params::<BornParams>()?;
        }
        K::Dominance => {
            cfg.params::<DominanceParams>()?;
        }
        K::Cpt => {
            cfg.params::<CptParams>()?;
        }
        K::Hbt => {
            cfg.params::<HbtParams>()?;
        }
        K::Ellipsoid => {
            let p: EllipsoidParams = cfg.params()?;
            if p.dark_fraction.is_some() == p.dark_spots.is_some() {
                return Err(CliError::config(
                    "exactly one of `dark_fraction` or `dark_spots` is required",
                ));
            }
        }
        K::SternGerlach => {
            cfg.params::<SternGerlachParams>()?;
        }
        K::CatWitness => {
            cfg.params::<CatParams>()?;
        }
    }
    Ok(())
}

pub struct Outcome {
    pub runs: Vec<Run>,
    pub notes: Vec<(String, String)>,
}

impl Outcome {
    fn runs(runs: Vec<Run>) -> Self {
        Self {
            runs,
            notes: Vec::new(),
        }
    }
}

fn scalar_run(params: Vec<(String, Value)>, outputs: Vec<(String, Value)>) -> Run {
    Run {
        params,
        outputs,
        table: None,
    }
}

pub fn run_experiment(cfg: &ScenarioConfig) -> Result<Outcome> {
    use ExperimentKind as K;
    match cfg.experiment {
        K::Abl => run_abl(cfg),
        K::OverlapScaling => run_overlap(cfg),
        K::BornEmergence => run_born(cfg),
        K::Dominance => run_dominance(cfg),
        K::Cpt => run_cpt(cfg),
        K::Hbt => run_hbt(cfg),
        K::Ellipsoid => run_ellipsoid(cfg),
        K::SternGerlach => run_stern_gerlach(cfg),
        K::CatWitness => run_cat(cfg),
    }
}

fn build_state(
    spec: &StateSpec,
    dim: usize,
    rng: &mut Option<SeededRng>,
    field: &str,
) -> Result<FinalBoundary> {
    let state = match spec {
        StateSpec::Amplitudes { amplitudes } => {
            if amplitudes.len() != dim {
                return Err(CliError::config(format!(
                    "`{field}` has {} amplitudes, expected {dim}",
                    amplitudes.len()
                )));
            }
            StateVector::normalized(amplitudes.iter().copied().map(cx).collect())?
        }
        StateSpec::Basis { basis } => StateVector::basis(dim, *basis)?,
        StateSpec::Named {
            kind: NamedState::Uniform,
        } => StateVector::uniform(dim)?,
        StateSpec::Named {
            kind: NamedState::Random,
        } => rng
            .as_mut()
            .ok_or_else(|| CliError::config("missing field `seed`"))?
            .random_state(dim)?,
        StateSpec::Named {
            kind: NamedState::BasisAverage,
        } => {
            if field == "final" {
                return Ok(FinalBoundary::basis_average(dim)?);
            }
            return Err(CliError::config(format!(
                "`{field}` cannot be a basis average"
            )));
        }
    };
    Ok(FinalBoundary::Pure(state))
}

fn build_step(
    spec: &StepSpec,
    dim: usize,
    rng: &mut Option<SeededRng>,
    index: usize,
) -> Result<Step> {
    let given = [
        spec.evolve.is_some(),
        spec.evolve_matrix.is_some(),
        spec.measure.is_some(),
        spec.measure_partition.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if given != 1 {
        return Err(CliError::config(format!(
            "steps[{index}]: exactly one of `evolve`, `evolve_matrix`, `measure`, `measure_partition` is required"
        )));
    }
    let qubit_only = |op: Operator| -> Result<Unitary> {
        if dim != 2 {
            return Err(CliError::config(format!(
                "steps[{index}]: named gate needs dim = 2"
            )));
        }
        Ok(Unitary::new(op)?)
    };
    if let Some(name) = &spec.evolve {
        let u = match name.as_str() {
            "identity" => Unitary::identity(dim),
            "random" => rng.as_mut().ok_or_else(|| CliError::config("missing field `seed`"))?.random_unitary(dim)?,
            "hadamard" => qubit_only(Operator::hadamard())?,
            "pauli_x" => qubit_only(Operator::pauli_x())?,
            "pauli_z" => qubit_only(Operator::pauli_z())?,
            other => {
                return Err(CliError::config(format!(
                    "steps[{index}]: unknown evolution `{other}` (expected identity, random, hadamard, pauli_x, pauli_z)"
                )))
            }
        };
        return Ok(Step::Evolve(u));
    }
    if let Some(rows) = &spec.evolve_matrix {
        let rows: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().copied().map(cx).collect())
            .collect();
        return Ok(Step::Evolve(Unitary::new(Operator::from_rows(&rows)?)?));
    }
    if let Some(name) = &spec.measure {
        if name != "computational" {
            return Err(CliError::config(format!(
                "steps[{index}]: unknown measurement `{name}`"
            )));
        }
        return Ok(Step::Measure(MeasurementEvent::computational(dim)?));
    }
    let groups = spec.measure_partition.as_ref().expect("counted above");
    Ok(Step::Measure(MeasurementEvent::from_partition(
        dim, groups,
    )?))
}

fn run_abl(cfg: &ScenarioConfig) -> Result<Outcome> {
    let p: AblParams = cfg.params()?;
    let mut rng = cfg.seed.map(SeededRng::new);
    let initial = match build_state(&p.initial, p.dim, &mut rng, "initial")? {
        FinalBoundary::Pure(s) => s,
        FinalBoundary::Mixture(_) => unreachable!("rejected for initial"),
    };
    let final_boundary = build_state(&p.final_state, p.dim, &mut rng, "final")?;
    let steps = p
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| build_step(s, p.dim, &mut rng, i))
        .collect::<Result<Vec<_>>>()?;
    let schedule = Schedule::from_steps(p.dim, steps)?;
    let proc = TwoBoundaryProcess::with_boundary(initial, final_boundary, schedule)?;
    let cap = p.history_cap.map(u128::from).unwrap_or(DEFAULT_HISTORY_CAP);
    let histories = enumerate_histories_capped(&proc, cap)?;
    let total: f64 = histories.iter().map(|h| h.probability).sum();
    let rows = histories
        .iter()
        .map(|h| {
            let outcomes = h
                .outcomes
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join("-");
            vec![
                Value::Text(outcomes),
                Value::Complex(h.amplitude.unwrap_or(C64::new(f64::NAN, f64::NAN))),
                Value::Real(h.weight),
                Value::Real(h.probability),
            ]
        })
        .collect();
    Ok(Outcome::runs(vec![Run {
        params: fields!["dim" => p.dim, "measurements" => proc.schedule().n_measurements()],
        outputs: fields!["histories" => histories.len(), "total_probability" => total],
        table: Some(Table {
            columns: vec![
                "outcomes".into(),
                "amplitude".into(),
                "weight".into(),
                "probability".into(),
            ],
            rows,
        }),
    }]))
}

fn run_overlap(cfg: &ScenarioConfig) -> Result<Outcome> {
    let p: OverlapParams = cfg.params()?;
    let run = DecisionRun::new(
        p.n_decisions,
        p.branching,
        SeededRng::new(cfg.require_seed()?),
    )?;
    let out = overlap_scaling_experiment(run)?;
    let rows = out
        .points
        .iter()
        .map(|pt| {
            vec![
                Value::from(pt.decisions),
                Value::from(pt.outcome),
                Value::from(pt.amplitude),
                Value::from(pt.squared_overlap()),
                Value::from(pt.ln_squared_overlap),
            ]
        })
        .collect();
    Ok(Outcome {
        runs: vec![Run {
            params: fields!["n_decisions" => p.n_decisions, "branching" => p.branching],
            outputs: fields![
                "squared_decay_base" => out.squared_decay_base,
                "amplitude_decay_base" => out.amplitude_decay_base,
            ],
            table: Some(Table {
                columns: vec![
                    "decisions".into(),
                    "outcome".into(),
                    "amplitude".into(),
                    "squared_overlap".into(),
                    "ln_squared_overlap".into(),
                ],
                rows,
            }),
        }],
        notes: vec![(
            "decay".into(),
            "both the amplitude and the squared overlap are reported; squared_decay_base is the per-decision factor of |<i|f>|^2".into(),
        )],
    })
}

fn run_born(cfg: &ScenarioConfig) -> Result<Outcome> {
    let p: BornParams = cfg.params()?;
    let seed = cfg.require_seed()?;
    let samples = cfg.samples.expect("validated") as usize;
    let runs = p
        .theta
        .values()
        .into_iter()
        .map(|theta| {
            let out = born_emergence_experiment(theta, samples, seed)?;
            let born = (theta / 2.0).cos().powi(2);
            Ok(scalar_run(
                fields!["theta" => theta, "samples" => samples],
                fields![
                    "empirical_p" => out.empirical_p,
                    "up_count" => out.up_count,
                    "born_p" => born,
                    "tolerance_3sigma" => 3.0 * (born * (1.0 - born) / samples as f64).sqrt(),
                ],
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome {
        runs,
        notes: vec![(
            "model".into(),
            "per sample: Haar-random evolution to the border, Haar-random border state, mirrored evolution back; the larger matched weight wins".into(),
        )],
    })
}

fn run_dominance(cfg: &ScenarioConfig) -> Result<Outcome> {
    let p: DominanceParams = cfg.params()?;
    let seed = cfg.require_seed()?;
    let trials = cfg.samples.expect("validated") as usize;
    let runs =
        p.h.values()
            .into_iter()
            .map(|h| {
                let model = DominanceModel::new(h, p.k, seed)?;
                let out = dominance_experiment(&model, trials)?;
                Ok(scalar_run(
                    fields!["h" => h, "k" => p.k, "trials" => trials],
                    fields!["fraction" => out.fraction, "dominant" => out.dominant],
                ))
            })
            .collect::<Result<Vec<_>>>()?;
    Ok(Outcome {
        runs,
        notes: vec![(
            "model".into(),
            "modeling choice: log10 weights i.i.d. Normal(-h, sqrt(h)); dominance means top - second >= 2".into(),
        )],
    })
}

fn run_cpt(cfg: &ScenarioConfig) -> Result<Outcome> {
    let p: CptParams = cfg.params()?;
    let mut runs = Vec::new();
    for a in p.a.values() {
        for a_prime in p.a_prime.values() {
            let pair = CptAmplitudePair {
                a: cx(a),
                a_prime: cx(a_prime),
            };
            runs.push(scalar_run(
                fields!["a" => pair.a, "a_prime" => pair.a_prime],
                fields!["asymmetry" => cpt_asymmetry(pair)],
            ));
        }
    }
    Ok(Outcome::runs(runs))
}

fn run_hbt(cfg: &ScenarioConfig) -> Result<Outcome> {
    let p: HbtParams = cfg.params()?;
    let phases = p
        .phase
        .as_ref()
        .map(OneOrMany::values)
        .unwrap_or_else(|| vec![0.0]);
    let mut runs = Vec::new();
    for stats in p.statistics.values() {
        let statistics = match stats {
            StatisticsSpec::Boson => Statistics::Boson,
            StatisticsSpec::Fermion => Statistics::Fermion,
        };
        for &phase in &phases {
            let hbt = HbtConfig {
                a13: cx(p.a13),
                a14: cx(p.a14) * C64::from_polar(1.0, phase),
                a23: cx(p.a23),
                a24: cx(p.a24),
                statistics,
            };
            let name = if statistics == Statistics::Boson {
                "boson"
            } else {
                "fermion"
            };
            runs.push(scalar_run(
                fields!["statistics" => name, "phase" => phase],
                fields!["rate" => hbt_rate(&hbt)],
            ));
        }
    }
    Ok(Outcome::runs(runs))
}

fn run_ellipsoid(cfg: &ScenarioConfig) -> Result<Outcome> {
    let p: EllipsoidParams = cfg.params()?;
    let arcs: Vec<(f64, Vec<DarkArc>)> = match (&p.dark_fraction, &p.dark_spots) {
        (Some(f), None) => f
            .values()
            .into_iter()
            .map(|f| (f, vec![DarkArc::centered(f)]))
            .collect(),
        (None, Some(spots)) => {
            let arcs: Vec<DarkArc> = spots
                .iter()
                .map(|s| DarkArc {
                    start: s[0],
                    length: s[1],
                })
                .collect();
            vec![(arcs.iter().map(|a| a.length).sum(), arcs)]
        }
        _ => {
            return Err(CliError::config(
                "exactly one of `dark_fraction` or `dark_spots` is required",
            ))
        }
    };
    let mut runs = Vec::new();
    for (fraction, dark_spots) in arcs {
        for phase in p.relative_phase.values() {
            let cfg = EllipsoidConfig {
                semi_major: p.semi_major,
                semi_minor: p.semi_minor,
                wavenumber: p.wavenumber,
                n_surface: p.n_surface,
                dark_spots: dark_spots.clone(),
                relative_phase: phase,
                inverse_distance_weighting: p.inverse_distance_weighting.unwrap_or(false),
            };
            let out = ellipsoid_experiment(&cfg)?;
            runs.push(scalar_run(
                fields!["dark_fraction" => fraction, "relative_phase" => phase],
                fields![
                    "rate_direct" => out.rate_direct,
                    "rate_interference" => out.rate_interference,
                    "total_rate" => out.total_rate,
                    "emission_probability_shift" => out.emission_probability_shift,
                    "dark_coverage" => out.dark_coverage,
                    "path_coherence" => out.path_coherence,
                    "analytic_ratio" => 1.0 + (1.0 - out.dark_coverage) * phase.cos(),
                ],
            ));
        }
    }
    Ok(Outcome {
        runs,
        notes: vec![(
            "emission_probability_shift".into(),
            "rate_interference / rate_direct: change of the emission probability due to the reflecting part of the mirror".into(),
        )],
    })
}

fn run_stern_gerlach(cfg: &ScenarioConfig) -> Result<Outcome> {
    let p: SternGerlachParams = cfg.params()?;
    let input = StateVector::normalized(p.input.iter().copied().map(cx).collect())?;
    let runs = p
        .witness
        .values()
        .into_iter()
        .map(|w| {
            let (label, overlap) = match w {
                WitnessSpec::Mode(WitnessMode::None) => ("none".to_string(), None),
                WitnessSpec::Mode(WitnessMode::Orthogonal) => {
                    ("orthogonal".to_string(), Some(C64::new(0.0, 0.0)))
                }
                WitnessSpec::Overlap(c) => (format!("overlap({}, {})", c[0], c[1]), Some(cx(c))),
            };
            let out = stern_gerlach_with_witness(&input, overlap)?;
            let rho = &out.reduced;
            Ok(scalar_run(
                fields!["witness" => label],
                fields![
                    "return_fidelity" => out.return_fidelity,
                    "rho_00" => rho.entry(0, 0).re,
                    "rho_01" => rho.entry(0, 1),
                    "rho_11" => rho.entry(1, 1).re,
                ],
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::runs(runs))
}

fn run_cat(cfg: &ScenarioConfig) -> Result<Outcome> {
    let p: CatParams = cfg.params()?;
    let runs =
        p.c.values()
            .into_iter()
            .map(|c| {
                let coherence = cat_witness_coherence(&WitnessConfig {
                    witness_overlap: cx(c),
                })?;
                Ok(scalar_run(
                    fields!["c" => cx(c)],
                    fields!["coherence" => coherence],
                ))
            })
            .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::runs(runs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing_is_alphabetical_and_complete() {
        let names: Vec<&str> = catalogue().iter().map(|e| e.kind.name()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert_eq!(names.len(), 9);
        assert_eq!(list_experiments(), list_experiments());
    }

    #[test]
    fn every_kind_is_listed_once() {
        for kind in ExperimentKind::ALL {
            assert_eq!(catalogue().iter().filter(|e| e.kind == kind).count(), 1);
        }
    }
}
