//! Macroscopic decision trees: exhaustive history enumeration, folding
//! decisions into a final-state density matrix, and the decay of the
//! initial/final overlap with the number of decisions.

use crate::error::{Error, Result};
use crate::hilbert::{Operator, Projector, SeededRng, StateVector, C64, CONSTRUCTION_TOL};
use crate::two_boundary::{History, TwoBoundaryProcess, DEFAULT_HISTORY_CAP, IMPOSSIBLE_WEIGHT};

/// Largest supported number of decisions in an overlap run.
pub const MAX_DECISIONS: usize = 30;

/// A unit-trace, Hermitian, positive semidefinite operator.
#[derive(Debug, Clone, PartialEq)]
pub struct FinalDensity {
    rho: Operator,
}

impl FinalDensity {
    pub fn new(rho: Operator) -> Result<Self> {
        let herm = rho.hermiticity_defect();
        if herm > CONSTRUCTION_TOL {
            return Err(Error::InvalidParameter {
                name: "rho",
                reason: format!("not Hermitian (defect {herm:e})"),
            });
        }
        let trace = rho.trace();
        if (trace - C64::new(1.0, 0.0)).norm() > CONSTRUCTION_TOL {
            return Err(Error::InvalidParameter {
                name: "rho",
                reason: format!("trace {trace} is not 1"),
            });
        }
        let min_ev = rho.hermitian_eigenvalues()[0];
        if min_ev < -CONSTRUCTION_TOL {
            return Err(Error::InvalidParameter {
                name: "rho",
                reason: format!("not positive semidefinite (eigenvalue {min_ev:e})"),
            });
        }
        Ok(Self { rho })
    }

    /// `|final⟩⟨final|` for a single fixed final state.
    pub fn pure(state: &StateVector) -> Result<Self> {
        let mut unit = state.clone();
        unit.normalize()?;
        Self::new(unit.density())
    }

    pub fn operator(&self) -> &Operator {
        &self.rho
    }

    pub fn into_operator(self) -> Operator {
        self.rho
    }
}

/// `S ρ₀ S† / Tr(S ρ₀ S†)` with `S = Σᵢ Pᵢ`.
pub fn accumulate_final_density(
    projections: &[Projector],
    rho0: &Operator,
) -> Result<FinalDensity> {
    let dim = rho0.dim();
    let mut sum = Operator::zeros(dim);
    for p in projections {
        sum = sum.add(p.operator())?;
    }
    let out = sum.compose(rho0)?.compose(&sum.adjoint())?;
    let trace = out.trace().re;
    if trace <= 1e-12 {
        return Err(Error::AnnihilatedState { trace });
    }
    FinalDensity::new(out.scale(C64::new(1.0 / trace, 0.0)))
}

/// Every history of `proc` in lexicographic outcome order, with the default cap.
pub fn enumerate_histories(proc: &TwoBoundaryProcess) -> Result<Vec<History>> {
    enumerate_histories_capped(proc, DEFAULT_HISTORY_CAP)
}

pub fn enumerate_histories_capped(proc: &TwoBoundaryProcess, cap: u128) -> Result<Vec<History>> {
    let final_boundary = proc.final_boundary();
    let pure = match final_boundary {
        crate::two_boundary::FinalBoundary::Pure(f) => Some(f),
        crate::two_boundary::FinalBoundary::Mixture(_) => None,
    };
    let mut histories = Vec::new();
    let mut failure = None;
    proc.schedule()
        .for_each_history(proc.initial(), cap, |outcomes, psi| {
            let amplitude = pure.map(|f| f.inner(psi)).transpose();
            let weight = final_boundary.weight(psi);
            match (amplitude, weight) {
                (Ok(amplitude), Ok(weight)) => histories.push(History {
                    outcomes: outcomes.to_vec(),
                    amplitude,
                    weight,
                    probability: 0.0,
                }),
                (Err(e), _) | (_, Err(e)) => failure = Some(e),
            }
        })?;
    if let Some(e) = failure {
        return Err(e);
    }
    let total: f64 = histories.iter().map(|h| h.weight).sum();
    if total <= IMPOSSIBLE_WEIGHT {
        return Err(Error::ImpossiblePostSelection { weight: total });
    }
    for h in &mut histories {
        h.probability = h.weight / total;
    }
    Ok(histories)
}

/// A sequence of equally weighted decisions with `branching` options each.
#[derive(Debug, Clone)]
pub struct DecisionRun {
    n_decisions: usize,
    branching: usize,
    rng: SeededRng,
}

impl DecisionRun {
    pub fn new(n_decisions: usize, branching: usize, rng: SeededRng) -> Result<Self> {
        if n_decisions == 0 || n_decisions > MAX_DECISIONS {
            return Err(Error::InvalidParameter {
                name: "n_decisions",
                reason: format!("must be in 1..={MAX_DECISIONS}, got {n_decisions}"),
            });
        }
        if branching < 2 {
            return Err(Error::InvalidParameter {
                name: "branching",
                reason: format!("must be at least 2, got {branching}"),
            });
        }
        Ok(Self {
            n_decisions,
            branching,
            rng,
        })
    }

    pub fn n_decisions(&self) -> usize {
        self.n_decisions
    }

    pub fn branching(&self) -> usize {
        self.branching
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapPoint {
    pub decisions: usize,
    /// Outcome chosen for the newest decision.
    pub outcome: usize,
    pub amplitude: C64,
    pub ln_squared_overlap: f64,
}

impl OverlapPoint {
    pub fn squared_overlap(&self) -> f64 {
        self.ln_squared_overlap.exp()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapScaling {
    pub points: Vec<OverlapPoint>,
    /// Fitted per-decision factor of `|⟨initial|final⟩|²`.
    pub squared_decay_base: f64,
    /// Fitted per-decision factor of `|⟨initial|final⟩|`.
    pub amplitude_decay_base: f64,
}

/// Builds the initial state as a product of uniform superpositions, one per
/// decision, and the final state as a product of randomly chosen basis
/// outcomes. Overlaps are accumulated factor by factor in the log domain and
/// the decay base is `exp(slope)` of a least-squares fit of
/// `ln|⟨initial|final⟩|²` against the number of decisions.
pub fn overlap_scaling_experiment(run: DecisionRun) -> Result<OverlapScaling> {
    let DecisionRun {
        n_decisions,
        branching,
        mut rng,
    } = run;
    let factor_initial = StateVector::uniform(branching)?;
    let mut amplitude = C64::new(1.0, 0.0);
    let mut ln_sq = 0.0;
    let mut points = Vec::with_capacity(n_decisions);
    for decisions in 1..=n_decisions {
        let outcome = rng.below(branching);
        let factor_final = StateVector::basis(branching, outcome)?;
        let a = factor_initial.inner(&factor_final)?;
        amplitude *= a;
        ln_sq += a.norm_sqr().ln();
        points.push(OverlapPoint {
            decisions,
            outcome,
            amplitude,
            ln_squared_overlap: ln_sq,
        });
    }
    let slope = fit_slope(
        points
            .iter()
            .map(|p| (p.decisions as f64, p.ln_squared_overlap)),
    );
    Ok(OverlapScaling {
        points,
        squared_decay_base: slope.exp(),
        amplitude_decay_base: (slope / 2.0).exp(),
    })
}

/// Least-squares slope; a single point is fit through the origin.
fn fit_slope(xy: impl Iterator<Item = (f64, f64)>) -> f64 {
    let pts: Vec<(f64, f64)> = xy.collect();
    if pts.len() == 1 {
        return pts[0].1 / pts[0].0;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::Tensor;
    use crate::two_boundary::{FinalBoundary, MeasurementEvent, Schedule};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn single_projector_density() {
        let p0 = Projector::onto_basis(2, &[0]).unwrap();
        let rho0 = Operator::identity(2).scale(c(0.5));
        let out = accumulate_final_density(std::slice::from_ref(&p0), &rho0).unwrap();
        assert!(out.operator().max_abs_diff(p0.operator()).unwrap() < 1e-15);
    }

    #[test]
    fn complete_set_leaves_density_unchanged() {
        let mut rng = SeededRng::new(8);
        let a = rng.random_state(3).unwrap().density().scale(c(0.7));
        let b = rng.random_state(3).unwrap().density().scale(c(0.3));
        let rho0 = a.add(&b).unwrap();
        let basis = MeasurementEvent::computational(3).unwrap();
        let out = accumulate_final_density(basis.projectors(), &rho0).unwrap();
        assert!(out.operator().max_abs_diff(&rho0).unwrap() < 1e-12);
    }

    #[test]
    fn two_non_orthogonal_projectors() {
        // by hand: S = [[3/2, 1/2], [1/2, 1/2]], S(I/2)S† = ½ S² = ½[[5/2, 1], [1, 1/2]],
        // trace 3/2, normalized [[5/6, 1/3], [1/3, 1/6]]
        let p0 = Projector::onto_basis(2, &[0]).unwrap();
        let plus = StateVector::from_reals(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2])
            .unwrap()
            .projector()
            .unwrap();
        let rho0 = Operator::identity(2).scale(c(0.5));
        let out = accumulate_final_density(&[p0, plus], &rho0).unwrap();
        let expected = Operator::from_rows(&[
            vec![c(5.0 / 6.0), c(1.0 / 3.0)],
            vec![c(1.0 / 3.0), c(1.0 / 6.0)],
        ])
        .unwrap();
        assert!(out.operator().max_abs_diff(&expected).unwrap() < 1e-12);
    }

    #[test]
    fn annihilating_decisions() {
        let p0 = Projector::onto_basis(2, &[0]).unwrap();
        let rho0 = StateVector::basis(2, 1).unwrap().density();
        assert!(matches!(
            accumulate_final_density(&[p0], &rho0),
            Err(Error::AnnihilatedState { .. })
        ));
    }

    #[test]
    fn pure_final_density() {
        let s = StateVector::from_reals(&[3.0, 4.0]).unwrap();
        let rho = FinalDensity::pure(&s).unwrap();
        assert!((rho.operator().trace() - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn two_z_measurements_fixed_boundaries() {
        let e0 = StateVector::basis(2, 0).unwrap();
        let z = MeasurementEvent::computational(2).unwrap();
        let sched = Schedule::new(2)
            .measure(z.clone())
            .unwrap()
            .measure(z)
            .unwrap();
        let proc = TwoBoundaryProcess::new(e0.clone(), e0, sched).unwrap();
        let hs = enumerate_histories(&proc).unwrap();
        assert_eq!(hs.len(), 4);
        assert_eq!(hs[0].outcomes, vec![0, 0]);
        assert_eq!(hs[0].probability, 1.0);
        assert!(hs[1..].iter().all(|h| h.probability == 0.0));
    }

    #[test]
    fn open_final_boundary_gives_born() {
        let plus = StateVector::from_reals(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]).unwrap();
        let sched = Schedule::new(2)
            .measure(MeasurementEvent::computational(2).unwrap())
            .unwrap();
        let proc = TwoBoundaryProcess::with_boundary(
            plus,
            FinalBoundary::basis_average(2).unwrap(),
            sched,
        )
        .unwrap();
        let hs = enumerate_histories(&proc).unwrap();
        assert!(hs.iter().all(|h| h.amplitude.is_none()));
        assert!((hs[0].probability - 0.5).abs() < 1e-15);
        assert!((hs[1].probability - 0.5).abs() < 1e-15);
    }

    #[test]
    fn enumeration_cap_is_reported() {
        let z = MeasurementEvent::computational(2).unwrap();
        let mut sched = Schedule::new(2);
        for _ in 0..5 {
            sched = sched.measure(z.clone()).unwrap();
        }
        let e0 = StateVector::basis(2, 0).unwrap();
        let proc = TwoBoundaryProcess::new(e0.clone(), e0, sched).unwrap();
        assert_eq!(
            enumerate_histories_capped(&proc, 16).unwrap_err(),
            Error::EnumerationCap {
                required: 32,
                cap: 16
            }
        );
    }

    #[test]
    fn overlap_single_decision() {
        let out =
            overlap_scaling_experiment(DecisionRun::new(1, 2, SeededRng::new(0)).unwrap()).unwrap();
        assert!((out.points[0].squared_overlap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn overlap_matches_dense_product_states() {
        let n = 10;
        let out = overlap_scaling_experiment(DecisionRun::new(n, 2, SeededRng::new(17)).unwrap())
            .unwrap();
        let plus = StateVector::uniform(2).unwrap();
        let initial = StateVector::tensor_all(&vec![plus; n]).unwrap();
        let finals: Vec<StateVector> = out
            .points
            .iter()
            .map(|p| StateVector::basis(2, p.outcome).unwrap())
            .collect();
        let fin = StateVector::tensor_all(&finals).unwrap();
        let dense = initial.inner(&fin).unwrap();
        assert!((dense - out.points[n - 1].amplitude).norm() < 1e-14);
        assert!((dense.norm_sqr() - 0.5f64.powi(10)).abs() < 1e-15);
    }

    #[test]
    fn overlap_bases() {
        let out = overlap_scaling_experiment(DecisionRun::new(20, 2, SeededRng::new(1)).unwrap())
            .unwrap();
        assert!((out.squared_decay_base - 0.5).abs() < 1e-6);
        assert!((out.amplitude_decay_base - FRAC_1_SQRT_2).abs() < 1e-6);
        let out = overlap_scaling_experiment(DecisionRun::new(30, 3, SeededRng::new(1)).unwrap())
            .unwrap();
        assert!((out.squared_decay_base - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn decision_run_validation() {
        assert!(DecisionRun::new(0, 2, SeededRng::new(0)).is_err());
        assert!(DecisionRun::new(31, 2, SeededRng::new(0)).is_err());
        assert!(DecisionRun::new(3, 1, SeededRng::new(0)).is_err());
    }
}
