//! Histories between a pre-selected initial state and a post-selected final
//! boundary.
//!
//! A history picks one projector from every measurement event of a
//! [`Schedule`]. Its amplitude is `⟨final| … P_k₂ U₂ P_k₁ U₁ |initial⟩`, with the
//! schedule applied to the initial state in time order. Probabilities follow
//! the Aharonov-Bergmann-Lebowitz rule: squared amplitudes normalized over
//! every outcome tuple.

use crate::error::{Error, Result};
use crate::hilbert::{Operator, Projector, StateVector, Unitary, C64, CONSTRUCTION_TOL};

/// Below this total weight a post-selection is treated as impossible.
pub const IMPOSSIBLE_WEIGHT: f64 = 1e-24;

/// Smallest projected norm that still counts as a populated branch.
pub const MIN_BRANCH_NORM: f64 = 1e-12;

/// Default upper bound on the number of enumerated outcome tuples.
pub const DEFAULT_HISTORY_CAP: u128 = 1 << 20;

/// A complete set of mutually orthogonal projectors.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementEvent {
    projectors: Vec<Projector>,
}

impl MeasurementEvent {
    pub fn new(projectors: Vec<Projector>) -> Result<Self> {
        let Some(first) = projectors.first() else {
            return Err(Error::InvalidMeasurement("no projectors".into()));
        };
        let dim = first.dim();
        for p in &projectors {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        for (i, a) in projectors.iter().enumerate() {
            for (j, b) in projectors.iter().enumerate().skip(i + 1) {
                let overlap = a.operator().compose(b.operator())?.max_abs();
                if overlap > CONSTRUCTION_TOL {
                    return Err(Error::InvalidMeasurement(format!(
                        "projectors {i} and {j} are not orthogonal (‖PᵢPⱼ‖ = {overlap:e})"
                    )));
                }
            }
        }
        let sum = projectors
            .iter()
            .try_fold(Operator::zeros(dim), |acc, p| acc.add(p.operator()))?;
        let defect = sum.max_abs_diff(&Operator::identity(dim))?;
        if defect > CONSTRUCTION_TOL {
            return Err(Error::InvalidMeasurement(format!(
                "projectors do not sum to the identity (deviation {defect:e})"
            )));
        }
        Ok(Self { projectors })
    }

    /// One rank-one projector per computational basis state.
    pub fn computational(dim: usize) -> Result<Self> {
        let projectors = (0..dim)
            .map(|k| Projector::onto_basis(dim, &[k]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(projectors)
    }

    /// `{P, I − P}`.
    pub fn binary(p: Projector) -> Result<Self> {
        let q = p.complement();
        Self::new(vec![p, q])
    }

    /// Projectors onto the spans of disjoint groups of computational basis
    /// states. The groups must cover `0..dim`.
    pub fn from_partition(dim: usize, groups: &[Vec<usize>]) -> Result<Self> {
        let projectors = groups
            .iter()
            .map(|g| Projector::onto_basis(dim, g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(projectors)
    }

    pub fn dim(&self) -> usize {
        self.projectors[0].dim()
    }

    pub fn len(&self) -> usize {
        self.projectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projectors.is_empty()
    }

    pub fn projectors(&self) -> &[Projector] {
        &self.projectors
    }

    pub fn projector(&self, k: usize) -> Option<&Projector> {
        self.projectors.get(k)
    }

    /// The same event viewed at a later time, `{U† Pᵢ U}`.
    pub fn shifted(&self, u: &Unitary) -> Result<Self> {
        let projectors = self
            .projectors
            .iter()
            .map(|p| shift_projection(p, u))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { projectors })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Step {
    Evolve(Unitary),
    Measure(MeasurementEvent),
}

impl Step {
    fn dim(&self) -> usize {
        match self {
            Step::Evolve(u) => u.dim(),
            Step::Measure(m) => m.dim(),
        }
    }
}

/// Time-ordered alternation of evolutions and measurement events.
#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    dim: usize,
    steps: Vec<Step>,
}

impl Schedule {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            steps: Vec::new(),
        }
    }

    pub fn from_steps(dim: usize, steps: Vec<Step>) -> Result<Self> {
        let mut s = Self::new(dim);
        for step in steps {
            s.push(step)?;
        }
        Ok(s)
    }

    pub fn push(&mut self, step: Step) -> Result<()> {
        if step.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: step.dim(),
            });
        }
        self.steps.push(step);
        Ok(())
    }

    pub fn evolve(mut self, u: Unitary) -> Result<Self> {
        self.push(Step::Evolve(u))?;
        Ok(self)
    }

    pub fn measure(mut self, event: MeasurementEvent) -> Result<Self> {
        self.push(Step::Measure(event))?;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn measurements(&self) -> impl Iterator<Item = &MeasurementEvent> {
        self.steps.iter().filter_map(|s| match s {
            Step::Measure(m) => Some(m),
            Step::Evolve(_) => None,
        })
    }

    pub fn n_measurements(&self) -> usize {
        self.measurements().count()
    }

    /// Number of projectors in each measurement event, in schedule order.
    pub fn outcome_counts(&self) -> Vec<usize> {
        self.measurements().map(MeasurementEvent::len).collect()
    }

    /// Total number of outcome tuples, saturating.
    pub fn n_histories(&self) -> u128 {
        self.outcome_counts()
            .iter()
            .fold(1u128, |acc, &n| acc.saturating_mul(n as u128))
    }

    /// Product of all evolutions with the measurements left out.
    pub fn unitary_product(&self) -> Result<Unitary> {
        self.steps
            .iter()
            .try_fold(Unitary::identity(self.dim), |acc, s| match s {
                Step::Evolve(u) => u.compose(&acc),
                Step::Measure(_) => Ok(acc),
            })
    }

    fn validate_outcomes(&self, outcomes: &[usize]) -> Result<()> {
        let counts = self.outcome_counts();
        if counts.len() != outcomes.len() {
            return Err(Error::OutcomeCount {
                expected: counts.len(),
                found: outcomes.len(),
            });
        }
        for (event, (&k, &n)) in outcomes.iter().zip(&counts).enumerate() {
            if k >= n {
                return Err(Error::OutcomeOutOfRange {
                    event,
                    index: k,
                    available: n,
                });
            }
        }
        Ok(())
    }

    /// Applies the schedule to `psi` with the chosen projector at each
    /// measurement. The result is unnormalized.
    pub fn propagate(&self, psi: &StateVector, outcomes: &[usize]) -> Result<StateVector> {
        if psi.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: psi.dim(),
            });
        }
        self.validate_outcomes(outcomes)?;
        let mut state = psi.clone();
        let mut next = outcomes.iter();
        for step in &self.steps {
            state = match step {
                Step::Evolve(u) => u.apply(&state)?,
                Step::Measure(m) => {
                    let k = *next.next().expect("validated");
                    m.projectors[k].apply(&state)?
                }
            };
        }
        Ok(state)
    }

    /// Depth-first walk over every outcome tuple in lexicographic order,
    /// sharing work between histories with a common prefix. `visit` receives
    /// the outcome tuple and the propagated (unnormalized) state.
    pub fn for_each_history(
        &self,
        psi: &StateVector,
        cap: u128,
        mut visit: impl FnMut(&[usize], &StateVector),
    ) -> Result<()> {
        if psi.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: psi.dim(),
            });
        }
        let required = self.n_histories();
        if required > cap {
            return Err(Error::EnumerationCap { required, cap });
        }
        let mut outcomes = Vec::with_capacity(self.n_measurements());
        walk(&self.steps, psi.clone(), &mut outcomes, &mut visit)
    }
}

fn walk(
    steps: &[Step],
    state: StateVector,
    outcomes: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize], &StateVector),
) -> Result<()> {
    let Some((step, rest)) = steps.split_first() else {
        visit(outcomes, &state);
        return Ok(());
    };
    match step {
        Step::Evolve(u) => walk(rest, u.apply(&state)?, outcomes, visit),
        Step::Measure(m) => {
            for (k, p) in m.projectors.iter().enumerate() {
                outcomes.push(k);
                walk(rest, p.apply(&state)?, outcomes, visit)?;
                outcomes.pop();
            }
            Ok(())
        }
    }
}

/// The post-selected boundary. A mixture weights each member's squared
/// amplitude; [`FinalBoundary::basis_average`] leaves the final state open.
#[derive(Debug, Clone, PartialEq)]
pub enum FinalBoundary {
    Pure(StateVector),
    Mixture(Vec<(f64, StateVector)>),
}

impl FinalBoundary {
    /// Equal-weight average over the computational basis.
    pub fn basis_average(dim: usize) -> Result<Self> {
        let members = (0..dim)
            .map(|k| StateVector::basis(dim, k).map(|s| (1.0, s)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::Mixture(members))
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            Self::Pure(s) => Some(s.dim()),
            Self::Mixture(m) => m.first().map(|(_, s)| s.dim()),
        }
    }

    /// `Σ wⱼ |⟨fⱼ|ψ⟩|²`.
    pub fn weight(&self, psi: &StateVector) -> Result<f64> {
        match self {
            Self::Pure(f) => Ok(f.inner(psi)?.norm_sqr()),
            Self::Mixture(members) => members
                .iter()
                .try_fold(0.0, |acc, (w, f)| Ok(acc + w * f.inner(psi)?.norm_sqr())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoBoundaryProcess {
    initial: StateVector,
    final_boundary: FinalBoundary,
    schedule: Schedule,
}

impl TwoBoundaryProcess {
    pub fn new(initial: StateVector, final_state: StateVector, schedule: Schedule) -> Result<Self> {
        Self::with_boundary(initial, FinalBoundary::Pure(final_state), schedule)
    }

    pub fn with_boundary(
        initial: StateVector,
        final_boundary: FinalBoundary,
        schedule: Schedule,
    ) -> Result<Self> {
        let dim = schedule.dim();
        if initial.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: initial.dim(),
            });
        }
        match &final_boundary {
            FinalBoundary::Pure(f) if f.dim() != dim => {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: f.dim(),
                })
            }
            FinalBoundary::Mixture(m) => {
                if m.is_empty() {
                    return Err(Error::InvalidParameter {
                        name: "final",
                        reason: "empty mixture".into(),
                    });
                }
                for (w, f) in m {
                    if f.dim() != dim {
                        return Err(Error::DimensionMismatch {
                            expected: dim,
                            found: f.dim(),
                        });
                    }
                    if !(*w >= 0.0 && w.is_finite()) {
                        return Err(Error::InvalidParameter {
                            name: "final",
                            reason: format!("mixture weight {w} must be finite and non-negative"),
                        });
                    }
                }
            }
            FinalBoundary::Pure(_) => {}
        }
        Ok(Self {
            initial,
            final_boundary,
            schedule,
        })
    }

    pub fn initial(&self) -> &StateVector {
        &self.initial
    }

    pub fn final_boundary(&self) -> &FinalBoundary {
        &self.final_boundary
    }

    pub fn schedule(&self) -> &Schedule {
        &self.schedule
    }

    /// `⟨final| chain(outcomes) |initial⟩`. Only defined for a pure final state.
    pub fn history_amplitude(&self, outcomes: &[usize]) -> Result<C64> {
        let FinalBoundary::Pure(f) = &self.final_boundary else {
            return Err(Error::MixedBoundary);
        };
        f.inner(&self.schedule.propagate(&self.initial, outcomes)?)
    }

    /// Unnormalized ABL weight of one history.
    pub fn history_weight(&self, outcomes: &[usize]) -> Result<f64> {
        self.final_boundary
            .weight(&self.schedule.propagate(&self.initial, outcomes)?)
    }

    /// Sum of history weights over all outcome tuples.
    pub fn total_weight(&self, cap: u128) -> Result<f64> {
        let mut total = 0.0;
        let mut failure = None;
        self.schedule
            .for_each_history(&self.initial, cap, |_, psi| {
                match self.final_boundary.weight(psi) {
                    Ok(w) => total += w,
                    Err(e) => failure = Some(e),
                }
            })?;
        match failure {
            Some(e) => Err(e),
            None => Ok(total),
        }
    }

    /// ABL probability of the given outcome tuple.
    pub fn history_probability(&self, outcomes: &[usize]) -> Result<f64> {
        let w = self.history_weight(outcomes)?;
        let total = self.total_weight(DEFAULT_HISTORY_CAP)?;
        if total <= IMPOSSIBLE_WEIGHT {
            return Err(Error::ImpossiblePostSelection { weight: total });
        }
        Ok(w / total)
    }

    /// `⟨final|chain(outcomes)|initial⟩ / ⟨final|U_n⋯U_1|initial⟩`: the
    /// linear amplitude ratio, kept for inspection. It is not a probability.
    pub fn amplitude_ratio(&self, outcomes: &[usize]) -> Result<C64> {
        let FinalBoundary::Pure(f) = &self.final_boundary else {
            return Err(Error::MixedBoundary);
        };
        let num = self.history_amplitude(outcomes)?;
        let den = f.inner(&self.schedule.unitary_product()?.apply(&self.initial)?)?;
        if den.norm_sqr() <= IMPOSSIBLE_WEIGHT {
            return Err(Error::ImpossiblePostSelection {
                weight: den.norm_sqr(),
            });
        }
        Ok(num / den)
    }
}

/// One outcome per measurement event, with its amplitude (pure final
/// boundary only) and ABL probability.
#[derive(Debug, Clone, PartialEq)]
pub struct History {
    pub outcomes: Vec<usize>,
    pub amplitude: Option<C64>,
    pub weight: f64,
    pub probability: f64,
}

/// Moves a projector past a later evolution: returns `P′ = U₂† P U₂`, so that
/// `U₁ P U₂ = U₁ U₂ P′` for every `U₁`.
pub fn shift_projection(p: &Projector, u2: &Unitary) -> Result<Projector> {
    if p.dim() != u2.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: u2.dim(),
        });
    }
    p.conjugated_by(u2)
}

/// Projects and renormalizes: `P ψ / ‖P ψ‖`.
pub fn collapse(psi: &StateVector, p: &Projector) -> Result<StateVector> {
    let mut out = p.apply(psi)?;
    let norm = out.norm();
    if norm <= MIN_BRANCH_NORM {
        return Err(Error::NoSupport { norm });
    }
    out.normalize()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::SeededRng;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn plus() -> StateVector {
        StateVector::from_reals(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]).unwrap()
    }

    fn e(dim: usize, k: usize) -> StateVector {
        StateVector::basis(dim, k).unwrap()
    }

    fn z_schedule() -> Schedule {
        Schedule::new(2)
            .measure(MeasurementEvent::computational(2).unwrap())
            .unwrap()
    }

    #[test]
    fn amplitude_examples() {
        let proc = TwoBoundaryProcess::new(plus(), e(2, 0), z_schedule()).unwrap();
        assert_abs_diff_eq!(
            proc.history_amplitude(&[0]).unwrap().re,
            FRAC_1_SQRT_2,
            epsilon = 1e-15
        );
        assert_eq!(proc.history_amplitude(&[1]).unwrap(), C64::new(0.0, 0.0));

        let x = Unitary::new(Operator::pauli_x()).unwrap();
        let sched = Schedule::new(2)
            .evolve(x)
            .unwrap()
            .measure(MeasurementEvent::computational(2).unwrap())
            .unwrap();
        let proc = TwoBoundaryProcess::new(e(2, 0), e(2, 0), sched).unwrap();
        assert_eq!(proc.history_amplitude(&[0]).unwrap(), C64::new(0.0, 0.0));
    }

    #[test]
    fn amplitude_errors() {
        let proc = TwoBoundaryProcess::new(plus(), e(2, 0), z_schedule()).unwrap();
        assert!(matches!(
            proc.history_amplitude(&[2]),
            Err(Error::OutcomeOutOfRange { .. })
        ));
        assert!(matches!(
            proc.history_amplitude(&[0, 0]),
            Err(Error::OutcomeCount { .. })
        ));
        assert!(matches!(
            TwoBoundaryProcess::new(e(3, 0), e(2, 0), z_schedule()),
            Err(Error::DimensionMismatch { .. })
        ));
        let mixed = TwoBoundaryProcess::with_boundary(
            plus(),
            FinalBoundary::basis_average(2).unwrap(),
            z_schedule(),
        )
        .unwrap();
        assert!(matches!(
            mixed.history_amplitude(&[0]),
            Err(Error::MixedBoundary)
        ));
    }

    #[test]
    fn probability_examples() {
        let proc = TwoBoundaryProcess::new(plus(), e(2, 0), z_schedule()).unwrap();
        assert_abs_diff_eq!(
            proc.history_probability(&[0]).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        let proc = TwoBoundaryProcess::new(plus(), plus(), z_schedule()).unwrap();
        assert_abs_diff_eq!(
            proc.history_probability(&[0]).unwrap(),
            0.5,
            epsilon = 1e-15
        );
    }

    #[test]
    fn impossible_post_selection() {
        // measuring in z between orthogonal x states is fine (weight 1/2),
        // but an orthogonal final state with no measurements is not
        let proc = TwoBoundaryProcess::new(e(2, 0), e(2, 1), Schedule::new(2)).unwrap();
        assert!(matches!(
            proc.history_probability(&[]),
            Err(Error::ImpossiblePostSelection { .. })
        ));
        let x = Unitary::new(Operator::pauli_x()).unwrap();
        let sched = Schedule::new(2)
            .evolve(x)
            .unwrap()
            .measure(MeasurementEvent::computational(2).unwrap())
            .unwrap();
        let proc = TwoBoundaryProcess::new(e(2, 0), e(2, 0), sched).unwrap();
        assert!(matches!(
            proc.history_probability(&[1]),
            Err(Error::ImpossiblePostSelection { .. })
        ));
    }

    #[test]
    fn amplitude_ratio_is_not_a_probability() {
        let proc = TwoBoundaryProcess::new(plus(), plus(), z_schedule()).unwrap();
        // ⟨+|P₀|+⟩ / ⟨+|+⟩ = 1/2 for each outcome; ratios sum to 1 but their
        // squares do not
        let r0 = proc.amplitude_ratio(&[0]).unwrap();
        let r1 = proc.amplitude_ratio(&[1]).unwrap();
        assert_abs_diff_eq!((r0 + r1).re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r0.norm_sqr() + r1.norm_sqr(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn measurement_validation() {
        let p0 = Projector::onto_basis(2, &[0]).unwrap();
        assert!(matches!(
            MeasurementEvent::new(vec![p0.clone()]),
            Err(Error::InvalidMeasurement(_))
        ));
        assert!(matches!(
            MeasurementEvent::new(vec![p0.clone(), p0.clone()]),
            Err(Error::InvalidMeasurement(_))
        ));
        assert!(MeasurementEvent::new(vec![]).is_err());
        assert_eq!(MeasurementEvent::binary(p0).unwrap().len(), 2);
        assert!(MeasurementEvent::from_partition(3, &[vec![0], vec![1, 2]]).is_ok());
        assert!(MeasurementEvent::from_partition(3, &[vec![0], vec![1]]).is_err());
    }

    #[test]
    fn shift_examples() {
        let p0 = Projector::onto_basis(2, &[0]).unwrap();
        assert_eq!(shift_projection(&p0, &Unitary::identity(2)).unwrap(), p0);
        let x = Unitary::new(Operator::pauli_x()).unwrap();
        let shifted = shift_projection(&p0, &x).unwrap();
        let p1 = Projector::onto_basis(2, &[1]).unwrap();
        assert!(shifted.operator().max_abs_diff(p1.operator()).unwrap() < 1e-15);
        assert!(shift_projection(&p0, &Unitary::identity(3)).is_err());
    }

    #[test]
    fn shift_identity_random_dim6() {
        let mut rng = SeededRng::new(3);
        let u1 = rng.random_unitary(6).unwrap();
        let u2 = rng.random_unitary(6).unwrap();
        let p = rng.random_state(6).unwrap().projector().unwrap();
        let shifted = shift_projection(&p, &u2).unwrap();
        let lhs = u1.operator() * &(p.operator() * u2.operator());
        let rhs = u1.operator() * &(u2.operator() * shifted.operator());
        assert!(lhs.max_abs_diff(&rhs).unwrap() <= 1e-12);
    }

    #[test]
    fn collapse_examples() {
        let p0 = Projector::onto_basis(2, &[0]).unwrap();
        assert!(
            collapse(&plus(), &p0)
                .unwrap()
                .max_abs_diff(&e(2, 0))
                .unwrap()
                < 1e-15
        );
        assert_eq!(collapse(&e(2, 0), &p0).unwrap(), e(2, 0));
        assert!(matches!(
            collapse(&e(2, 1), &p0),
            Err(Error::NoSupport { .. })
        ));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let sched = z_schedule()
            .measure(MeasurementEvent::computational(2).unwrap())
            .unwrap();
        let mut seen = Vec::new();
        sched
            .for_each_history(&plus(), 16, |o, _| seen.push(o.to_vec()))
            .unwrap();
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(matches!(
            sched.for_each_history(&plus(), 3, |_, _| {}),
            Err(Error::EnumerationCap {
                required: 4,
                cap: 3
            })
        ));
    }
}
