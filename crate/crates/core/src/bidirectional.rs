//! Bang/crunch universe with a forward epoch `[0, T_match]` and a backward
//! epoch `[T_match, T_crunch]` that share one border state.
//!
//! Each forward measurement at time `t` is mirrored by a backward measurement
//! at `T_crunch − t`, and a matched history uses the same outcome on both
//! sides of the border.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hilbert::{Projector, SeededRng, StateVector, C64, CONSTRUCTION_TOL};
use crate::two_boundary::{MeasurementEvent, Schedule, Step};

/// Samples handled by one random stream in the Monte Carlo experiments.
/// Fixed so that results do not depend on the number of worker threads.
pub const CHUNK: usize = 1024;

#[derive(Debug, Clone)]
pub struct BidirectionalUniverse {
    bang: StateVector,
    crunch: StateVector,
    forward: Schedule,
    backward: Schedule,
    /// `(forward event, backward event)`, ordered by forward event.
    pairs: Vec<(usize, usize)>,
    /// Projector at `T_match`; `None` is the identity (continuity).
    border: Option<Projector>,
}

impl BidirectionalUniverse {
    /// Mirrored pairing: forward event `i` of `n` pairs with backward event
    /// `n − 1 − i`, so the event nearest the border pairs with its mirror
    /// image just after it.
    pub fn new(
        bang: StateVector,
        crunch: StateVector,
        forward: Schedule,
        backward: Schedule,
    ) -> Result<Self> {
        let n = forward.n_measurements();
        let pairs = (0..n).map(|i| (i, n.saturating_sub(1 + i))).collect();
        Self::with_pairs(bang, crunch, forward, backward, pairs)
    }

    pub fn with_pairs(
        bang: StateVector,
        crunch: StateVector,
        forward: Schedule,
        backward: Schedule,
        mut pairs: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let dim = forward.dim();
        for d in [bang.dim(), crunch.dim(), backward.dim()] {
            if d != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: d,
                });
            }
        }
        let fwd: Vec<&MeasurementEvent> = forward.measurements().collect();
        let bwd: Vec<&MeasurementEvent> = backward.measurements().collect();
        if fwd.len() != bwd.len() || pairs.len() != fwd.len() {
            return Err(Error::InvalidParameter {
                name: "pairs",
                reason: format!(
                    "{} forward and {} backward events need a one-to-one pairing, got {} pairs",
                    fwd.len(),
                    bwd.len(),
                    pairs.len()
                ),
            });
        }
        pairs.sort_unstable();
        let mut used = vec![false; bwd.len()];
        for (i, &(f, b)) in pairs.iter().enumerate() {
            if f != i || b >= bwd.len() || std::mem::replace(&mut used[b], true) {
                return Err(Error::InvalidParameter {
                    name: "pairs",
                    reason: format!("pair ({f}, {b}) is not a bijection"),
                });
            }
            if !same_event(fwd[f], bwd[b]) {
                return Err(Error::InvalidParameter {
                    name: "pairs",
                    reason: format!(
                        "forward event {f} and backward event {b} have different projectors"
                    ),
                });
            }
        }
        Ok(Self {
            bang,
            crunch,
            forward,
            backward,
            pairs,
            border: None,
        })
    }

    /// Replaces the continuity border with an explicit matching projector.
    pub fn with_border(mut self, border: Projector) -> Result<Self> {
        if border.dim() != self.forward.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.forward.dim(),
                found: border.dim(),
            });
        }
        self.border = Some(border);
        Ok(self)
    }

    pub fn n_pairs(&self) -> usize {
        self.pairs.len()
    }

    /// `⟨crunch| S_backward · P_match · S_forward |bang⟩` with outcome `k`
    /// inserted at both members of each mirrored pair.
    pub fn matched_history_amplitude(&self, outcomes: &[usize]) -> Result<C64> {
        if outcomes.len() != self.pairs.len() {
            return Err(Error::OutcomeCount {
                expected: self.pairs.len(),
                found: outcomes.len(),
            });
        }
        let mut backward_outcomes = vec![0; outcomes.len()];
        for (&(_, b), &k) in self.pairs.iter().zip(outcomes) {
            backward_outcomes[b] = k;
        }
        let mut psi = self.forward.propagate(&self.bang, outcomes)?;
        if let Some(border) = &self.border {
            psi = border.apply(&psi)?;
        }
        psi = self.backward.propagate(&psi, &backward_outcomes)?;
        self.crunch.inner(&psi)
    }
}

fn same_event(a: &MeasurementEvent, b: &MeasurementEvent) -> bool {
    a.len() == b.len()
        && a.projectors().iter().zip(b.projectors()).all(|(p, q)| {
            p.operator()
                .max_abs_diff(q.operator())
                .is_ok_and(|d| d <= CONSTRUCTION_TOL)
        })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BornEmergence {
    pub theta: f64,
    pub samples: usize,
    pub up_count: usize,
    pub empirical_p: f64,
}

/// Per sample, a spin at angle `theta` crosses a mirrored universe: a z
/// measurement, an unknown Haar-random evolution `V` up to the border, a
/// Haar-random border state `|b⟩`, and the reversed evolution `V†` down to
/// the mirrored z measurement. The matched weight of outcome `k` is the
/// chain amplitude `⟨s|P_k V†|b⟩⟨b|V P_k|s⟩ = |⟨b|V P_k|s⟩|²`; the larger
/// weight wins (ties go to "up").
pub fn born_emergence_experiment(theta: f64, samples: usize, seed: u64) -> Result<BornEmergence> {
    if samples == 0 {
        return Err(Error::InvalidParameter {
            name: "samples",
            reason: "must be at least 1".into(),
        });
    }
    let spin = StateVector::spin(theta);
    let z = MeasurementEvent::computational(2)?;
    let n_chunks = samples.div_ceil(CHUNK);
    let up_count = (0..n_chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = SeededRng::stream(seed, chunk as u64);
            let len = CHUNK.min(samples - chunk * CHUNK);
            let mut ups = 0usize;
            for _ in 0..len {
                if born_sample(&spin, &z, &mut rng)? {
                    ups += 1;
                }
            }
            Ok(ups)
        })
        .collect::<Result<Vec<usize>>>()?
        .into_iter()
        .sum();
    Ok(BornEmergence {
        theta,
        samples,
        up_count,
        empirical_p: up_count as f64 / samples as f64,
    })
}

fn born_sample(spin: &StateVector, z: &MeasurementEvent, rng: &mut SeededRng) -> Result<bool> {
    let v = rng.random_unitary(2)?;
    let border = rng.random_state(2)?.projector()?;
    let forward = Schedule::from_steps(2, vec![Step::Measure(z.clone()), Step::Evolve(v.clone())])?;
    let backward =
        Schedule::from_steps(2, vec![Step::Evolve(v.adjoint()), Step::Measure(z.clone())])?;
    let universe = BidirectionalUniverse::new(spin.clone(), spin.clone(), forward, backward)?
        .with_border(border)?;
    let up = universe.matched_history_amplitude(&[0])?.norm();
    let down = universe.matched_history_amplitude(&[1])?.norm();
    Ok(up >= down)
}

/// Statistical model of competing matched histories: `k` candidates whose
/// log10 weights are i.i.d. `Normal(−h, √h)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominanceModel {
    h: f64,
    k: usize,
    seed: u64,
}

impl DominanceModel {
    pub fn new(h: f64, k: usize, seed: u64) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "h",
                reason: format!("must be positive and finite, got {h}"),
            });
        }
        if k < 2 {
            return Err(Error::InvalidParameter {
                name: "k",
                reason: format!("must be at least 2, got {k}"),
            });
        }
        Ok(Self { h, k, seed })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dominance {
    pub trials: usize,
    pub dominant: usize,
    pub fraction: f64,
}

/// Log10 gap that counts as dominance: a factor of 100 between the two
/// largest weights.
pub const DOMINANCE_GAP: f64 = 2.0;

pub fn dominance_experiment(model: &DominanceModel, trials: usize) -> Result<Dominance> {
    if trials == 0 {
        return Err(Error::InvalidParameter {
            name: "trials",
            reason: "must be at least 1".into(),
        });
    }
    let sigma = model.h.sqrt();
    let n_chunks = trials.div_ceil(CHUNK);
    let dominant: usize = (0..n_chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = SeededRng::stream(model.seed, chunk as u64);
            let len = CHUNK.min(trials - chunk * CHUNK);
            (0..len)
                .filter(|_| {
                    let (mut top, mut second) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
                    for _ in 0..model.k {
                        let w = -model.h + sigma * rng.normal();
                        if w > top {
                            second = top;
                            top = w;
                        } else if w > second {
                            second = w;
                        }
                    }
                    top - second >= DOMINANCE_GAP
                })
                .count()
        })
        .sum();
    Ok(Dominance {
        trials,
        dominant,
        fraction: dominant as f64 / trials as f64,
    })
}

/// Amplitudes of the same process between slightly different boundaries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CptAmplitudePair {
    pub a: C64,
    pub a_prime: C64,
}

/// `|conj(a)·a′ − a·conj(a′)| = 2|Im(conj(a)·a′)|`, with CPT acting on an
/// amplitude as complex conjugation.
pub fn cpt_asymmetry(pair: CptAmplitudePair) -> f64 {
    let CptAmplitudePair { a, a_prime } = pair;
    (a.conj() * a_prime - a * a_prime.conj()).norm()
}
