//! Models of four thought experiments: two-photon exchange interference,
//! two antennae in a mirrored ellipse with a dark spot, the traceless
//! Stern-Gerlach loop, and a Schrödinger cat with a leaking witness.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::hilbert::{Operator, Projector, StateVector, Tensor, Unitary, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistics {
    Boson,
    Fermion,
}

impl Statistics {
    fn sign(self) -> f64 {
        match self {
            Statistics::Boson => 1.0,
            Statistics::Fermion => -1.0,
        }
    }
}

/// Single-particle amplitudes `a_ij` from creation region `i ∈ {1, 2}` to
/// absorption region `j ∈ {3, 4}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HbtConfig {
    pub a13: C64,
    pub a14: C64,
    pub a23: C64,
    pub a24: C64,
    pub statistics: Statistics,
}

/// `|a13·a24 ± a14·a23|²`: direct and exchange contributions added
/// (bosons) or subtracted (fermions) before squaring.
pub fn hbt_rate(cfg: &HbtConfig) -> f64 {
    (cfg.a13 * cfg.a24 + cfg.a14 * cfg.a23 * cfg.statistics.sign()).norm_sqr()
}

/// A dark arc on the mirror, as fractions of the perimeter measured
/// counter-clockwise from the end of the major axis. Arcs may wrap past 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DarkArc {
    pub start: f64,
    pub length: f64,
}

impl DarkArc {
    /// Arc of the given length centred on the top of the ellipse (perimeter
    /// fraction 1/4), symmetric about the minor axis.
    pub fn centered(length: f64) -> Self {
        Self {
            start: (0.25 - length / 2.0).rem_euclid(1.0),
            length,
        }
    }

    /// Length of `[lo, hi] ⊂ [0, 1]` covered by the arc.
    fn covered(&self, lo: f64, hi: f64) -> f64 {
        (-1..=1)
            .map(|m| {
                let s = self.start + m as f64;
                (hi.min(s + self.length) - lo.max(s)).max(0.0)
            })
            .sum()
    }

    fn overlaps(&self, other: &DarkArc) -> bool {
        let ahead = (other.start - self.start).rem_euclid(1.0);
        let behind = (self.start - other.start).rem_euclid(1.0);
        self.length > 0.0 && other.length > 0.0 && (ahead < self.length || behind < other.length)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EllipsoidConfig {
    pub semi_major: f64,
    pub semi_minor: f64,
    pub wavenumber: f64,
    pub n_surface: usize,
    pub dark_spots: Vec<DarkArc>,
    /// Phase of the second antenna relative to the first, radians.
    pub relative_phase: f64,
    /// Weight each bounce path by `1/√(r₁ r₂)` instead of uniformly.
    pub inverse_distance_weighting: bool,
}

pub const MIN_SURFACE_POINTS: usize = 64;

impl EllipsoidConfig {
    fn validate(&self) -> Result<()> {
        if !(self.semi_minor > 0.0
            && self.semi_major > self.semi_minor
            && self.semi_major.is_finite())
        {
            return Err(Error::InvalidParameter {
                name: "semi_major",
                reason: format!(
                    "degenerate ellipse a = {}, b = {}: need a > b > 0",
                    self.semi_major, self.semi_minor
                ),
            });
        }
        if self.n_surface < MIN_SURFACE_POINTS {
            return Err(Error::InvalidParameter {
                name: "n_surface",
                reason: format!(
                    "need at least {MIN_SURFACE_POINTS} points, got {}",
                    self.n_surface
                ),
            });
        }
        if !self.wavenumber.is_finite() || !self.relative_phase.is_finite() {
            return Err(Error::InvalidParameter {
                name: "wavenumber",
                reason: "must be finite".into(),
            });
        }
        for (i, arc) in self.dark_spots.iter().enumerate() {
            if !(0.0..=1.0).contains(&arc.length) || !arc.start.is_finite() {
                return Err(Error::InvalidParameter {
                    name: "dark_spots",
                    reason: format!("arc {i} has length {} outside [0, 1]", arc.length),
                });
            }
            for (j, other) in self.dark_spots.iter().enumerate().skip(i + 1) {
                if arc.overlaps(other) {
                    return Err(Error::InvalidParameter {
                        name: "dark_spots",
                        reason: format!("arcs {i} and {j} overlap"),
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipsoidOutcome {
    /// Non-interfering part of the two-photon counting rate.
    pub rate_direct: f64,
    /// Cross term between the direct and the mirror-exchange assignments.
    pub rate_interference: f64,
    pub total_rate: f64,
    /// `rate_interference / rate_direct`: relative change of the emission
    /// probability caused by the reflecting part of the mirror.
    pub emission_probability_shift: f64,
    /// Fraction of the perimeter that is dark.
    pub dark_coverage: f64,
    /// Modulus of the normalized sum over reflected paths (1 when every
    /// reflected path is in phase and none is blocked).
    pub path_coherence: f64,
}

/// Antennae at the two foci `(±c, 0)` each emit one photon; the photons are
/// absorbed at the opposite focus. The direct assignment is a reference
/// amplitude with the focal phase `e^{2ika}`. The exchange assignment sums
/// focus → mirror point → focus paths over the discretized boundary with
/// phase `e^{ikℓ}` times the antenna phase `e^{iφ}`. Paths hitting a dark
/// arc end there: they still count as emissions but no longer interfere.
///
/// With uniform weights this gives
/// `total_rate = rate_direct · (1 + (1 − f) cos φ)` for dark coverage `f`,
/// because every bounce path has the same length `2a`.
pub fn ellipsoid_experiment(cfg: &EllipsoidConfig) -> Result<EllipsoidOutcome> {
    cfg.validate()?;
    let (a, b) = (cfg.semi_major, cfg.semi_minor);
    let c = (a * a - b * b).sqrt();
    let boundary = discretize_ellipse(a, b, cfg.n_surface);
    let reference = C64::from_polar(1.0, cfg.wavenumber * 2.0 * a);
    path_sum(&boundary, (-c, 0.0), (c, 0.0), cfg, reference)
}

struct BoundaryCell {
    x: f64,
    y: f64,
    /// Arclength share of the cell, summing to 1.
    weight: f64,
    /// Perimeter fraction where the cell starts.
    position: f64,
}

/// Midpoint samples in the parameter angle, weighted by arclength.
fn discretize_ellipse(a: f64, b: f64, n: usize) -> Vec<BoundaryCell> {
    let dt = TAU / n as f64;
    let speeds: Vec<f64> = (0..n)
        .map(|j| {
            let t = (j as f64 + 0.5) * dt;
            (a * a * t.sin().powi(2) + b * b * t.cos().powi(2)).sqrt()
        })
        .collect();
    let perimeter: f64 = speeds.iter().sum();
    let mut position = 0.0;
    speeds
        .iter()
        .enumerate()
        .map(|(j, speed)| {
            let t = (j as f64 + 0.5) * dt;
            let weight = speed / perimeter;
            let cell = BoundaryCell {
                x: a * t.cos(),
                y: b * t.sin(),
                weight,
                position,
            };
            position += weight;
            cell
        })
        .collect()
}

fn path_sum(
    boundary: &[BoundaryCell],
    source: (f64, f64),
    sink: (f64, f64),
    cfg: &EllipsoidConfig,
    reference: C64,
) -> Result<EllipsoidOutcome> {
    let dist = |p: (f64, f64), q: (f64, f64)| ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt();
    let gains: Vec<f64> = boundary
        .iter()
        .map(|cell| {
            if cfg.inverse_distance_weighting {
                1.0 / (dist(source, (cell.x, cell.y)) * dist((cell.x, cell.y), sink)).sqrt()
            } else {
                1.0
            }
        })
        .collect();
    // normalize so that the incoherent exchange intensity Σ w g² is 1
    let norm = boundary
        .iter()
        .zip(&gains)
        .map(|(cell, g)| cell.weight * g * g)
        .sum::<f64>()
        .sqrt();

    let mut exchange = C64::new(0.0, 0.0);
    let mut all_paths = C64::new(0.0, 0.0);
    let mut comp = C64::new(0.0, 0.0);
    let mut dark = 0.0;
    for (cell, g) in boundary.iter().zip(&gains) {
        let lo = cell.position;
        let hi = (cell.position + cell.weight).min(1.0);
        let covered: f64 = cfg.dark_spots.iter().map(|arc| arc.covered(lo, hi)).sum();
        let open = if covered >= (hi - lo) * (1.0 - 1e-9) {
            0.0
        } else {
            1.0 - covered / (hi - lo)
        };
        dark += cell.weight * (1.0 - open);
        let p = (cell.x, cell.y);
        let length = dist(source, p) + dist(p, sink);
        let term = C64::from_polar(cell.weight * g / norm, cfg.wavenumber * length);
        all_paths += term;
        if open > 0.0 {
            // Kahan summation keeps the sum independent of cell order to ~1e-16
            let y = term * open - comp;
            let t = exchange + y;
            comp = (t - exchange) - y;
            exchange = t;
        }
    }

    let direct_intensity = reference.norm_sqr();
    let exchange_intensity = 1.0;
    let rate_direct = 0.5 * (direct_intensity + exchange_intensity);
    let antenna = C64::from_polar(1.0, cfg.relative_phase);
    let rate_interference = (reference.conj() * antenna * exchange).re;
    Ok(EllipsoidOutcome {
        rate_direct,
        rate_interference,
        total_rate: rate_direct + rate_interference,
        emission_probability_shift: rate_interference / rate_direct,
        dark_coverage: dark,
        path_coherence: all_paths.norm(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SternGerlachOutcome {
    /// Recombined spin state; only present when no witness is attached.
    pub output: Option<StateVector>,
    /// Reduced spin density after recombination.
    pub reduced: Operator,
    /// `⟨input|ρ|input⟩`.
    pub return_fidelity: f64,
}

/// Splits a spin along z into two paths and recombines them. With
/// `with_witness`, the lower path leaves an orthogonal record in a witness
/// qubit before recombination.
pub fn stern_gerlach_recombine(
    input: &StateVector,
    with_witness: bool,
) -> Result<SternGerlachOutcome> {
    let witness = with_witness.then_some(C64::new(0.0, 0.0));
    stern_gerlach_with_witness(input, witness)
}

/// Like [`stern_gerlach_recombine`] with a witness whose two path records
/// overlap by `⟨w₀|w₁⟩ = c`; `None` means no witness at all.
pub fn stern_gerlach_with_witness(
    input: &StateVector,
    witness_overlap: Option<C64>,
) -> Result<SternGerlachOutcome> {
    if input.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: input.dim(),
        });
    }
    let mut spin_in = input.clone();
    spin_in.normalize()?;

    let id = Operator::identity(2);
    let up = Projector::onto_basis(2, &[0])?;
    let down = Projector::onto_basis(2, &[1])?;
    // spin ⊗ path ⊗ witness
    let split = Unitary::new(
        up.operator()
            .tensor(&id)
            .tensor(&id)
            .add(&down.operator().tensor(&Operator::pauli_x()).tensor(&id))?,
    )?;
    let record = witness_rotation(witness_overlap.unwrap_or(C64::new(1.0, 0.0)))?;
    let imprint = Unitary::new(
        id.tensor(up.operator())
            .tensor(&id)
            .add(&id.tensor(down.operator()).tensor(record.operator()))?,
    )?;

    let e0 = StateVector::basis(2, 0)?;
    let mut psi = spin_in.tensor(&e0).tensor(&e0);
    for u in [&split, &imprint, &split] {
        psi = u.apply(&psi)?;
    }
    let reduced = psi.density().partial_trace(0, &[2, 2, 2])?;
    let return_fidelity = spin_in.inner(&reduced.apply(&spin_in)?)?.re;
    let output = if witness_overlap.is_none() {
        // path and witness are back in |0⟩|0⟩
        Some(StateVector::new(vec![psi.amps()[0], psi.amps()[4]])?)
    } else {
        None
    };
    Ok(SternGerlachOutcome {
        output,
        reduced,
        return_fidelity,
    })
}

/// Unitary sending `|0⟩` to `c|0⟩ + √(1 − |c|²)|1⟩`.
fn witness_rotation(c: C64) -> Result<Unitary> {
    if c.norm() > 1.0 + 1e-12 {
        return Err(Error::InvalidParameter {
            name: "witness_overlap",
            reason: format!("|c| = {} exceeds 1", c.norm()),
        });
    }
    let s = C64::new((1.0 - c.norm_sqr()).max(0.0).sqrt(), 0.0);
    Unitary::new(Operator::from_rows(&[vec![c, -s], vec![s, c.conj()]])?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessConfig {
    /// `⟨w_live|w_dead⟩`.
    pub witness_overlap: C64,
}

/// Coherence `2|ρ_live,dead|` of the cat after tracing out a witness that
/// records the branch in states overlapping by `c`. Equals `|c|`.
pub fn cat_witness_coherence(cfg: &WitnessConfig) -> Result<f64> {
    let c = cfg.witness_overlap;
    let w_live = StateVector::basis(2, 0)?;
    let w_dead = witness_rotation(c)?.apply(&w_live)?;
    let live = StateVector::basis(2, 0)?.tensor(&w_live);
    let dead = StateVector::basis(2, 1)?.tensor(&w_dead);
    let cat = StateVector::normalized(
        live.amps()
            .iter()
            .zip(dead.amps())
            .map(|(x, y)| x + y)
            .collect(),
    )?;
    let reduced = cat.density().partial_trace(0, &[2, 2])?;
    Ok(2.0 * reduced.entry(0, 1).norm())
}
