//! Dense complex linear algebra over small Hilbert spaces.
//!
//! Composite spaces use row-major indexing with the first factor most
//! significant: in `a ⊗ b` the amplitude of `|i⟩⊗|j⟩` lives at `i * b.dim() + j`.

use std::ops::Mul;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

pub use num_complex::Complex64 as C64;

/// Tolerance for structural checks performed at construction time.
pub const CONSTRUCTION_TOL: f64 = 1e-10;
/// Tolerance for equality assertions between computed quantities.
pub const EQUALITY_TOL: f64 = 1e-12;

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// A vector of complex amplitudes. Not necessarily normalized: intermediate
/// (projected) states keep their weight.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: DVector<C64>,
}

impl StateVector {
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::EmptyDimension);
        }
        Ok(Self {
            amps: DVector::from_vec(amps),
        })
    }

    /// Builds from real amplitudes.
    pub fn from_reals(amps: &[f64]) -> Result<Self> {
        Self::new(amps.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Builds and normalizes in one go.
    pub fn normalized(amps: Vec<C64>) -> Result<Self> {
        let mut s = Self::new(amps)?;
        s.normalize()?;
        Ok(s)
    }

    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        if k >= dim {
            return Err(Error::InvalidParameter {
                name: "k",
                reason: format!("basis index {k} out of range for dimension {dim}"),
            });
        }
        let mut amps = vec![C64::new(0.0, 0.0); dim];
        amps[k] = C64::new(1.0, 0.0);
        Self::new(amps)
    }

    /// Uniform superposition `Σ_k |k⟩ / √dim`.
    pub fn uniform(dim: usize) -> Result<Self> {
        Self::normalized(vec![C64::new(1.0, 0.0); dim])
    }

    /// Spin-1/2 state at polar angle `theta` from the z axis, azimuth zero.
    pub fn spin(theta: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        Self {
            amps: DVector::from_vec(vec![C64::new(c, 0.0), C64::new(s, 0.0)]),
        }
    }

    pub(crate) fn from_dvector(amps: DVector<C64>) -> Self {
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[C64] {
        self.amps.as_slice()
    }

    pub fn as_dvector(&self) -> &DVector<C64> {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Rescales to unit norm. A zero vector cannot be normalized.
    pub fn normalize(&mut self) -> Result<()> {
        let n = self.norm();
        if n <= EQUALITY_TOL {
            return Err(Error::NoSupport { norm: n });
        }
        self.amps.unscale_mut(n);
        Ok(())
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            amps: &self.amps * factor,
        }
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.amps.dotc(&other.amps))
    }

    /// `|self⟩⟨other|`.
    pub fn outer(&self, other: &StateVector) -> Operator {
        Operator {
            m: &self.amps * other.amps.adjoint(),
        }
    }

    /// Rank-one projector onto the normalized direction of `self`.
    pub fn projector(&self) -> Result<Projector> {
        let mut unit = self.clone();
        unit.normalize()?;
        Projector::new(unit.outer(&unit))
    }

    pub fn density(&self) -> Operator {
        self.outer(self)
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        check_dim(self.dim(), other.dim())?;
        Ok(self
            .amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Dense square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    m: DMatrix<C64>,
}

impl Operator {
    pub fn from_matrix(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() == 0 {
            return Err(Error::EmptyDimension);
        }
        check_dim(m.nrows(), m.ncols())?;
        Ok(Self { m })
    }

    /// Row-major entries; `rows.len()` sets the dimension.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        for r in rows {
            check_dim(dim, r.len())?;
        }
        Ok(Self {
            m: DMatrix::from_fn(dim, dim, |i, j| rows[i][j]),
        })
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> C64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        Ok(Self {
            m: DMatrix::from_fn(dim, dim, f),
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            m: DMatrix::identity(dim, dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            m: DMatrix::zeros(dim, dim),
        }
    }

    pub fn pauli_x() -> Self {
        let (o, l) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0));
        Self {
            m: DMatrix::from_row_slice(2, 2, &[o, l, l, o]),
        }
    }

    pub fn pauli_z() -> Self {
        let (o, l) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0));
        Self {
            m: DMatrix::from_row_slice(2, 2, &[l, o, o, -l]),
        }
    }

    pub fn hadamard() -> Self {
        let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            m: DMatrix::from_row_slice(2, 2, &[h, h, h, -h]),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.m[(row, col)]
    }

    pub fn adjoint(&self) -> Self {
        Self {
            m: self.m.adjoint(),
        }
    }

    pub fn trace(&self) -> C64 {
        self.m.trace()
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            m: &self.m * factor,
        }
    }

    pub fn add(&self, other: &Operator) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self {
            m: &self.m + &other.m,
        })
    }

    pub fn sub(&self, other: &Operator) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self {
            m: &self.m - &other.m,
        })
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Operator) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self {
            m: &self.m * &other.m,
        })
    }

    /// Matrix-vector product; no normalization is applied.
    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        check_dim(self.dim(), psi.dim())?;
        Ok(StateVector::from_dvector(&self.m * psi.as_dvector()))
    }

    /// Largest elementwise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Operator) -> Result<f64> {
        check_dim(self.dim(), other.dim())?;
        Ok(self
            .m
            .iter()
            .zip(other.m.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.adjoint()).expect("square")
    }

    pub fn unitarity_defect(&self) -> f64 {
        let gram = self.m.adjoint() * &self.m;
        (gram - DMatrix::<C64>::identity(self.dim(), self.dim()))
            .iter()
            .map(|a| a.norm())
            .fold(0.0, f64::max)
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let herm = (&self.m + self.m.adjoint()) * C64::new(0.5, 0.0);
        let mut ev: Vec<f64> = herm.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// Reduced operator on factor `keep` of a composite space with factor
    /// dimensions `dims`.
    pub fn partial_trace(&self, keep: usize, dims: &[usize]) -> Result<Operator> {
        let total: usize = dims.iter().product();
        if dims.is_empty() || total != self.dim() || dims.contains(&0) {
            return Err(Error::InconsistentFactors {
                dims: dims.to_vec(),
                total: self.dim(),
            });
        }
        if keep >= dims.len() {
            return Err(Error::SubsystemOutOfRange {
                index: keep,
                factors: dims.len(),
            });
        }
        let d_keep = dims[keep];
        let d_before: usize = dims[..keep].iter().product();
        let d_after: usize = dims[keep + 1..].iter().product();
        let idx = |b: usize, k: usize, a: usize| (b * d_keep + k) * d_after + a;
        let mut out = DMatrix::<C64>::zeros(d_keep, d_keep);
        for i in 0..d_keep {
            for j in 0..d_keep {
                let mut acc = C64::new(0.0, 0.0);
                for b in 0..d_before {
                    for a in 0..d_after {
                        acc += self.m[(idx(b, i, a), idx(b, j, a))];
                    }
                }
                out[(i, j)] = acc;
            }
        }
        Ok(Operator { m: out })
    }
}

impl Mul for &Operator {
    type Output = Operator;

    /// Panics on dimension mismatch; use [`Operator::compose`] for a checked product.
    fn mul(self, rhs: &Operator) -> Operator {
        self.compose(rhs).expect("operator dimensions must match")
    }
}

/// Kronecker product, shared by states and operators.
pub trait Tensor: Sized {
    fn tensor(&self, other: &Self) -> Self;

    /// Left fold over a nonempty list of factors.
    fn tensor_all(factors: &[Self]) -> Option<Self>
    where
        Self: Clone,
    {
        let (first, rest) = factors.split_first()?;
        Some(rest.iter().fold(first.clone(), |acc, f| acc.tensor(f)))
    }
}

impl Tensor for StateVector {
    fn tensor(&self, other: &Self) -> Self {
        StateVector::from_dvector(self.amps.kronecker(&other.amps))
    }
}

impl Tensor for Operator {
    fn tensor(&self, other: &Self) -> Self {
        Operator {
            m: self.m.kronecker(&other.m),
        }
    }
}

/// An operator verified to be unitary on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary(Operator);

impl Unitary {
    pub fn new(op: Operator) -> Result<Self> {
        let deviation = op.unitarity_defect();
        if deviation > CONSTRUCTION_TOL {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self(op))
    }

    pub fn identity(dim: usize) -> Self {
        Self(Operator::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn operator(&self) -> &Operator {
        &self.0
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        self.0.apply(psi)
    }

    pub fn compose(&self, other: &Unitary) -> Result<Self> {
        Ok(Self(self.0.compose(&other.0)?))
    }

    pub fn tensor(&self, other: &Unitary) -> Self {
        Self(self.0.tensor(&other.0))
    }
}

impl AsRef<Operator> for Unitary {
    fn as_ref(&self) -> &Operator {
        &self.0
    }
}

/// An orthogonal projector: Hermitian and idempotent.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector(Operator);

impl Projector {
    pub fn new(op: Operator) -> Result<Self> {
        let herm = op.hermiticity_defect();
        let idem = op.compose(&op)?.max_abs_diff(&op)?;
        let deviation = herm.max(idem);
        if deviation > CONSTRUCTION_TOL {
            return Err(Error::NotProjector { deviation });
        }
        Ok(Self(op))
    }

    /// Projector onto the span of the listed computational basis states.
    pub fn onto_basis(dim: usize, indices: &[usize]) -> Result<Self> {
        let mut m = Operator::zeros(dim);
        for &k in indices {
            if k >= dim {
                return Err(Error::InvalidParameter {
                    name: "indices",
                    reason: format!("basis index {k} out of range for dimension {dim}"),
                });
            }
            m.m[(k, k)] = C64::new(1.0, 0.0);
        }
        Projector::new(m)
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn operator(&self) -> &Operator {
        &self.0
    }

    /// `I − P`.
    pub fn complement(&self) -> Self {
        Self(
            Operator::identity(self.dim())
                .sub(&self.0)
                .expect("same dim"),
        )
    }

    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        self.0.apply(psi)
    }

    /// Conjugation by a unitary, `U† P U`. The result is again a projector.
    pub(crate) fn conjugated_by(&self, u: &Unitary) -> Result<Self> {
        let m = u
            .operator()
            .adjoint()
            .compose(&self.0)?
            .compose(u.operator())?;
        Ok(Self(m))
    }
}

impl AsRef<Operator> for Projector {
    fn as_ref(&self) -> &Operator {
        &self.0
    }
}

/// Deterministic random source: ChaCha20 keyed by a 64-bit seed
/// (`ChaCha20Rng::seed_from_u64`). Independent streams for parallel workers
/// are selected with ChaCha's 64-bit stream id.
#[derive(Debug, Clone)]
pub struct SeededRng {
    seed: u64,
    inner: ChaCha20Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha20Rng::seed_from_u64(seed),
        }
    }

    /// Stream `index` derived from `seed`; stream 0 equals [`SeededRng::new`].
    pub fn stream(seed: u64, index: u64) -> Self {
        let mut inner = ChaCha20Rng::seed_from_u64(seed);
        inner.set_stream(index);
        Self { seed, inner }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn uniform(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.inner.random_range(0..n)
    }

    pub fn normal(&mut self) -> f64 {
        self.inner.sample(StandardNormal)
    }

    /// Circularly symmetric complex Gaussian with `E|z|² = 1`.
    pub fn complex_gaussian(&mut self) -> C64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        C64::new(self.normal() * s, self.normal() * s)
    }

    /// Haar-uniform pure state.
    pub fn random_state(&mut self, dim: usize) -> Result<StateVector> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        loop {
            let amps: Vec<C64> = (0..dim).map(|_| self.complex_gaussian()).collect();
            let mut s = StateVector::new(amps)?;
            if s.normalize().is_ok() {
                return Ok(s);
            }
        }
    }

    /// Haar-uniform unitary: modified Gram-Schmidt on the columns of a
    /// complex Gaussian matrix. Gram-Schmidt yields the QR factor with a
    /// positive real diagonal of R, which is the phase convention that makes
    /// the distribution Haar.
    pub fn random_unitary(&mut self, dim: usize) -> Result<Unitary> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        let g = DMatrix::from_fn(dim, dim, |_, _| self.complex_gaussian());
        let mut q = DMatrix::<C64>::zeros(dim, dim);
        for j in 0..dim {
            let mut v = g.column(j).into_owned();
            for _ in 0..2 {
                // second pass restores orthogonality lost to rounding
                for i in 0..j {
                    let qi = q.column(i);
                    let proj = qi.dotc(&v);
                    v -= qi * proj;
                }
            }
            let n = v.norm();
            q.set_column(j, &(v / C64::new(n, 0.0)));
        }
        Unitary::new(Operator { m: q })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn inner_products() {
        let e0 = StateVector::basis(2, 0).unwrap();
        let e1 = StateVector::basis(2, 1).unwrap();
        let plus = StateVector::from_reals(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]).unwrap();
        assert_eq!(e0.inner(&e0).unwrap(), c(1.0, 0.0));
        assert_eq!(e0.inner(&e1).unwrap(), c(0.0, 0.0));
        assert_abs_diff_eq!(plus.inner(&e0).unwrap().re, FRAC_1_SQRT_2, epsilon = 1e-15);
        let e3 = StateVector::basis(3, 0).unwrap();
        assert!(matches!(
            e0.inner(&e3),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inner_is_antilinear_in_bra() {
        let a = StateVector::new(vec![c(0.0, 1.0)]).unwrap();
        let b = StateVector::new(vec![c(1.0, 0.0)]).unwrap();
        assert_eq!(a.inner(&b).unwrap(), c(0.0, -1.0));
    }

    #[test]
    fn apply_basics() {
        let e0 = StateVector::basis(2, 0).unwrap();
        let e1 = StateVector::basis(2, 1).unwrap();
        let plus = StateVector::from_reals(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]).unwrap();
        assert_eq!(Operator::identity(2).apply(&plus).unwrap(), plus);
        assert_eq!(Operator::pauli_x().apply(&e0).unwrap(), e1);
        let p0 = Projector::onto_basis(2, &[0]).unwrap();
        let out = p0.apply(&plus).unwrap();
        assert_abs_diff_eq!(out.norm(), FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(out.amps()[0].re, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert!(Operator::identity(3).apply(&plus).is_err());
    }

    #[test]
    fn tensor_layout() {
        let e0 = StateVector::basis(2, 0).unwrap();
        let e1 = StateVector::basis(2, 1).unwrap();
        assert_eq!(e0.tensor(&e0), StateVector::basis(4, 0).unwrap());
        assert_eq!(e0.tensor(&e1), StateVector::basis(4, 1).unwrap());
        assert_eq!(e1.tensor(&e0), StateVector::basis(4, 2).unwrap());
        assert_eq!(
            Operator::identity(2).tensor(&Operator::identity(2)),
            Operator::identity(4)
        );
    }

    #[test]
    fn partial_trace_bell_and_product() {
        let bell = StateVector::from_reals(&[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]).unwrap();
        let reduced = bell.density().partial_trace(0, &[2, 2]).unwrap();
        let half = Operator::identity(2).scale(c(0.5, 0.0));
        assert!(reduced.max_abs_diff(&half).unwrap() < EQUALITY_TOL);

        let mut rng = SeededRng::new(2);
        let ra = rng.random_state(3).unwrap().density();
        let rb = rng.random_state(2).unwrap().density();
        let joint = ra.tensor(&rb);
        assert!(
            joint
                .partial_trace(0, &[3, 2])
                .unwrap()
                .max_abs_diff(&ra)
                .unwrap()
                < EQUALITY_TOL
        );
        assert!(
            joint
                .partial_trace(1, &[3, 2])
                .unwrap()
                .max_abs_diff(&rb)
                .unwrap()
                < EQUALITY_TOL
        );
    }

    #[test]
    fn partial_trace_witness_coherence() {
        // hand expansion: ρ_A[0][1] = ½ ⟨w1|w0⟩ = conj(c)/2
        let cval = c(0.3, -0.4);
        let w0 = StateVector::basis(2, 0).unwrap();
        let w1 = StateVector::new(vec![cval, c((1.0 - cval.norm_sqr()).sqrt(), 0.0)]).unwrap();
        assert_abs_diff_eq!((w0.inner(&w1).unwrap() - cval).norm(), 0.0, epsilon = 1e-15);
        let e0 = StateVector::basis(2, 0).unwrap();
        let e1 = StateVector::basis(2, 1).unwrap();
        let a = e0.tensor(&w0);
        let b = e1.tensor(&w1);
        let psi =
            StateVector::normalized(a.amps().iter().zip(b.amps()).map(|(x, y)| x + y).collect())
                .unwrap();
        let reduced = psi.density().partial_trace(0, &[2, 2]).unwrap();
        assert!((reduced.entry(0, 1) - cval.conj() / 2.0).norm() < EQUALITY_TOL);
        assert!((reduced.entry(1, 0) - cval / 2.0).norm() < EQUALITY_TOL);
    }

    #[test]
    fn partial_trace_rejects_bad_dims() {
        let rho = Operator::identity(4);
        assert!(matches!(
            rho.partial_trace(0, &[3, 2]),
            Err(Error::InconsistentFactors { .. })
        ));
        assert!(matches!(
            rho.partial_trace(2, &[2, 2]),
            Err(Error::SubsystemOutOfRange { .. })
        ));
    }

    #[test]
    fn random_samples_are_valid() {
        let u = SeededRng::new(1).random_unitary(4).unwrap();
        assert!(u.operator().unitarity_defect() <= CONSTRUCTION_TOL);
        let s = SeededRng::new(7).random_state(3).unwrap();
        assert_abs_diff_eq!(s.norm(), 1.0, epsilon = 1e-12);
        assert!(matches!(
            SeededRng::new(0).random_state(0),
            Err(Error::EmptyDimension)
        ));
        assert!(matches!(
            SeededRng::new(0).random_unitary(0),
            Err(Error::EmptyDimension)
        ));
    }

    #[test]
    fn haar_state_first_moment() {
        // E|⟨e0|ψ⟩|² = 1/dim for Haar states
        let mut rng = SeededRng::new(2024);
        let e0 = StateVector::basis(2, 0).unwrap();
        let n = 100_000;
        let mean: f64 = (0..n)
            .map(|_| e0.inner(&rng.random_state(2).unwrap()).unwrap().norm_sqr())
            .sum::<f64>()
            / n as f64;
        assert_abs_diff_eq!(mean, 0.5, epsilon = 0.01);
    }

    #[test]
    fn haar_unitary_diagonal_moment() {
        // E|U_00|² = 1/dim; a biased phase convention would still pass this,
        // so also check E[U_00] ≈ 0.
        let mut rng = SeededRng::new(99);
        let n = 20_000;
        let mut sq = 0.0;
        let mut mean = C64::new(0.0, 0.0);
        for _ in 0..n {
            let u00 = rng.random_unitary(3).unwrap().operator().entry(0, 0);
            sq += u00.norm_sqr();
            mean += u00;
        }
        assert_abs_diff_eq!(sq / n as f64, 1.0 / 3.0, epsilon = 0.01);
        assert!((mean / n as f64).norm() < 0.02);
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<f64> = (0..8)
            .map({
                let mut r = SeededRng::stream(5, 3);
                move |_| r.uniform()
            })
            .collect();
        let b: Vec<f64> = (0..8)
            .map({
                let mut r = SeededRng::stream(5, 3);
                move |_| r.uniform()
            })
            .collect();
        let other: Vec<f64> = (0..8)
            .map({
                let mut r = SeededRng::stream(5, 4);
                move |_| r.uniform()
            })
            .collect();
        assert_eq!(a, b);
        assert_ne!(a, other);
    }

    #[test]
    fn non_unitary_and_non_projector_rejected() {
        let m = Operator::identity(2).scale(c(2.0, 0.0));
        assert!(matches!(
            Unitary::new(m.clone()),
            Err(Error::NotUnitary { .. })
        ));
        assert!(matches!(Projector::new(m), Err(Error::NotProjector { .. })));
        assert!(Projector::new(Operator::pauli_x()).is_err());
    }

    #[test]
    fn hermitian_eigenvalues_of_pauli_z() {
        let ev = Operator::pauli_z().hermitian_eigenvalues();
        assert_abs_diff_eq!(ev[0], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ev[1], 1.0, epsilon = 1e-12);
    }
}
