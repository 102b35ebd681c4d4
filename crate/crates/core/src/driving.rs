//! Closed-form three-level driving Hamiltonians.
//!
//! In the basis (φ1, φ2, φ3) the adiabatic Hamiltonian couples both lower
//! levels to the intermediate level φ3 only:
//! `(0,2) = η cosθ = η2`, `(1,2) = η sinθ = η1`. The MSD Hamiltonian keeps
//! that pattern and reshapes the two couplings.

use alloc::boxed::Box;
use alloc::sync::Arc;
use core::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::linalg::{re, ComplexMatrix, StateVector, I};
use crate::pulse::{ControlWaveform, DerivedAngles, ETA_EPSILON};
#[allow(unused_imports)] // needed for f64 math without std
use num_traits::Float;

/// Index convention of the three-level system.
pub struct ThreeLevelBasis;

impl ThreeLevelBasis {
    /// Target of population transfer.
    pub const PHI1: usize = 0;
    /// Initial state.
    pub const PHI2: usize = 1;
    /// Intermediate (lossy) level.
    pub const PHI3: usize = 2;

    pub const LABELS: [&'static str; 3] = ["phi1", "phi2", "phi3"];

    pub fn state(k: usize) -> StateVector {
        StateVector::basis(3, k)
    }
}

/// Which basis a sampler's matrices are written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    /// (φ1, φ2, φ3).
    ThreeLevel,
    /// Interaction picture reached after `iteration` superadiabatic steps.
    Interaction {
        iteration: usize,
    },
    /// cavity ⊗ NVE1 ⊗ NVE2, index `c·4 + n1·2 + n2` with g = 0, e = 1.
    HybridProduct,
    Unlabeled,
}

/// A time-dependent Hermitian Hamiltonian (rad/µs) on a fixed basis.
pub trait HamiltonianSampler {
    fn dim(&self) -> usize;
    fn basis(&self) -> BasisLabel;
    fn evaluate(&self, t: f64) -> Result<ComplexMatrix>;
}

impl<S: HamiltonianSampler + ?Sized> HamiltonianSampler for &S {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn basis(&self) -> BasisLabel {
        (**self).basis()
    }
    fn evaluate(&self, t: f64) -> Result<ComplexMatrix> {
        (**self).evaluate(t)
    }
}

impl<S: HamiltonianSampler + ?Sized> HamiltonianSampler for Box<S> {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn basis(&self) -> BasisLabel {
        (**self).basis()
    }
    fn evaluate(&self, t: f64) -> Result<ComplexMatrix> {
        (**self).evaluate(t)
    }
}

impl<S: HamiltonianSampler + ?Sized> HamiltonianSampler for Arc<S> {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn basis(&self) -> BasisLabel {
        (**self).basis()
    }
    fn evaluate(&self, t: f64) -> Result<ComplexMatrix> {
        (**self).evaluate(t)
    }
}

/// Time-independent Hamiltonian.
#[derive(Clone, Debug)]
pub struct ConstantHamiltonian {
    matrix: ComplexMatrix,
    basis: BasisLabel,
}

impl ConstantHamiltonian {
    pub fn new(matrix: ComplexMatrix, basis: BasisLabel) -> Result<Self> {
        let (dev, row, col) = matrix.hermiticity_error();
        if dev > 1e-12 * matrix.norm_inf().max(1.0) {
            return Err(Error::NotHermitian {
                row,
                col,
                deviation: dev,
            });
        }
        Ok(Self { matrix, basis })
    }
}

impl HamiltonianSampler for ConstantHamiltonian {
    fn dim(&self) -> usize {
        self.matrix.dim()
    }
    fn basis(&self) -> BasisLabel {
        self.basis
    }
    fn evaluate(&self, _t: f64) -> Result<ComplexMatrix> {
        Ok(self.matrix.clone())
    }
}

/// Sampler backed by a closure.
pub struct FnHamiltonian<F> {
    dim: usize,
    basis: BasisLabel,
    f: F,
}

impl<F> FnHamiltonian<F>
where
    F: Fn(f64) -> Result<ComplexMatrix>,
{
    pub fn new(dim: usize, basis: BasisLabel, f: F) -> Self {
        Self { dim, basis, f }
    }
}

impl<F> HamiltonianSampler for FnHamiltonian<F>
where
    F: Fn(f64) -> Result<ComplexMatrix>,
{
    fn dim(&self) -> usize {
        self.dim
    }
    fn basis(&self) -> BasisLabel {
        self.basis
    }
    fn evaluate(&self, t: f64) -> Result<ComplexMatrix> {
        let m = (self.f)(t)?;
        if m.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: m.dim(),
            });
        }
        Ok(m)
    }
}

/// Three-level sampler whose only non-zero entries are the φ1↔φ3 and φ2↔φ3
/// couplings.
pub trait LambdaCouplings: HamiltonianSampler {
    /// `(⟨φ1|H|φ3⟩, ⟨φ2|H|φ3⟩)` at `t`.
    fn couplings(&self, t: f64) -> Result<(f64, f64)>;
}

fn lambda_matrix(c13: f64, c23: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(3);
    m[(0, 2)] = re(c13);
    m[(2, 0)] = re(c13);
    m[(1, 2)] = re(c23);
    m[(2, 1)] = re(c23);
    m
}

/// H0 at fixed angles.
pub fn h0_matrix(a: &DerivedAngles) -> ComplexMatrix {
    let (s, c) = a.theta.sin_cos();
    lambda_matrix(a.eta * c, a.eta * s)
}

/// Adiabatic (STIRAP) Hamiltonian H0(t).
#[derive(Clone, Debug)]
pub struct AdiabaticHamiltonian {
    waveform: ControlWaveform,
}

impl AdiabaticHamiltonian {
    pub fn waveform(&self) -> &ControlWaveform {
        &self.waveform
    }
}

pub fn build_h0(w: &ControlWaveform) -> AdiabaticHamiltonian {
    AdiabaticHamiltonian { waveform: w.clone() }
}

impl HamiltonianSampler for AdiabaticHamiltonian {
    fn dim(&self) -> usize {
        3
    }
    fn basis(&self) -> BasisLabel {
        BasisLabel::ThreeLevel
    }
    fn evaluate(&self, t: f64) -> Result<ComplexMatrix> {
        let (c13, c23) = self.couplings(t)?;
        Ok(lambda_matrix(c13, c23))
    }
}

impl LambdaCouplings for AdiabaticHamiltonian {
    fn couplings(&self, t: f64) -> Result<(f64, f64)> {
        if self.waveform.is_identically_zero() {
            return Ok((0.0, 0.0));
        }
        let a = self.waveform.derived(t)?;
        let (s, c) = a.theta.sin_cos();
        Ok((a.eta * c, a.eta * s))
    }
}

/// Closed-form eigensystem of H0.
#[derive(Clone, Debug)]
pub struct EigensystemH0 {
    pub e_minus: f64,
    pub e_zero: f64,
    pub e_plus: f64,
    pub minus: StateVector,
    /// The dark state `sinθ|φ1⟩ − cosθ|φ2⟩`.
    pub zero: StateVector,
    pub plus: StateVector,
}

pub fn h0_eigensystem(a: &DerivedAngles) -> Result<EigensystemH0> {
    if !(a.eta > ETA_EPSILON) {
        return Err(Error::InvalidParameter {
            name: "eta",
            reason: "H0 eigensystem needs η > 1e-30 rad/µs",
        });
    }
    let (s, c) = a.theta.sin_cos();
    let h = FRAC_1_SQRT_2;
    Ok(EigensystemH0 {
        e_minus: -a.eta,
        e_zero: 0.0,
        e_plus: a.eta,
        minus: StateVector::from_real(&[h * c, h * s, -h]),
        zero: StateVector::from_real(&[s, -c, 0.0]),
        plus: StateVector::from_real(&[h * c, h * s, h]),
    })
}

/// Dark state of H0 at mixing angle θ.
pub fn dark_state(theta: f64) -> StateVector {
    let (s, c) = theta.sin_cos();
    StateVector::from_real(&[s, -c, 0.0])
}

/// Unitary with columns `|E−⟩, |E+⟩, |E0⟩` in the φ basis.
pub fn build_a0(a: &DerivedAngles) -> ComplexMatrix {
    let (s, c) = a.theta.sin_cos();
    let h = FRAC_1_SQRT_2;
    #[rustfmt::skip]
    let m = ComplexMatrix::from_real(3, &[
        h * c, h * c,  s,
        h * s, h * s, -c,
        -h,    h,      0.0,
    ]);
    m
}

/// First interaction-picture Hamiltonian in the basis `(E−, E+, E0)`.
pub fn build_h1(a: &DerivedAngles) -> ComplexMatrix {
    let k = I * (a.theta_dot * FRAC_1_SQRT_2);
    let mut m = ComplexMatrix::diagonal(&[-a.eta, a.eta, 0.0]);
    m[(0, 2)] = -k;
    m[(1, 2)] = -k;
    m[(2, 0)] = k;
    m[(2, 1)] = k;
    m
}

/// Closed-form eigensystem of H1, with `W`, `Q`, `R` as auxiliary scalars.
#[derive(Clone, Debug)]
pub struct EigensystemH1 {
    pub lambda_minus: f64,
    pub lambda_zero: f64,
    pub lambda_plus: f64,
    /// `η + √(η² + θ̇²)`
    pub w: f64,
    /// `−η + √(η² + θ̇²)`
    pub q: f64,
    /// `2√(η² + θ̇²)`
    pub r: f64,
    pub eta: f64,
    pub theta_dot: f64,
}

pub fn h1_eigensystem(a: &DerivedAngles) -> EigensystemH1 {
    let root = a.generalized_rabi();
    // W·Q = θ̇² avoids cancellation in Q when θ̇ ≪ η.
    let w = a.eta + root;
    let q = if w > 0.0 {
        a.theta_dot * a.theta_dot / w
    } else {
        root - a.eta
    };
    EigensystemH1 {
        lambda_minus: -root,
        lambda_zero: 0.0,
        lambda_plus: root,
        w,
        q,
        r: 2.0 * root,
        eta: a.eta,
        theta_dot: a.theta_dot,
    }
}

impl EigensystemH1 {
    /// `|λ−⟩, |λ+⟩, |λ0⟩` in the `(E−, E+, E0)` basis.
    pub fn vectors(&self) -> Result<[StateVector; 3]> {
        let a1 = build_a1(self)?;
        Ok([a1.column(0), a1.column(1), a1.column(2)])
    }
}

/// Unitary whose columns are the eigenvectors `|λ−⟩, |λ+⟩, |λ0⟩`.
pub fn build_a1(es: &EigensystemH1) -> Result<ComplexMatrix> {
    if !(es.r > ETA_EPSILON) {
        return Err(Error::InvalidParameter {
            name: "R",
            reason: "η and θ̇ both vanish",
        });
    }
    let (w, q) = (es.w / es.r, es.q / es.r);
    let k = core::f64::consts::SQRT_2 * es.theta_dot / es.r;
    let e = 2.0 * es.eta / es.r;
    #[rustfmt::skip]
    let entries = [
        I * w,   I * q,   -I * k,
        I * q,   I * w,    I * k,
        re(k),   re(-k),   re(e),
    ];
    ComplexMatrix::from_row_major(&entries)
}

/// `(V1, V2)` with `V1 = 4 sinθ(η̇θ̇ − ηθ̈)/R²`, `V2 = 4 cosθ(η̇θ̇ − ηθ̈)/R²`.
///
/// Evaluated with η and θ̇ rescaled by `max(η, |θ̇|)` so the ratio survives
/// when both are tiny.
pub fn msd_corrections(a: &DerivedAngles, t: f64) -> Result<(f64, f64)> {
    let m = a.eta.max(a.theta_dot.abs());
    if !(m > ETA_EPSILON) {
        return Err(Error::DegenerateControl { t });
    }
    let (eta, td) = (a.eta / m, a.theta_dot / m);
    let x = (a.eta_dot / m * td - eta * (a.theta_ddot / m)) / (eta * eta + td * td);
    let (s, c) = a.theta.sin_cos();
    Ok((s * x, c * x))
}

/// H_M at fixed angles.
pub fn hm_matrix(a: &DerivedAngles, t: f64) -> Result<ComplexMatrix> {
    let (c13, c23) = hm_couplings(a, t)?;
    Ok(lambda_matrix(c13, c23))
}

fn hm_couplings(a: &DerivedAngles, t: f64) -> Result<(f64, f64)> {
    let (v1, v2) = msd_corrections(a, t)?;
    let (s, c) = a.theta.sin_cos();
    Ok((a.eta * c + v1, a.eta * s - v2))
}

/// Transitionless Hamiltonian H_M(t) obtained from one superadiabatic
/// iteration; same coupling pattern as H0.
#[derive(Clone, Debug)]
pub struct MsdHamiltonian {
    waveform: ControlWaveform,
}

impl MsdHamiltonian {
    pub fn waveform(&self) -> &ControlWaveform {
        &self.waveform
    }
}

pub fn build_hm(w: &ControlWaveform) -> MsdHamiltonian {
    MsdHamiltonian { waveform: w.clone() }
}

impl HamiltonianSampler for MsdHamiltonian {
    fn dim(&self) -> usize {
        3
    }
    fn basis(&self) -> BasisLabel {
        BasisLabel::ThreeLevel
    }
    fn evaluate(&self, t: f64) -> Result<ComplexMatrix> {
        let (c13, c23) = self.couplings(t)?;
        Ok(lambda_matrix(c13, c23))
    }
}

impl LambdaCouplings for MsdHamiltonian {
    fn couplings(&self, t: f64) -> Result<(f64, f64)> {
        if self.waveform.is_identically_zero() {
            return Ok((0.0, 0.0));
        }
        hm_couplings(&self.waveform.derived(t)?, t)
    }
}

/// Dressed state `A0|λ0⟩` in the φ basis: the state H_M transports exactly.
pub fn msd_dressed_dark_state(a: &DerivedAngles) -> Result<StateVector> {
    let es = h1_eigensystem(a);
    let lambda0 = build_a1(&es)?.column(2);
    Ok(build_a0(a).apply(&lambda0))
}

/// Frame change `A0†(H0 − K0)A0` with a supplied `K0`.
pub fn interaction_picture(a0: &ComplexMatrix, h: &ComplexMatrix, k: &ComplexMatrix) -> ComplexMatrix {
    let inner = h - k;
    &(&a0.adjoint() * &inner) * a0
}

/// Λ couplings `(c13, c23)` supplied by a closure.
#[derive(Clone, Copy)]
pub struct FnCouplings<F>(pub F);

impl<F> HamiltonianSampler for FnCouplings<F>
where
    F: Fn(f64) -> Result<(f64, f64)>,
{
    fn dim(&self) -> usize {
        3
    }
    fn basis(&self) -> BasisLabel {
        BasisLabel::ThreeLevel
    }
    fn evaluate(&self, t: f64) -> Result<ComplexMatrix> {
        let (c13, c23) = (self.0)(t)?;
        Ok(lambda_matrix(c13, c23))
    }
}

impl<F> LambdaCouplings for FnCouplings<F>
where
    F: Fn(f64) -> Result<(f64, f64)>,
{
    fn couplings(&self, t: f64) -> Result<(f64, f64)> {
        (self.0)(t)
    }
}

/// Driving protocol for the Λ couplings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DriveMode {
    /// Bare adiabatic passage under H0.
    Stirap,
    /// Modified couplings of H_M.
    Msd,
}

/// H0 or H_M, chosen at run time.
#[derive(Clone, Debug)]
pub enum LambdaDrive {
    Stirap(AdiabaticHamiltonian),
    Msd(MsdHamiltonian),
}

pub fn build_drive(w: &ControlWaveform, mode: DriveMode) -> LambdaDrive {
    match mode {
        DriveMode::Stirap => LambdaDrive::Stirap(build_h0(w)),
        DriveMode::Msd => LambdaDrive::Msd(build_hm(w)),
    }
}

impl LambdaDrive {
    pub fn mode(&self) -> DriveMode {
        match self {
            Self::Stirap(_) => DriveMode::Stirap,
            Self::Msd(_) => DriveMode::Msd,
        }
    }
}

impl HamiltonianSampler for LambdaDrive {
    fn dim(&self) -> usize {
        3
    }
    fn basis(&self) -> BasisLabel {
        BasisLabel::ThreeLevel
    }
    fn evaluate(&self, t: f64) -> Result<ComplexMatrix> {
        let (c13, c23) = self.couplings(t)?;
        Ok(lambda_matrix(c13, c23))
    }
}

impl LambdaCouplings for LambdaDrive {
    fn couplings(&self, t: f64) -> Result<(f64, f64)> {
        match self {
            Self::Stirap(h) => h.couplings(t),
            Self::Msd(h) => h.couplings(t),
        }
    }
}
