//! Fixed-step fourth-order Runge–Kutta propagation of the Schrödinger and
//! Lindblad equations, plus the observables recorded along a run.

use alloc::vec::Vec;

use crate::driving::{HamiltonianSampler, ThreeLevelBasis};
use crate::error::{Error, Result};
use crate::hybrid::{CollapseOperator, DissipationSpec, HYBRID_DIM, LAMBDA_INDICES, PRODUCT_LABELS};
use crate::linalg::{eigh, re, ComplexMatrix, DensityMatrix, StateVector, C64, I, ONE};

/// Norm (or trace) drift beyond which a run is rejected.
pub const MAX_NORM_DRIFT: f64 = 1e-6;

/// Most negative eigenvalue of ρ tolerated before a run is rejected.
pub const POSITIVITY_FLOOR: f64 = -1e-6;

/// Uniform grid `t_k = t_start + k (t_end − t_start)/steps`, `k = 0..=steps`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimeGrid {
    pub t_start: f64,
    pub t_end: f64,
    pub steps: usize,
}

impl TimeGrid {
    pub fn new(t_start: f64, t_end: f64, steps: usize) -> Result<Self> {
        if steps == 0 {
            return Err(Error::InvalidParameter {
                name: "steps",
                reason: "must be a positive integer",
            });
        }
        if !(t_start.is_finite() && t_end.is_finite() && t_end > t_start) {
            return Err(Error::InvalidParameter {
                name: "t_end",
                reason: "window must be finite with t_end > t_start",
            });
        }
        Ok(Self { t_start, t_end, steps })
    }

    pub fn step(&self) -> f64 {
        (self.t_end - self.t_start) / self.steps as f64
    }

    pub fn time(&self, k: usize) -> f64 {
        if k == self.steps {
            return self.t_end;
        }
        self.t_start + (self.t_end - self.t_start) * (k as f64 / self.steps as f64)
    }

    /// Number of samples, `steps + 1`.
    pub fn len(&self) -> usize {
        self.steps + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn times(&self) -> Vec<f64> {
        (0..self.len()).map(|k| self.time(k)).collect()
    }

    /// Same window with twice the number of steps.
    pub fn refined(&self) -> Self {
        Self {
            steps: self.steps * 2,
            ..*self
        }
    }
}

/// Anything whose basis populations and overlaps can be read off.
pub trait QuantumState {
    fn dim(&self) -> usize;
    /// `⟨k|ρ|k⟩` with no range check.
    fn basis_population(&self, k: usize) -> f64;
    /// `⟨v|ρ|v⟩`
    fn overlap(&self, v: &StateVector) -> f64;
    /// `Tr(O ρ)`
    fn expectation(&self, op: &ComplexMatrix) -> C64;
}

impl QuantumState for StateVector {
    fn dim(&self) -> usize {
        StateVector::dim(self)
    }
    fn basis_population(&self, k: usize) -> f64 {
        self[k].norm_sqr()
    }
    fn overlap(&self, v: &StateVector) -> f64 {
        v.inner(self).norm_sqr()
    }
    fn expectation(&self, op: &ComplexMatrix) -> C64 {
        op.matrix_element(self, self)
    }
}

impl QuantumState for DensityMatrix {
    fn dim(&self) -> usize {
        DensityMatrix::dim(self)
    }
    fn basis_population(&self, k: usize) -> f64 {
        self.matrix()[(k, k)].re
    }
    fn overlap(&self, v: &StateVector) -> f64 {
        self.matrix().matrix_element(v, v).re
    }
    fn expectation(&self, op: &ComplexMatrix) -> C64 {
        DensityMatrix::expectation(self, op)
    }
}

/// Population of basis state `k` (zero-based).
pub fn population<S: QuantumState + ?Sized>(state: &S, k: usize) -> Result<f64> {
    if k >= state.dim() {
        return Err(Error::IndexOutOfRange {
            index: k,
            dim: state.dim(),
        });
    }
    Ok(state.basis_population(k))
}

/// `F = ⟨target|ρ|target⟩`
pub fn fidelity<S: QuantumState + ?Sized>(state: &S, target: &StateVector) -> Result<f64> {
    if target.dim() != state.dim() {
        return Err(Error::DimensionMismatch {
            expected: state.dim(),
            found: target.dim(),
        });
    }
    Ok(state.overlap(target))
}

/// What to record at each grid point.
#[derive(Clone, Debug)]
pub struct Observables {
    /// Basis indices reported as P1, P2, P3.
    pub lambda_indices: [usize; 3],
    pub labels: Vec<&'static str>,
    pub target: Option<StateVector>,
    pub photon_number: Option<ComplexMatrix>,
}

impl Observables {
    pub fn three_level() -> Self {
        Self {
            lambda_indices: [0, 1, 2],
            labels: ThreeLevelBasis::LABELS.to_vec(),
            target: None,
            photon_number: None,
        }
    }

    pub fn hybrid() -> Self {
        Self {
            lambda_indices: LAMBDA_INDICES,
            labels: PRODUCT_LABELS.to_vec(),
            target: None,
            photon_number: Some(crate::hybrid::photon_number()),
        }
    }

    /// Defaults for a state space of dimension `dim`.
    pub fn for_dim(dim: usize) -> Self {
        match dim {
            3 => Self::three_level(),
            HYBRID_DIM => Self::hybrid(),
            _ => Self {
                lambda_indices: [0, 1.min(dim - 1), 2.min(dim - 1)],
                labels: Vec::new(),
                target: None,
                photon_number: None,
            },
        }
    }

    pub fn with_target(mut self, target: StateVector) -> Self {
        self.target = Some(target);
        self
    }
}

/// Numerical health of a run.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Diagnostics {
    pub steps: usize,
    /// Largest `|‖ψ‖² − 1|` (closed) or `|Tr ρ − 1|` (open) seen.
    pub max_drift: f64,
    /// The same quantity at the end of the run.
    pub final_drift: f64,
    /// Largest `|ρ_ij − ρ_ji*|` seen; zero for pure states.
    pub max_hermiticity_error: f64,
    /// Smallest eigenvalue of ρ seen; `None` for pure states.
    pub min_eigenvalue: Option<f64>,
}

impl Diagnostics {
    pub fn drift_per_1000_steps(&self) -> f64 {
        self.final_drift * 1000.0 / self.steps.max(1) as f64
    }
}

/// Sampled observables of one run.
#[derive(Clone, Debug, Default)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub labels: Vec<&'static str>,
    pub lambda_indices: [usize; 3],
    /// `populations[sample][basis index]` over the full basis.
    pub populations: Vec<Vec<f64>>,
    pub fidelity: Option<Vec<f64>>,
    pub mean_photon: Option<Vec<f64>>,
    pub diagnostics: Diagnostics,
}

impl Trajectory {
    fn with_capacity(obs: &Observables, n: usize) -> Self {
        Self {
            times: Vec::with_capacity(n),
            labels: obs.labels.clone(),
            lambda_indices: obs.lambda_indices,
            populations: Vec::with_capacity(n),
            fidelity: obs.target.as_ref().map(|_| Vec::with_capacity(n)),
            mean_photon: obs.photon_number.as_ref().map(|_| Vec::with_capacity(n)),
            diagnostics: Diagnostics::default(),
        }
    }

    fn record<S: QuantumState>(&mut self, t: f64, state: &S, obs: &Observables) {
        self.times.push(t);
        self.populations
            .push((0..state.dim()).map(|k| state.basis_population(k)).collect());
        if let (Some(f), Some(target)) = (self.fidelity.as_mut(), obs.target.as_ref()) {
            f.push(state.overlap(target));
        }
        if let (Some(n), Some(op)) = (self.mean_photon.as_mut(), obs.photon_number.as_ref()) {
            n.push(state.expectation(op).re);
        }
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// `(P1, P2, P3)` at sample `i`.
    pub fn lambda_populations(&self, i: usize) -> [f64; 3] {
        let row = &self.populations[i];
        self.lambda_indices.map(|k| row[k])
    }

    pub fn final_lambda_populations(&self) -> [f64; 3] {
        self.lambda_populations(self.len() - 1)
    }

    pub fn final_fidelity(&self) -> Option<f64> {
        self.fidelity.as_ref().and_then(|f| f.last().copied())
    }

    pub fn max_mean_photon(&self) -> Option<f64> {
        self.mean_photon
            .as_ref()
            .map(|n| n.iter().copied().fold(f64::NEG_INFINITY, f64::max))
    }
}

fn check_dim<S: HamiltonianSampler + ?Sized>(h: &S, found: usize) -> Result<()> {
    if h.dim() != found {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found,
        });
    }
    Ok(())
}

fn schrodinger_rhs(h: &ComplexMatrix, psi: &StateVector) -> StateVector {
    h.apply(psi).scale(-I)
}

/// Integrates `iψ̇ = H(t)ψ` over `grid`, calling `observer(k, t_k, ψ(t_k))`
/// at every grid point. No renormalisation is applied.
pub fn evolve_schrodinger<S, F>(
    h: &S,
    psi0: &StateVector,
    grid: &TimeGrid,
    mut observer: F,
) -> Result<(StateVector, Diagnostics)>
where
    S: HamiltonianSampler + ?Sized,
    F: FnMut(usize, f64, &StateVector),
{
    check_dim(h, psi0.dim())?;
    let n0 = psi0.norm_sqr();
    if (n0 - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter {
            name: "psi0",
            reason: "initial state must be normalised",
        });
    }
    let mut psi = psi0.clone();
    let mut diag = Diagnostics {
        steps: grid.steps,
        ..Diagnostics::default()
    };
    let mut t = grid.time(0);
    observer(0, t, &psi);
    let mut h_now = h.evaluate(t)?;
    for k in 0..grid.steps {
        let t_next = grid.time(k + 1);
        let dt = t_next - t;
        let half = re(0.5 * dt);
        let h_mid = h.evaluate(t + 0.5 * dt)?;
        let h_next = h.evaluate(t_next)?;
        let k1 = schrodinger_rhs(&h_now, &psi);
        let k2 = schrodinger_rhs(&h_mid, &psi.add_scaled(half, &k1));
        let k3 = schrodinger_rhs(&h_mid, &psi.add_scaled(half, &k2));
        let k4 = schrodinger_rhs(&h_next, &psi.add_scaled(re(dt), &k3));
        let incr = k1
            .add_scaled(re(2.0), &k2)
            .add_scaled(re(2.0), &k3)
            .add_scaled(ONE, &k4);
        psi = psi.add_scaled(re(dt / 6.0), &incr);

        let drift = (psi.norm_sqr() - 1.0).abs();
        diag.max_drift = diag.max_drift.max(drift);
        if !(drift <= MAX_NORM_DRIFT) {
            return Err(Error::NormDrift { t: t_next, drift });
        }
        t = t_next;
        h_now = h_next;
        observer(k + 1, t, &psi);
    }
    diag.final_drift = (psi.norm_sqr() - 1.0).abs();
    Ok((psi, diag))
}

pub fn propagate_schrodinger<S: HamiltonianSampler + ?Sized>(
    h: &S,
    psi0: &StateVector,
    grid: &TimeGrid,
) -> Result<Trajectory> {
    propagate_schrodinger_observed(h, psi0, grid, &Observables::for_dim(psi0.dim()))
}

pub fn propagate_schrodinger_observed<S: HamiltonianSampler + ?Sized>(
    h: &S,
    psi0: &StateVector,
    grid: &TimeGrid,
    obs: &Observables,
) -> Result<Trajectory> {
    let mut traj = Trajectory::with_capacity(obs, grid.len());
    let (_, diag) = evolve_schrodinger(h, psi0, grid, |_, t, psi| traj.record(t, psi, obs))?;
    traj.diagnostics = diag;
    Ok(traj)
}

/// Precomputed pieces of the Lindblad generator:
/// `ρ̇ = −i(H_eff ρ − ρ H_eff†) + Σ_k r_k L_k ρ L_k†`, `H_eff = H − (i/2) Σ_k r_k L_k†L_k`.
struct Lindbladian {
    jumps: Vec<(f64, ComplexMatrix, ComplexMatrix)>,
    damping: ComplexMatrix,
}

impl Lindbladian {
    fn new(dim: usize, ops: &[CollapseOperator]) -> Result<Self> {
        let mut damping = ComplexMatrix::zeros(dim);
        let mut jumps = Vec::with_capacity(ops.len());
        for c in ops {
            if c.op.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.op.dim(),
                });
            }
            if !(c.rate >= 0.0) || !c.rate.is_finite() {
                return Err(Error::InvalidParameter {
                    name: "rate",
                    reason: "rate must be finite and non-negative",
                });
            }
            let adj = c.op.adjoint();
            damping = &damping + &(&adj * &c.op).scale_real(0.5 * c.rate);
            jumps.push((c.rate, c.op.clone(), adj));
        }
        Ok(Self { jumps, damping })
    }

    fn effective(&self, h: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
        let heff = h - &self.damping.scale(I);
        let heff_adj = heff.adjoint();
        (heff, heff_adj)
    }

    fn rhs(&self, heff: &(ComplexMatrix, ComplexMatrix), rho: &ComplexMatrix) -> ComplexMatrix {
        let coherent = &(&heff.0 * rho) - &(rho * &heff.1);
        let mut out = coherent.scale(-I);
        for (rate, l, l_adj) in &self.jumps {
            out = &out + &(&(l * rho) * l_adj).scale_real(*rate);
        }
        out
    }
}

fn axpy(y: &ComplexMatrix, s: f64, x: &ComplexMatrix) -> ComplexMatrix {
    y + &x.scale_real(s)
}

/// Integrates the Lindblad equation with explicit collapse operators,
/// calling `observer(k, t_k, ρ(t_k))` at every grid point. Positivity is
/// checked after every step.
pub fn evolve_lindblad<S, F>(
    h: &S,
    rho0: &DensityMatrix,
    ops: &[CollapseOperator],
    grid: &TimeGrid,
    mut observer: F,
) -> Result<(DensityMatrix, Diagnostics)>
where
    S: HamiltonianSampler + ?Sized,
    F: FnMut(usize, f64, &DensityMatrix),
{
    check_dim(h, rho0.dim())?;
    let gen = Lindbladian::new(rho0.dim(), ops)?;
    let mut rho = rho0.matrix().clone();
    let mut diag = Diagnostics {
        steps: grid.steps,
        min_eigenvalue: Some(eigh(&rho.hermitian_part())?.values[0]),
        ..Diagnostics::default()
    };
    let mut t = grid.time(0);
    observer(0, t, rho0);
    let mut heff_now = gen.effective(&h.evaluate(t)?);
    for k in 0..grid.steps {
        let t_next = grid.time(k + 1);
        let dt = t_next - t;
        let heff_mid = gen.effective(&h.evaluate(t + 0.5 * dt)?);
        let heff_next = gen.effective(&h.evaluate(t_next)?);
        let k1 = gen.rhs(&heff_now, &rho);
        let k2 = gen.rhs(&heff_mid, &axpy(&rho, 0.5 * dt, &k1));
        let k3 = gen.rhs(&heff_mid, &axpy(&rho, 0.5 * dt, &k2));
        let k4 = gen.rhs(&heff_next, &axpy(&rho, dt, &k3));
        let incr = &(&k1 + &k4) + &(&k2 + &k3).scale_real(2.0);
        rho = axpy(&rho, dt / 6.0, &incr);

        let drift = (rho.trace() - ONE).norm();
        diag.max_drift = diag.max_drift.max(drift);
        if !(drift <= MAX_NORM_DRIFT) {
            return Err(Error::NormDrift { t: t_next, drift });
        }
        let (herm, _, _) = rho.hermiticity_error();
        diag.max_hermiticity_error = diag.max_hermiticity_error.max(herm);
        let min_ev = eigh(&rho.hermitian_part())?.values[0];
        diag.min_eigenvalue = diag.min_eigenvalue.map(|m| m.min(min_ev));
        if min_ev < POSITIVITY_FLOOR {
            return Err(Error::PositivityViolation {
                t: t_next,
                min_eigenvalue: min_ev,
            });
        }
        t = t_next;
        heff_now = heff_next;
        observer(k + 1, t, &DensityMatrix::from_matrix_unchecked(rho.clone()));
    }
    diag.final_drift = (rho.trace() - ONE).norm();
    Ok((DensityMatrix::from_matrix_unchecked(rho), diag))
}

/// Open-system run on the 8-dimensional hybrid space with the rates of `diss`.
pub fn propagate_lindblad<S: HamiltonianSampler + ?Sized>(
    h: &S,
    rho0: &DensityMatrix,
    diss: &DissipationSpec,
    grid: &TimeGrid,
) -> Result<Trajectory> {
    propagate_lindblad_observed(h, rho0, diss, grid, &Observables::hybrid())
}

pub fn propagate_lindblad_observed<S: HamiltonianSampler + ?Sized>(
    h: &S,
    rho0: &DensityMatrix,
    diss: &DissipationSpec,
    grid: &TimeGrid,
    obs: &Observables,
) -> Result<Trajectory> {
    if rho0.dim() != HYBRID_DIM {
        return Err(Error::DimensionMismatch {
            expected: HYBRID_DIM,
            found: rho0.dim(),
        });
    }
    propagate_lindblad_with(h, rho0, &diss.collapse_operators(), grid, obs)
}

/// Lindblad run with arbitrary collapse operators.
pub fn propagate_lindblad_with<S: HamiltonianSampler + ?Sized>(
    h: &S,
    rho0: &DensityMatrix,
    ops: &[CollapseOperator],
    grid: &TimeGrid,
    obs: &Observables,
) -> Result<Trajectory> {
    let mut traj = Trajectory::with_capacity(obs, grid.len());
    let (_, diag) = evolve_lindblad(h, rho0, ops, grid, |_, t, rho| traj.record(t, rho, obs))?;
    traj.diagnostics = diag;
    Ok(traj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::driving::{dark_state, h0_matrix, BasisLabel, ConstantHamiltonian};
    use crate::pulse::DerivedAngles;

    fn zero_h(dim: usize) -> ConstantHamiltonian {
        ConstantHamiltonian::new(ComplexMatrix::zeros(dim), BasisLabel::Unlabeled).unwrap()
    }

    #[test]
    fn grid_endpoints_are_exact() {
        let g = TimeGrid::new(0.0, 1.2, 12000).unwrap();
        assert_eq!(g.time(0), 0.0);
        assert_eq!(g.time(12000), 1.2);
        assert_eq!(g.len(), 12001);
        assert!(matches!(
            TimeGrid::new(0.0, 1.0, 0),
            Err(Error::InvalidParameter { name: "steps", .. })
        ));
        assert!(TimeGrid::new(1.0, 1.0, 10).is_err());
    }

    #[test]
    fn zero_hamiltonian_leaves_state_alone() {
        let psi0 = StateVector::from_real(&[0.6, 0.0, 0.8]);
        let traj = propagate_schrodinger(&zero_h(3), &psi0, &TimeGrid::new(0.0, 1.0, 100).unwrap()).unwrap();
        for row in &traj.populations {
            assert!((row[0] - 0.36).abs() < 1e-15 && (row[2] - 0.64).abs() < 1e-15);
        }
    }

    #[test]
    fn eigenstate_populations_are_stationary() {
        let a = DerivedAngles::frozen(1.0, core::f64::consts::FRAC_PI_4);
        let h = ConstantHamiltonian::new(h0_matrix(&a), BasisLabel::ThreeLevel).unwrap();
        let psi0 = dark_state(a.theta);
        let traj = propagate_schrodinger(&h, &psi0, &TimeGrid::new(0.0, 5.0, 5000).unwrap()).unwrap();
        for i in 0..traj.len() {
            let p = traj.lambda_populations(i);
            assert!((p[0] - 0.5).abs() < 1e-12 && (p[1] - 0.5).abs() < 1e-12 && p[2] < 1e-24);
        }
    }

    #[test]
    fn rabi_oscillation_matches_analytic_form() {
        // H = Ω σx on two levels: P1(t) = sin²(Ωt).
        let omega = 2.0;
        let h = ConstantHamiltonian::new(
            ComplexMatrix::from_real(2, &[0.0, omega, omega, 0.0]),
            BasisLabel::Unlabeled,
        )
        .unwrap();
        let grid = TimeGrid::new(0.0, 3.0, 3000).unwrap();
        let traj = propagate_schrodinger(&h, &StateVector::basis(2, 0), &grid).unwrap();
        for (i, &t) in traj.times.iter().enumerate() {
            let expect = (omega * t).sin().powi(2);
            assert!((traj.populations[i][1] - expect).abs() < 1e-9);
        }
        assert!(traj.diagnostics.final_drift < 1e-10);
    }

    #[test]
    fn coarse_step_reports_norm_drift() {
        let h = ConstantHamiltonian::new(
            ComplexMatrix::from_real(2, &[0.0, 50.0, 50.0, 0.0]),
            BasisLabel::Unlabeled,
        )
        .unwrap();
        let res = propagate_schrodinger(&h, &StateVector::basis(2, 0), &TimeGrid::new(0.0, 1.0, 20).unwrap());
        assert!(matches!(res, Err(Error::NormDrift { .. })));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let res = propagate_schrodinger(
            &zero_h(3),
            &StateVector::basis(2, 0),
            &TimeGrid::new(0.0, 1.0, 2).unwrap(),
        );
        assert!(matches!(res, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn population_and_fidelity_examples() {
        let phi2 = ThreeLevelBasis::state(ThreeLevelBasis::PHI2);
        let rho = DensityMatrix::pure(&phi2);
        assert_eq!(population(&rho, ThreeLevelBasis::PHI2).unwrap(), 1.0);
        let mixed = DensityMatrix::maximally_mixed(3);
        for k in 0..3 {
            assert!((population(&mixed, k).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        }
        assert!(matches!(
            population(&mixed, 3),
            Err(Error::IndexOutOfRange { index: 3, dim: 3 })
        ));
        assert_eq!(fidelity(&rho, &phi2).unwrap(), 1.0);
        let mixed8 = DensityMatrix::maximally_mixed(8);
        assert!((fidelity(&mixed8, &StateVector::basis(8, 5)).unwrap() - 0.125).abs() < 1e-15);
        assert!(fidelity(&mixed8, &phi2).is_err());
    }

    #[test]
    fn cavity_decay_follows_exponential_law() {
        let kappa = 0.7;
        let diss = DissipationSpec::new(kappa, 0.0, 0.0).unwrap();
        let rho0 = DensityMatrix::pure(&crate::hybrid::product_state(1, 0, 0));
        let grid = TimeGrid::new(0.0, 2.0, 2000).unwrap();
        let traj = propagate_lindblad(&zero_h(8), &rho0, &diss, &grid).unwrap();
        for (i, &t) in traj.times.iter().enumerate() {
            assert!((traj.populations[i][4] - (-kappa * t).exp()).abs() < 1e-6);
            assert!((traj.populations[i][0] - (1.0 - (-kappa * t).exp())).abs() < 1e-6);
        }
        assert!(traj.diagnostics.max_drift < 1e-12);
        assert!(traj.diagnostics.min_eigenvalue.unwrap() > -1e-12);
    }

    #[test]
    fn dephasing_kills_coherence() {
        // D[σz] with rate γφ decays the ge coherence as e^{−2γφ t}.
        let gphi = 0.5;
        let diss = DissipationSpec::new(0.0, 0.0, gphi).unwrap();
        let s = 1.0 / 2f64.sqrt();
        let mut amps = [0.0; 8];
        amps[0] = s;
        amps[2] = s;
        let rho0 = DensityMatrix::pure(&StateVector::from_real(&amps));
        let grid = TimeGrid::new(0.0, 1.0, 1000).unwrap();
        let mut coh = 0.0;
        let (_, _) = evolve_lindblad(&zero_h(8), &rho0, &diss.collapse_operators(), &grid, |k, _, rho| {
            if k == 1000 {
                coh = rho.matrix()[(0, 2)].re;
            }
        })
        .unwrap();
        assert!((coh - 0.5 * (-2.0 * gphi).exp()).abs() < 1e-9);
    }
}
