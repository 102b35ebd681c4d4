//! Two NV-centre ensembles coupled through one transmission-line resonator.
//!
//! Product basis `|c, n1, n2⟩` with cavity `c ∈ {0, 1}` and `n_j ∈ {g, e}`
//! (g = 0, e = 1) at index `4c + 2n1 + n2`. The one-excitation sector
//! `{|0ge⟩, |0eg⟩, |1gg⟩}` reproduces the three-level Λ system.

use alloc::vec;
use alloc::vec::Vec;

use crate::driving::{build_drive, BasisLabel, DriveMode, HamiltonianSampler, LambdaCouplings, LambdaDrive};
use crate::error::{Error, Result};
use crate::linalg::{tensor, ComplexMatrix, DensityMatrix, StateVector, ZERO};
use crate::pulse::{angular_from_mhz, transfer_waveform, ControlWaveform, TransferParams};

pub const HYBRID_DIM: usize = 8;

/// Product-basis indices of φ1, φ2, φ3.
pub const LAMBDA_INDICES: [usize; 3] = [1, 2, 4];

pub const PRODUCT_LABELS: [&str; 8] = ["0gg", "0ge", "0eg", "0ee", "1gg", "1ge", "1eg", "1ee"];

/// Dispersive regime requires Δ to exceed g and Ω0 by this factor.
pub const DISPERSIVE_RATIO: f64 = 5.0;

pub fn product_index(cavity: usize, nve1: usize, nve2: usize) -> usize {
    assert!(cavity < 2 && nve1 < 2 && nve2 < 2);
    4 * cavity + 2 * nve1 + nve2
}

pub fn product_state(cavity: usize, nve1: usize, nve2: usize) -> StateVector {
    StateVector::basis(HYBRID_DIM, product_index(cavity, nve1, nve2))
}

/// Embeds a three-level state into the one-excitation sector.
pub fn embed_lambda_state(psi: &StateVector) -> StateVector {
    assert_eq!(psi.dim(), 3);
    let mut out = StateVector::from_amplitudes(vec![ZERO; HYBRID_DIM]);
    for (k, &idx) in LAMBDA_INDICES.iter().enumerate() {
        out[idx] = psi[k];
    }
    out
}

fn lowering() -> ComplexMatrix {
    ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0])
}

fn on_site(op: &ComplexMatrix, site: usize) -> ComplexMatrix {
    let id = ComplexMatrix::identity(2);
    let factors = [
        if site == 0 { op } else { &id },
        if site == 1 { op } else { &id },
        if site == 2 { op } else { &id },
    ];
    tensor(&tensor(factors[0], factors[1]), factors[2])
}

/// Cavity annihilation operator `a`.
pub fn annihilation() -> ComplexMatrix {
    on_site(&lowering(), 0)
}

/// `σ_j⁻ = |g⟩_j⟨e|` for ensemble `j ∈ {1, 2}`.
pub fn sigma_minus(j: usize) -> ComplexMatrix {
    assert!(j == 1 || j == 2, "ensemble index must be 1 or 2");
    on_site(&lowering(), j)
}

/// `σ_j^z = |e⟩_j⟨e| − |g⟩_j⟨g|`.
pub fn sigma_z(j: usize) -> ComplexMatrix {
    assert!(j == 1 || j == 2, "ensemble index must be 1 or 2");
    on_site(&ComplexMatrix::diagonal(&[-1.0, 1.0]), j)
}

/// `a†a`
pub fn photon_number() -> ComplexMatrix {
    let a = annihilation();
    &a.adjoint() * &a
}

/// `N = a†a + Σ_j σ_j†σ_j⁻`
pub fn excitation_number() -> ComplexMatrix {
    let mut n = photon_number();
    for j in 1..=2 {
        let s = sigma_minus(j);
        n = &n + &(&s.adjoint() * &s);
    }
    n
}

/// Exchange term `a σ_j† + a† σ_j⁻`.
fn exchange(j: usize) -> ComplexMatrix {
    let a = annihilation();
    let s = sigma_minus(j);
    &(&a * &s.adjoint()) + &(&a.adjoint() * &s)
}

/// `Tr(a†a ρ)` for an 8-dimensional product-space state.
pub fn mean_photon_number(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != HYBRID_DIM {
        return Err(Error::DimensionMismatch {
            expected: HYBRID_DIM,
            found: rho.dim(),
        });
    }
    Ok(rho.expectation(&photon_number()).re)
}

/// Decay rates in 1/µs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DissipationSpec {
    pub kappa: f64,
    pub gamma: f64,
    pub gamma_phi: f64,
}

impl DissipationSpec {
    pub fn new(kappa: f64, gamma: f64, gamma_phi: f64) -> Result<Self> {
        for (name, v) in [("kappa", kappa), ("gamma", gamma), ("gamma_phi", gamma_phi)] {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    reason: "rate must be finite and non-negative",
                });
            }
        }
        Ok(Self {
            kappa,
            gamma,
            gamma_phi,
        })
    }

    pub fn none() -> Self {
        Self {
            kappa: 0.0,
            gamma: 0.0,
            gamma_phi: 0.0,
        }
    }

    /// κ⁻¹ = 50 µs, γ⁻¹ = 6 ms, γ_φ⁻¹ = 600 µs.
    pub fn standard() -> Self {
        Self {
            kappa: 1.0 / 50.0,
            gamma: 1.0 / 6000.0,
            gamma_phi: 1.0 / 600.0,
        }
    }

    /// Cavity decay scaled to `ratio · κ`.
    pub fn with_kappa_ratio(self, ratio: f64) -> Result<Self> {
        Self::new(self.kappa * ratio, self.gamma, self.gamma_phi)
    }

    /// `κD[a]`, then `γD[σ_j⁻]` and `γ_φD[σ_j^z]` for each ensemble.
    /// Zero-rate channels are dropped.
    pub fn collapse_operators(&self) -> Vec<CollapseOperator> {
        let mut ops = vec![CollapseOperator::new(self.kappa, annihilation())];
        for j in 1..=2 {
            ops.push(CollapseOperator::new(self.gamma, sigma_minus(j)));
            ops.push(CollapseOperator::new(self.gamma_phi, sigma_z(j)));
        }
        ops.retain(|c| c.rate > 0.0);
        ops
    }
}

/// Dissipator `rate · D[op]`.
#[derive(Clone, Debug)]
pub struct CollapseOperator {
    pub rate: f64,
    pub op: ComplexMatrix,
}

impl CollapseOperator {
    pub fn new(rate: f64, op: ComplexMatrix) -> Self {
        Self { rate, op }
    }
}

/// Device parameters; frequencies are given as value/2π in MHz, times in µs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HybridSystemSpec {
    pub g_mhz: f64,
    pub omega0_mhz: f64,
    pub delta_mhz: f64,
    pub t1: f64,
    pub t2: f64,
    pub width: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DispersiveWarning {
    /// Δ/g below [`DISPERSIVE_RATIO`].
    WeakDetuningVsCoupling { ratio: f64 },
    /// Δ/Ω0 below [`DISPERSIVE_RATIO`].
    WeakDetuningVsDrive { ratio: f64 },
}

impl HybridSystemSpec {
    pub fn standard() -> Self {
        Self {
            g_mhz: 20.0,
            omega0_mhz: 16.0,
            delta_mhz: 200.0,
            t1: 0.75,
            t2: 0.25,
            width: 0.408,
        }
    }

    /// `η0 = gΩ0/Δ` in rad/µs.
    pub fn eta0(&self) -> f64 {
        angular_from_mhz(self.g_mhz) * angular_from_mhz(self.omega0_mhz) / angular_from_mhz(self.delta_mhz)
    }

    pub fn dispersive_warnings(&self) -> Vec<DispersiveWarning> {
        let mut out = Vec::new();
        let rg = self.delta_mhz / self.g_mhz;
        if !(rg >= DISPERSIVE_RATIO) {
            out.push(DispersiveWarning::WeakDetuningVsCoupling { ratio: rg });
        }
        let ro = self.delta_mhz / self.omega0_mhz;
        if !(ro >= DISPERSIVE_RATIO) {
            out.push(DispersiveWarning::WeakDetuningVsDrive { ratio: ro });
        }
        out
    }

    pub fn waveform(&self) -> Result<ControlWaveform> {
        if !(self.delta_mhz != 0.0 && self.delta_mhz.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "delta",
                reason: "detuning must be finite and non-zero",
            });
        }
        transfer_waveform(&TransferParams {
            eta0: self.eta0(),
            t1: self.t1,
            t2: self.t2,
            width: self.width,
        })
    }

    /// Laser Rabi frequencies `Ω_j = η_jΔ/g` (rad/µs) that realise the
    /// effective couplings `(η1, η2)`.
    pub fn rabi_frequencies(&self, couplings: (f64, f64)) -> (f64, f64) {
        let k = angular_from_mhz(self.delta_mhz) / angular_from_mhz(self.g_mhz);
        (couplings.0 * k, couplings.1 * k)
    }
}

/// `H(t) = Σ_j η_j(t)(a σ_j† + a†σ_j⁻)` on the 8-dimensional product space.
///
/// Channel 1 (ensemble 1) carries the φ2↔φ3 coupling and channel 2 the
/// φ1↔φ3 coupling of the underlying Λ drive.
#[derive(Clone, Debug)]
pub struct HybridHamiltonian<C = LambdaDrive> {
    drive: C,
    x1: ComplexMatrix,
    x2: ComplexMatrix,
}

impl<C: LambdaCouplings> HybridHamiltonian<C> {
    pub fn new(drive: C) -> Self {
        Self {
            drive,
            x1: exchange(1),
            x2: exchange(2),
        }
    }

    pub fn drive(&self) -> &C {
        &self.drive
    }

    /// Effective channel couplings `(η_1, η_2)` at `t`.
    pub fn channel_couplings(&self, t: f64) -> Result<(f64, f64)> {
        let (c13, c23) = self.drive.couplings(t)?;
        Ok((c23, c13))
    }
}

pub fn build_nve_tlr_hamiltonian(spec: &HybridSystemSpec, mode: DriveMode) -> Result<HybridHamiltonian> {
    Ok(HybridHamiltonian::new(build_drive(&spec.waveform()?, mode)))
}

impl<C: LambdaCouplings> HamiltonianSampler for HybridHamiltonian<C> {
    fn dim(&self) -> usize {
        HYBRID_DIM
    }
    fn basis(&self) -> BasisLabel {
        BasisLabel::HybridProduct
    }
    fn evaluate(&self, t: f64) -> Result<ComplexMatrix> {
        let (eta1, eta2) = self.channel_couplings(t)?;
        Ok(&self.x1.scale_real(eta1) + &self.x2.scale_real(eta2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::driving::{build_h0, build_hm};
    use crate::linalg::{re, ONE};

    fn restrict(h: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix::from_fn(3, |i, j| h[(LAMBDA_INDICES[i], LAMBDA_INDICES[j])])
    }

    #[test]
    fn index_convention() {
        assert_eq!(product_index(0, 1, 0), 2);
        assert_eq!(product_index(1, 0, 0), 4);
        assert_eq!(PRODUCT_LABELS[LAMBDA_INDICES[0]], "0ge");
        assert_eq!(PRODUCT_LABELS[LAMBDA_INDICES[1]], "0eg");
        assert_eq!(PRODUCT_LABELS[LAMBDA_INDICES[2]], "1gg");
    }

    #[test]
    fn operators_act_on_their_site() {
        let a = annihilation();
        let one = product_state(1, 0, 0);
        assert!((a.matrix_element(&product_state(0, 0, 0), &one) - ONE).norm() < 1e-15);
        let s1 = sigma_minus(1);
        assert!((s1.matrix_element(&product_state(0, 0, 0), &product_state(0, 1, 0)) - ONE).norm() < 1e-15);
        let z2 = sigma_z(2);
        assert_eq!(z2[(1, 1)], re(1.0));
        assert_eq!(z2[(0, 0)], re(-1.0));
    }

    #[test]
    fn standard_parameters_are_dispersive() {
        let spec = HybridSystemSpec::standard();
        assert!(spec.dispersive_warnings().is_empty());
        assert!((spec.eta0() - angular_from_mhz(1.6)).abs() < 1e-12);
        let close = HybridSystemSpec {
            delta_mhz: 60.0,
            ..spec
        };
        assert_eq!(close.dispersive_warnings().len(), 2);
    }

    #[test]
    fn one_excitation_sector_reproduces_lambda_system() {
        let spec = HybridSystemSpec::standard();
        let w = spec.waveform().unwrap();
        for (mode, three) in [
            (DriveMode::Stirap, &build_h0(&w) as &dyn HamiltonianSampler),
            (DriveMode::Msd, &build_hm(&w) as &dyn HamiltonianSampler),
        ] {
            let h = build_nve_tlr_hamiltonian(&spec, mode).unwrap();
            for t in [0.1, 0.4, 0.5, 0.77, 1.1] {
                let big = h.evaluate(t).unwrap();
                let small = three.evaluate(t).unwrap();
                assert!(restrict(&big).max_abs_diff(&small) < 1e-12);
            }
        }
    }

    #[test]
    fn cavity_to_first_ensemble_matrix_element_is_eta1() {
        let spec = HybridSystemSpec::standard();
        let w = spec.waveform().unwrap();
        let h = build_nve_tlr_hamiltonian(&spec, DriveMode::Stirap).unwrap();
        for t in [0.2, 0.5, 0.9] {
            let m = h
                .evaluate(t)
                .unwrap()
                .matrix_element(&product_state(1, 0, 0), &product_state(0, 1, 0));
            assert!((m - re(w.eta1.value(t))).norm() < 1e-12);
        }
    }

    #[test]
    fn zero_drive_gives_zero_matrix() {
        let spec = HybridSystemSpec {
            omega0_mhz: 0.0,
            ..HybridSystemSpec::standard()
        };
        for mode in [DriveMode::Stirap, DriveMode::Msd] {
            let h = build_nve_tlr_hamiltonian(&spec, mode).unwrap();
            for t in [0.0, 0.5, 1.0] {
                assert_eq!(h.evaluate(t).unwrap().max_abs(), 0.0);
            }
        }
    }

    #[test]
    fn excitation_number_is_conserved() {
        let n = excitation_number();
        for mode in [DriveMode::Stirap, DriveMode::Msd] {
            let h = build_nve_tlr_hamiltonian(&HybridSystemSpec::standard(), mode).unwrap();
            for t in [0.0, 0.3, 0.6, 1.2] {
                assert!(n.commutator(&h.evaluate(t).unwrap()).max_abs() < 1e-12);
            }
        }
    }

    #[test]
    fn mean_photon_number_examples() {
        let vac = DensityMatrix::pure(&product_state(0, 0, 0));
        let one = DensityMatrix::pure(&product_state(1, 0, 0));
        assert_eq!(mean_photon_number(&vac).unwrap(), 0.0);
        assert_eq!(mean_photon_number(&one).unwrap(), 1.0);
        assert!(mean_photon_number(&DensityMatrix::maximally_mixed(3)).is_err());
    }

    #[test]
    fn collapse_operators_drop_zero_rates() {
        assert_eq!(DissipationSpec::standard().collapse_operators().len(), 5);
        assert!(DissipationSpec::none().collapse_operators().is_empty());
        assert!(DissipationSpec::new(-1.0, 0.0, 0.0).is_err());
        let d = DissipationSpec::standard().with_kappa_ratio(200.0).unwrap();
        assert!((d.kappa - 4.0).abs() < 1e-12);
    }
}
