//! Population transfer, open-system limits and integrator convergence.

use msd_core::driving::{build_drive, build_h0, build_hm, msd_dressed_dark_state, DriveMode, ThreeLevelBasis};
use msd_core::dynamics::{evolve_schrodinger, propagate_lindblad, propagate_schrodinger, TimeGrid};
use msd_core::hybrid::{
    build_nve_tlr_hamiltonian, embed_lambda_state, product_state, DissipationSpec, HybridSystemSpec, LAMBDA_INDICES,
};
use msd_core::linalg::{DensityMatrix, StateVector};
use msd_core::pulse::{transfer_waveform, TransferParams};

fn transfer_grid() -> TimeGrid {
    TimeGrid::new(-0.2, 1.2, 14000).unwrap()
}

fn phi2() -> StateVector {
    ThreeLevelBasis::state(ThreeLevelBasis::PHI2)
}

#[test]
fn msd_transfers_population_and_stirap_nearly_does() {
    let w = transfer_waveform(&TransferParams::standard()).unwrap();
    let msd = propagate_schrodinger(&build_hm(&w), &phi2(), &transfer_grid()).unwrap();
    let [p1, p2, p3] = msd.final_lambda_populations();
    assert!(p1 >= 0.999 && p2 <= 1e-3 && p3 <= 1e-3, "{p1} {p2} {p3}");
    assert!(msd.diagnostics.drift_per_1000_steps() <= 1e-9);

    let stirap = propagate_schrodinger(&build_h0(&w), &phi2(), &transfer_grid()).unwrap();
    assert!(stirap.final_lambda_populations()[0] >= 0.95);
}

#[test]
fn delayed_pump_separates_msd_from_stirap() {
    let p = TransferParams {
        t1: 0.9,
        ..TransferParams::standard()
    };
    let w = transfer_waveform(&p).unwrap();
    let msd = propagate_schrodinger(&build_hm(&w), &phi2(), &transfer_grid()).unwrap();
    let stirap = propagate_schrodinger(&build_h0(&w), &phi2(), &transfer_grid()).unwrap();
    let (m, s) = (msd.final_lambda_populations()[0], stirap.final_lambda_populations()[0]);
    assert!(m >= 0.999 && s <= m - 0.01, "msd {m} stirap {s}");
}

#[test]
fn msd_follows_its_dressed_dark_state_exactly() {
    let w = transfer_waveform(&TransferParams::standard()).unwrap();
    let grid = TimeGrid::new(0.0, 1.0, 10000).unwrap();
    let psi0 = msd_dressed_dark_state(&w.derived(grid.t_start).unwrap()).unwrap();
    let mut worst: f64 = 0.0;
    evolve_schrodinger(&build_hm(&w), &psi0, &grid, |_, t, psi| {
        let target = msd_dressed_dark_state(&w.derived(t).unwrap()).unwrap();
        worst = worst.max(1.0 - target.inner(psi).norm_sqr());
    })
    .unwrap();
    assert!(worst < 1e-8, "infidelity {worst:e}");
}

#[test]
fn step_halving_converges_at_fourth_order() {
    let w = transfer_waveform(&TransferParams::standard()).unwrap();
    let h = build_hm(&w);
    let finals: Vec<StateVector> = [400, 800, 1600]
        .iter()
        .map(|&n| {
            let grid = TimeGrid::new(0.0, 1.0, n).unwrap();
            evolve_schrodinger(&h, &phi2(), &grid, |_, _, _| {}).unwrap().0
        })
        .collect();
    let diff = |a: &StateVector, b: &StateVector| a.add_scaled(-msd_core::linalg::ONE, b).norm_sqr().sqrt();
    let ratio = diff(&finals[0], &finals[1]) / diff(&finals[1], &finals[2]);
    assert!((ratio - 16.0).abs() <= 4.0, "ratio {ratio}");
}

#[test]
fn closed_lindblad_reproduces_schrodinger() {
    let spec = HybridSystemSpec::standard();
    let h = build_nve_tlr_hamiltonian(&spec, DriveMode::Msd).unwrap();
    let grid = TimeGrid::new(0.0, 1.2, 12000).unwrap();
    let psi0 = embed_lambda_state(&phi2());
    let open = propagate_lindblad(&h, &DensityMatrix::pure(&psi0), &DissipationSpec::none(), &grid).unwrap();
    let closed = propagate_schrodinger(&h, &psi0, &grid).unwrap();
    let mut worst: f64 = 0.0;
    let mut leak: f64 = 0.0;
    for (a, b) in open.populations.iter().zip(&closed.populations) {
        for k in 0..8 {
            worst = worst.max((a[k] - b[k]).abs());
            if !LAMBDA_INDICES.contains(&k) {
                leak = leak.max(a[k].abs());
            }
        }
    }
    assert!(worst < 1e-7, "{worst:e}");
    assert!(leak <= 1e-10, "{leak:e}");

    let three = propagate_schrodinger(&build_drive(&spec.waveform().unwrap(), DriveMode::Msd), &phi2(), &grid).unwrap();
    for (a, b) in closed.populations.iter().zip(&three.populations) {
        for (k, &idx) in LAMBDA_INDICES.iter().enumerate() {
            assert!((a[idx] - b[k]).abs() < 1e-12);
        }
    }
}

#[test]
fn dissipative_msd_transfer_keeps_high_fidelity() {
    let spec = HybridSystemSpec::standard();
    let h = build_nve_tlr_hamiltonian(&spec, DriveMode::Msd).unwrap();
    let grid = TimeGrid::new(0.0, 1.2, 12000).unwrap();
    let rho0 = DensityMatrix::pure(&product_state(0, 1, 0));
    let traj = propagate_lindblad(&h, &rho0, &DissipationSpec::standard(), &grid).unwrap();
    let f = traj.final_lambda_populations()[0];
    assert!(f >= 0.99, "F = {f}");
    assert!(traj.max_mean_photon().unwrap() < 0.5);
    let d = traj.diagnostics;
    assert!(
        d.max_drift <= 1e-7 && d.max_hermiticity_error <= 1e-9 && d.min_eigenvalue.unwrap() >= -1e-6,
        "{d:?}"
    );
}
