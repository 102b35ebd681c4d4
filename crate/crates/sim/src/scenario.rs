//! Builds and runs the system a [`ScenarioConfig`] describes.

use std::time::Instant;

use anyhow::{Context, Result};
use msd_core::driving::{build_drive, ThreeLevelBasis};
use msd_core::dynamics::{
    propagate_lindblad_observed, propagate_schrodinger_observed, Diagnostics, Observables, Trajectory,
};
use msd_core::hybrid::{
    build_nve_tlr_hamiltonian, embed_lambda_state, product_state, DispersiveWarning, DissipationSpec, HybridSystemSpec,
};
use msd_core::linalg::{DensityMatrix, StateVector};
use msd_core::pulse::{
    angular_from_mhz, superposition_waveform, transfer_waveform, ControlWaveform, SuperpositionParams, TransferParams,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{GridConfig, Mode, ScenarioConfig, ScenarioId, Target, WaveformConfig};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FinalPopulations {
    #[serde(rename = "P1")]
    pub p1: f64,
    #[serde(rename = "P2")]
    pub p2: f64,
    #[serde(rename = "P3")]
    pub p3: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsSummary {
    pub max_drift: f64,
    pub final_drift: f64,
    pub drift_per_1000_steps: f64,
    pub max_hermiticity_error: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_eigenvalue: Option<f64>,
}

impl From<Diagnostics> for DiagnosticsSummary {
    fn from(d: Diagnostics) -> Self {
        Self {
            max_drift: d.max_drift,
            final_drift: d.final_drift,
            drift_per_1000_steps: d.drift_per_1000_steps(),
            max_hermiticity_error: d.max_hermiticity_error,
            min_eigenvalue: d.min_eigenvalue,
        }
    }
}

/// Headline numbers of one run. Final values are the last row of the
/// trajectory table; `max_mean_photon` is the column maximum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub scenario: ScenarioId,
    pub mode: Mode,
    pub open_system: bool,
    pub final_populations: FinalPopulations,
    pub final_fidelity: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_mean_photon: Option<f64>,
    pub wall_time_s: f64,
    pub grid: GridConfig,
    pub diagnostics: DiagnosticsSummary,
    pub warnings: Vec<String>,
    pub config: ScenarioConfig,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub value: f64,
    pub fidelity: f64,
}

/// Everything a scenario produces.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub trajectory: Trajectory,
    pub summary: RunSummary,
    pub sweep: Option<Vec<SweepPoint>>,
}

fn control_waveform(w: &WaveformConfig) -> Result<ControlWaveform> {
    let eta0 = |v: Option<f64>| angular_from_mhz(v.expect("validated eta0"));
    Ok(match *w {
        WaveformConfig::Transfer {
            eta0_mhz,
            t1,
            t2,
            width,
        } => transfer_waveform(&TransferParams {
            eta0: eta0(eta0_mhz),
            t1,
            t2,
            width,
        })?,
        WaveformConfig::Superposition {
            eta0_mhz,
            t3,
            t4,
            width,
        } => superposition_waveform(&SuperpositionParams {
            eta0: eta0(eta0_mhz),
            t3,
            t4,
            width,
        })?,
    })
}

fn target_state(t: Target) -> StateVector {
    match t {
        Target::Phi1 => ThreeLevelBasis::state(ThreeLevelBasis::PHI1),
        Target::Phi2 => ThreeLevelBasis::state(ThreeLevelBasis::PHI2),
        Target::Phi3 => ThreeLevelBasis::state(ThreeLevelBasis::PHI3),
        Target::Superposition => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            StateVector::from_real(&[s, -s, 0.0])
        }
    }
}

pub fn hybrid_spec(cfg: &ScenarioConfig) -> Option<HybridSystemSpec> {
    let hy = cfg.hybrid.as_ref()?;
    let WaveformConfig::Transfer { t1, t2, width, .. } = cfg.waveform else {
        return None;
    };
    Some(HybridSystemSpec {
        g_mhz: hy.g_mhz,
        omega0_mhz: hy.omega0_mhz,
        delta_mhz: hy.delta_mhz,
        t1,
        t2,
        width,
    })
}

pub fn dissipation_spec(cfg: &ScenarioConfig) -> Result<DissipationSpec> {
    Ok(match &cfg.dissipation {
        None => DissipationSpec::none(),
        Some(d) => DissipationSpec::new(d.kappa * d.kappa_ratio, d.gamma, d.gamma_phi)?,
    })
}

fn warning_text(w: DispersiveWarning) -> String {
    match w {
        DispersiveWarning::WeakDetuningVsCoupling { ratio } => {
            format!("Δ/g = {ratio:.3} is below 5; dispersive couplings are unreliable")
        }
        DispersiveWarning::WeakDetuningVsDrive { ratio } => {
            format!("Δ/Ω0 = {ratio:.3} is below 5; dispersive couplings are unreliable")
        }
    }
}

/// Runs one scenario (ignoring any sweep block).
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<(Trajectory, RunSummary)> {
    run_inner(cfg).with_context(|| format!("scenario {}", cfg.scenario))
}

fn run_inner(cfg: &ScenarioConfig) -> Result<(Trajectory, RunSummary)> {
    cfg.validate()?;
    let grid = cfg.grid.time_grid();
    let start = Instant::now();
    let mut warnings = Vec::new();
    let trajectory = match hybrid_spec(cfg) {
        None => {
            let h = build_drive(&control_waveform(&cfg.waveform)?, cfg.mode.into());
            let obs = Observables::three_level().with_target(target_state(cfg.target));
            propagate_schrodinger_observed(&h, &ThreeLevelBasis::state(ThreeLevelBasis::PHI2), &grid, &obs)?
        }
        Some(spec) => {
            warnings.extend(spec.dispersive_warnings().into_iter().map(warning_text));
            let h = build_nve_tlr_hamiltonian(&spec, cfg.mode.into())?;
            let obs = Observables::hybrid().with_target(embed_lambda_state(&target_state(cfg.target)));
            let rho0 = DensityMatrix::pure(&product_state(0, 1, 0));
            propagate_lindblad_observed(&h, &rho0, &dissipation_spec(cfg)?, &grid, &obs)?
        }
    };
    let wall_time_s = start.elapsed().as_secs_f64();
    let [p1, p2, p3] = trajectory.final_lambda_populations();
    let summary = RunSummary {
        scenario: cfg.scenario,
        mode: cfg.mode,
        open_system: cfg.is_open(),
        final_populations: FinalPopulations { p1, p2, p3 },
        final_fidelity: trajectory.final_fidelity().expect("target is always set"),
        max_mean_photon: trajectory.max_mean_photon(),
        wall_time_s,
        grid: cfg.grid.clone(),
        diagnostics: trajectory.diagnostics.into(),
        warnings,
        config: cfg.clone(),
    };
    Ok((trajectory, summary))
}

/// One run per sweep value on a pool of `sweep.workers` threads; the result
/// is sorted by value.
pub fn run_sweep(cfg: &ScenarioConfig) -> Result<Vec<SweepPoint>> {
    let sweep = cfg
        .sweep
        .as_ref()
        .with_context(|| format!("scenario {} has no [sweep] block", cfg.scenario))?;
    if sweep.values.is_empty() {
        anyhow::bail!("scenario {}: sweep list is empty", cfg.scenario);
    }
    let points: Vec<ScenarioConfig> = sweep
        .values
        .iter()
        .map(|&v| cfg.with_parameter(&sweep.parameter, v))
        .collect::<Result<_, _>>()?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(sweep.workers).build()?;
    let mut out: Vec<SweepPoint> = pool.install(|| {
        points
            .par_iter()
            .zip(sweep.values.par_iter())
            .map(|(point, &value)| {
                let (traj, _) = run_scenario(point).with_context(|| format!("sweep {} = {value}", sweep.parameter))?;
                Ok(SweepPoint {
                    value,
                    fidelity: traj.final_fidelity().expect("target is always set"),
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    out.sort_by(|a, b| a.value.total_cmp(&b.value));
    Ok(out)
}

/// The scenario run plus its sweep, if configured.
pub fn execute(cfg: &ScenarioConfig) -> Result<RunOutput> {
    let (trajectory, summary) = run_scenario(cfg)?;
    let sweep = match cfg.sweep {
        Some(_) => Some(run_sweep(cfg)?),
        None => None,
    };
    Ok(RunOutput {
        trajectory,
        summary,
        sweep,
    })
}
