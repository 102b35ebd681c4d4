//! Plot-ready CSV tables and JSON summaries.
//!
//! Numbers are written as `{:.16e}` (17 significant digits), which
//! round-trips every `f64` exactly, so a summary and its table agree bit for
//! bit.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use msd_core::dynamics::Trajectory;

use crate::config::ScenarioConfig;
use crate::scenario::{RunOutput, RunSummary, SweepPoint};

fn push_num(line: &mut String, v: f64) {
    line.push(',');
    write!(line, "{v:.16e}").expect("write to String");
}

/// Header row: `t,P1,P2,P3`, then `F` when a target is recorded, then
/// `nbar` and every basis population `P_<label>` for product-space runs.
pub fn table_header(traj: &Trajectory) -> String {
    let mut cols = vec!["t".to_string(), "P1".into(), "P2".into(), "P3".into()];
    if traj.fidelity.is_some() {
        cols.push("F".into());
    }
    if traj.mean_photon.is_some() {
        cols.push("nbar".into());
        cols.extend(traj.labels.iter().map(|l| format!("P_{l}")));
    }
    cols.join(",")
}

pub fn render_table(traj: &Trajectory) -> String {
    let mut out = table_header(traj);
    out.push('\n');
    let full = traj.mean_photon.is_some();
    for i in 0..traj.len() {
        let mut line = format!("{:.16e}", traj.times[i]);
        for p in traj.lambda_populations(i) {
            push_num(&mut line, p);
        }
        if let Some(f) = &traj.fidelity {
            push_num(&mut line, f[i]);
        }
        if let (true, Some(n)) = (full, &traj.mean_photon) {
            push_num(&mut line, n[i]);
            for &p in &traj.populations[i] {
                push_num(&mut line, p);
            }
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn emit_table(traj: &Trajectory, path: &Path) -> Result<()> {
    fs::write(path, render_table(traj)).with_context(|| format!("cannot write {}", path.display()))
}

/// `<parameter leaf>,fidelity` followed by one row per point.
pub fn render_sweep(parameter: &str, points: &[SweepPoint]) -> String {
    let leaf = parameter.rsplit('.').next().unwrap_or(parameter);
    let mut out = format!("{leaf},fidelity\n");
    for p in points {
        let mut line = format!("{:.16e}", p.value);
        push_num(&mut line, p.fidelity);
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn write_summary(summary: &RunSummary, path: &Path) -> Result<()> {
    let mut body = serde_json::to_string_pretty(summary)?;
    body.push('\n');
    fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))
}

/// Output directory: explicit argument, then `MSD_OUT_DIR`, then the
/// config's `output.dir`, then `out/<scenario>`.
pub fn resolve_output_dir(explicit: Option<&Path>, cfg: &ScenarioConfig) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Some(p) = std::env::var_os(crate::OUT_DIR_ENV).filter(|v| !v.is_empty()) {
        return PathBuf::from(p);
    }
    cfg.output
        .dir
        .clone()
        .unwrap_or_else(|| PathBuf::from("out").join(cfg.scenario.as_str()))
}

/// Writes the table, the summary and (for sweeps) `sweep.csv` into `dir`.
/// Returns the paths written.
pub fn write_outputs(run: &RunOutput, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let names = &run.summary.config.output;
    let mut written = Vec::new();
    let table = dir.join(&names.trajectory);
    emit_table(&run.trajectory, &table)?;
    written.push(table);
    let summary = dir.join(&names.summary);
    write_summary(&run.summary, &summary)?;
    written.push(summary);
    if let (Some(points), Some(sweep)) = (&run.sweep, &run.summary.config.sweep) {
        let path = dir.join(&names.sweep);
        fs::write(&path, render_sweep(&sweep.parameter, points))
            .with_context(|| format!("cannot write {}", path.display()))?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use msd_core::driving::{BasisLabel, ConstantHamiltonian};
    use msd_core::dynamics::{propagate_schrodinger_observed, Observables, TimeGrid};
    use msd_core::linalg::{ComplexMatrix, StateVector};

    #[test]
    fn three_samples_give_four_lines() {
        let h = ConstantHamiltonian::new(ComplexMatrix::zeros(3), BasisLabel::ThreeLevel).unwrap();
        let obs = Observables::three_level().with_target(StateVector::basis(3, 0));
        let traj = propagate_schrodinger_observed(
            &h,
            &StateVector::basis(3, 1),
            &TimeGrid::new(0.0, 1.0, 2).unwrap(),
            &obs,
        )
        .unwrap();
        let text = render_table(&traj);
        assert_eq!(text.lines().count(), 4);
        assert!(text.starts_with("t,P1,P2,P3,F\n"));
        assert!(!text.contains('\r'));
        let last: Vec<f64> = text
            .lines()
            .last()
            .unwrap()
            .split(',')
            .map(|v| v.parse().unwrap())
            .collect();
        assert_eq!(last, vec![1.0, 0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn sweep_header_uses_parameter_leaf() {
        let text = render_sweep(
            "dissipation.kappa_ratio",
            &[SweepPoint {
                value: 1.0,
                fidelity: 0.5,
            }],
        );
        assert_eq!(text.lines().next(), Some("kappa_ratio,fidelity"));
        assert_eq!(text.lines().count(), 2);
    }
}
