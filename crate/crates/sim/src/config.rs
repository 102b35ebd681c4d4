//! Scenario configuration: TOML documents resolved against per-scenario defaults.
//!
//! Loading merges the document over the defaults of its `scenario` id and then
//! deserializes strictly, so unknown keys are rejected wherever they appear.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use msd_core::driving::DriveMode;
use msd_core::dynamics::TimeGrid;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use toml::{Table, Value};

/// Largest grid step accepted (µs).
pub const MAX_GRID_STEP: f64 = 1e-3;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed config: {0}")]
    Parse(String),
    #[error("missing required key `{0}`")]
    Missing(String),
    #[error("unknown scenario id `{0}` (expected one of: {list})", list = ScenarioId::ALL.map(|s| s.as_str()).join(", "))]
    UnknownScenario(String),
    #[error("invalid value for `{key}`: {reason}")]
    Invalid { key: String, reason: String },
}

fn invalid(key: &str, reason: impl Into<String>) -> ConfigError {
    ConfigError::Invalid {
        key: key.to_string(),
        reason: reason.into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScenarioId {
    Fig1b,
    Fig1c,
    Fig1e,
    Fig1f,
    Fig2a,
    Fig2b,
    Fig4a,
    Fig4b,
    Custom,
}

impl ScenarioId {
    pub const ALL: [ScenarioId; 9] = [
        Self::Fig1b,
        Self::Fig1c,
        Self::Fig1e,
        Self::Fig1f,
        Self::Fig2a,
        Self::Fig2b,
        Self::Fig4a,
        Self::Fig4b,
        Self::Custom,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Fig1b => "fig1b",
            Self::Fig1c => "fig1c",
            Self::Fig1e => "fig1e",
            Self::Fig1f => "fig1f",
            Self::Fig2a => "fig2a",
            Self::Fig2b => "fig2b",
            Self::Fig4a => "fig4a",
            Self::Fig4b => "fig4b",
            Self::Custom => "custom",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Self::Fig1b => "population transfer φ2 → φ1 under STIRAP",
            Self::Fig1c => "population transfer φ2 → φ1 under MSD",
            Self::Fig1e => "transfer with η1 delayed to 0.9 µs, STIRAP",
            Self::Fig1f => "transfer with η1 delayed to 0.9 µs, MSD",
            Self::Fig2a => "equal superposition of φ1 and φ2 under STIRAP",
            Self::Fig2b => "equal superposition of φ1 and φ2 under MSD",
            Self::Fig4a => "NVE–TLR transfer with dissipation, MSD",
            Self::Fig4b => "NVE–TLR fidelity versus cavity decay κ′/κ, MSD",
            Self::Custom => "user-defined; no defaults beyond output names",
        }
    }
}

impl fmt::Display for ScenarioId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScenarioId {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| ConfigError::UnknownScenario(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Stirap,
    Msd,
}

impl From<Mode> for DriveMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Stirap => DriveMode::Stirap,
            Mode::Msd => DriveMode::Msd,
        }
    }
}

/// Ideal final state used for the fidelity column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Phi1,
    Phi2,
    Phi3,
    /// `(φ1 − φ2)/√2`
    Superposition,
}

/// Pulse pair. Delays and width in µs; `eta0_mhz` is η0/2π in MHz and is
/// derived from the device parameters for hybrid runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum WaveformConfig {
    Transfer {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eta0_mhz: Option<f64>,
        t1: f64,
        t2: f64,
        width: f64,
    },
    Superposition {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eta0_mhz: Option<f64>,
        t3: f64,
        t4: f64,
        width: f64,
    },
}

impl WaveformConfig {
    pub fn eta0_mhz(&self) -> Option<f64> {
        match self {
            Self::Transfer { eta0_mhz, .. } | Self::Superposition { eta0_mhz, .. } => *eta0_mhz,
        }
    }

    pub fn width(&self) -> f64 {
        match self {
            Self::Transfer { width, .. } | Self::Superposition { width, .. } => *width,
        }
    }
}

/// Device parameters as value/2π in MHz.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HybridConfig {
    pub g_mhz: f64,
    pub omega0_mhz: f64,
    pub delta_mhz: f64,
}

/// Decay rates in 1/µs; the cavity rate used is `kappa · kappa_ratio`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DissipationConfig {
    pub kappa: f64,
    pub gamma: f64,
    pub gamma_phi: f64,
    #[serde(default = "one")]
    pub kappa_ratio: f64,
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub t_start: f64,
    pub t_end: f64,
    pub steps: i64,
}

impl GridConfig {
    pub fn time_grid(&self) -> TimeGrid {
        TimeGrid::new(self.t_start, self.t_end, self.steps as usize).expect("validated grid")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    /// Dotted key path into the config, e.g. `dissipation.kappa_ratio`.
    pub parameter: String,
    pub values: Vec<f64>,
    #[serde(default = "default_workers")]
    pub workers: usize,
}

fn default_workers() -> usize {
    4
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    /// Output directory; overridden by `--out` and `MSD_OUT_DIR`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dir: Option<PathBuf>,
    pub trajectory: String,
    pub summary: String,
    pub sweep: String,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self {
            dir: None,
            trajectory: "trajectory.csv".into(),
            summary: "summary.json".into(),
            sweep: "sweep.csv".into(),
        }
    }
}

/// Fully resolved scenario.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub scenario: ScenarioId,
    pub mode: Mode,
    pub target: Target,
    pub waveform: WaveformConfig,
    /// Present for open-system (NVE–TLR) runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hybrid: Option<HybridConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dissipation: Option<DissipationConfig>,
    pub grid: GridConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepConfig>,
    #[serde(default)]
    pub output: OutputConfig,
}

fn transfer(t1: f64) -> WaveformConfig {
    WaveformConfig::Transfer {
        eta0_mhz: Some(1.6),
        t1,
        t2: 0.25,
        width: 0.408,
    }
}

fn transfer_grid() -> GridConfig {
    GridConfig {
        t_start: -0.2,
        t_end: 1.2,
        steps: 14000,
    }
}

impl ScenarioConfig {
    /// Defaults of a named scenario; `None` for `custom`.
    pub fn preset(id: ScenarioId) -> Option<Self> {
        let closed = |mode, target, waveform, grid| Self {
            scenario: id,
            mode,
            target,
            waveform,
            hybrid: None,
            dissipation: None,
            grid,
            sweep: None,
            output: OutputConfig::default(),
        };
        let superposition = WaveformConfig::Superposition {
            eta0_mhz: Some(1.6),
            t3: 1.15,
            t4: 0.25,
            width: 0.408,
        };
        let superposition_grid = GridConfig {
            t_start: 0.0,
            t_end: 2.0,
            steps: 20000,
        };
        let open = |kappa_ratio: f64, sweep| Self {
            scenario: id,
            mode: Mode::Msd,
            target: Target::Phi1,
            waveform: WaveformConfig::Transfer {
                eta0_mhz: None,
                t1: 0.75,
                t2: 0.25,
                width: 0.408,
            },
            hybrid: Some(HybridConfig {
                g_mhz: 20.0,
                omega0_mhz: 16.0,
                delta_mhz: 200.0,
            }),
            dissipation: Some(DissipationConfig {
                kappa: 1.0 / 50.0,
                gamma: 1.0 / 6000.0,
                gamma_phi: 1.0 / 600.0,
                kappa_ratio,
            }),
            grid: GridConfig {
                t_start: 0.0,
                t_end: 1.2,
                steps: 12000,
            },
            sweep,
            output: OutputConfig::default(),
        };
        Some(match id {
            ScenarioId::Fig1b => closed(Mode::Stirap, Target::Phi1, transfer(0.75), transfer_grid()),
            ScenarioId::Fig1c => closed(Mode::Msd, Target::Phi1, transfer(0.75), transfer_grid()),
            ScenarioId::Fig1e => closed(Mode::Stirap, Target::Phi1, transfer(0.9), transfer_grid()),
            ScenarioId::Fig1f => closed(Mode::Msd, Target::Phi1, transfer(0.9), transfer_grid()),
            ScenarioId::Fig2a => closed(Mode::Stirap, Target::Superposition, superposition, superposition_grid),
            ScenarioId::Fig2b => closed(Mode::Msd, Target::Superposition, superposition, superposition_grid),
            ScenarioId::Fig4a => open(1.0, None),
            ScenarioId::Fig4b => open(
                200.0,
                Some(SweepConfig {
                    parameter: "dissipation.kappa_ratio".into(),
                    values: vec![1.0, 50.0, 100.0, 200.0],
                    workers: default_workers(),
                }),
            ),
            ScenarioId::Custom => return None,
        })
    }

    /// Parses a TOML document and resolves it against its scenario's defaults.
    pub fn from_toml_str(doc: &str) -> Result<Self, ConfigError> {
        let table: Table = doc
            .parse()
            .map_err(|e: toml::de::Error| ConfigError::Parse(e.to_string()))?;
        Self::resolve(table)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let doc = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml_str(&doc)
    }

    /// Named scenario with `key=value` overrides.
    pub fn from_scenario(id: &str, overrides: &[String]) -> Result<Self, ConfigError> {
        let mut table = Table::new();
        table.insert("scenario".into(), Value::String(id.to_string()));
        for o in overrides {
            apply_override(&mut table, o)?;
        }
        Self::resolve(table)
    }

    /// Merges `table` over the defaults of its `scenario` and validates.
    pub fn resolve(table: Table) -> Result<Self, ConfigError> {
        let id = match table.get("scenario") {
            None => return Err(ConfigError::Missing("scenario".into())),
            Some(Value::String(s)) => s.parse::<ScenarioId>()?,
            Some(_) => return Err(invalid("scenario", "must be a string")),
        };
        let mut base = match Self::preset(id) {
            Some(preset) => preset.to_table(),
            None => {
                let mut t = Table::new();
                t.insert("output".into(), Value::Table(to_table(&OutputConfig::default())));
                t
            }
        };
        // A different waveform kind replaces the preset block outright.
        if let (Some(Value::Table(user)), Some(Value::Table(preset))) = (table.get("waveform"), base.get("waveform")) {
            if user.get("kind").is_some_and(|k| Some(k) != preset.get("kind")) {
                base.remove("waveform");
            }
        }
        merge(&mut base, table);
        let cfg: Self = Value::Table(base).try_into().map_err(|e: toml::de::Error| {
            let msg = e.message().to_string();
            match msg.strip_prefix("missing field `").and_then(|r| r.strip_suffix('`')) {
                Some(field) => ConfigError::Missing(field.to_string()),
                None => ConfigError::Parse(msg),
            }
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_table(&self) -> Table {
        to_table(self)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Closed (three-level) or open (NVE–TLR) system.
    pub fn is_open(&self) -> bool {
        self.hybrid.is_some()
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let g = &self.grid;
        if g.steps <= 0 {
            return Err(invalid("grid.steps", "must be a positive integer"));
        }
        if !(g.t_start.is_finite() && g.t_end.is_finite()) {
            return Err(invalid("grid.t_end", "window must be finite"));
        }
        if !(g.t_end > g.t_start) {
            return Err(invalid("grid.t_end", "must exceed grid.t_start"));
        }
        let h = (g.t_end - g.t_start) / g.steps as f64;
        if h > MAX_GRID_STEP {
            return Err(invalid(
                "grid.steps",
                format!(
                    "step {h:.3e} µs exceeds {MAX_GRID_STEP:e} µs; need at least {}",
                    ((g.t_end - g.t_start) / MAX_GRID_STEP).ceil()
                ),
            ));
        }

        let positive = |key: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(invalid(key, "must be finite and positive"))
            }
        };
        let finite = |key: &str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(invalid(key, "must be finite"))
            }
        };
        positive("waveform.width", self.waveform.width())?;
        match &self.waveform {
            WaveformConfig::Transfer { t1, t2, .. } => {
                finite("waveform.t1", *t1)?;
                finite("waveform.t2", *t2)?;
            }
            WaveformConfig::Superposition { t3, t4, .. } => {
                finite("waveform.t3", *t3)?;
                finite("waveform.t4", *t4)?;
            }
        }

        match (&self.hybrid, self.waveform.eta0_mhz()) {
            (None, None) => return Err(ConfigError::Missing("waveform.eta0_mhz".into())),
            (None, Some(eta0)) => positive("waveform.eta0_mhz", eta0)?,
            (Some(_), Some(_)) => {
                return Err(invalid(
                    "waveform.eta0_mhz",
                    "hybrid runs derive η0 from hybrid.g_mhz · hybrid.omega0_mhz / hybrid.delta_mhz",
                ))
            }
            (Some(hy), None) => {
                positive("hybrid.g_mhz", hy.g_mhz)?;
                positive("hybrid.omega0_mhz", hy.omega0_mhz)?;
                positive("hybrid.delta_mhz", hy.delta_mhz)?;
                if !matches!(self.waveform, WaveformConfig::Transfer { .. }) {
                    return Err(invalid("waveform.kind", "hybrid runs use the transfer pulse pair"));
                }
                if matches!(self.target, Target::Superposition) {
                    return Err(invalid("target", "hybrid runs target a single basis state"));
                }
            }
        }

        if let Some(d) = &self.dissipation {
            if self.hybrid.is_none() {
                return Err(invalid("dissipation", "requires a [hybrid] block"));
            }
            for (key, v) in [
                ("dissipation.kappa", d.kappa),
                ("dissipation.gamma", d.gamma),
                ("dissipation.gamma_phi", d.gamma_phi),
                ("dissipation.kappa_ratio", d.kappa_ratio),
            ] {
                if !(v >= 0.0 && v.is_finite()) {
                    return Err(invalid(key, "must be finite and non-negative"));
                }
            }
        }

        if let Some(s) = &self.sweep {
            if s.values.is_empty() {
                return Err(invalid("sweep.values", "sweep list is empty"));
            }
            if s.workers == 0 {
                return Err(invalid("sweep.workers", "must be at least 1"));
            }
            if s.values.iter().any(|v| !v.is_finite()) {
                return Err(invalid("sweep.values", "values must be finite"));
            }
            let probe = self.with_parameter(&s.parameter, s.values[0])?;
            probe.validate()?;
        }

        for (key, name) in [
            ("output.trajectory", &self.output.trajectory),
            ("output.summary", &self.output.summary),
            ("output.sweep", &self.output.sweep),
        ] {
            if name.is_empty() || name.contains(['/', '\\']) {
                return Err(invalid(key, "must be a plain file name"));
            }
        }
        Ok(())
    }

    /// Copy with the numeric key at `path` set to `value`, sweep removed.
    pub fn with_parameter(&self, path: &str, value: f64) -> Result<Self, ConfigError> {
        let mut table = self.to_table();
        table.remove("sweep");
        let slot = lookup_mut(&mut table, path)
            .ok_or_else(|| invalid("sweep.parameter", format!("`{path}` is not a key of this scenario")))?;
        *slot = match slot {
            Value::Integer(_) if value.fract() == 0.0 => Value::Integer(value as i64),
            Value::Float(_) | Value::Integer(_) => Value::Float(value),
            _ => return Err(invalid("sweep.parameter", format!("`{path}` is not numeric"))),
        };
        let cfg: Self = Value::Table(table)
            .try_into()
            .map_err(|e: toml::de::Error| invalid("sweep.parameter", e.message().to_string()))?;
        Ok(cfg)
    }
}

fn to_table<T: Serialize>(v: &T) -> Table {
    Table::try_from(v).expect("serializes to a table")
}

/// Recursive merge of `overlay` into `base`; overlay wins on leaves.
fn merge(base: &mut Table, overlay: Table) {
    for (k, v) in overlay {
        match (base.get_mut(&k), v) {
            (Some(Value::Table(b)), Value::Table(o)) => merge(b, o),
            (_, v) => {
                base.insert(k, v);
            }
        }
    }
}

fn lookup_mut<'a>(table: &'a mut Table, path: &str) -> Option<&'a mut Value> {
    let mut parts = path.split('.');
    let first = parts.next()?;
    let mut cur = table.get_mut(first)?;
    for p in parts {
        cur = cur.as_table_mut()?.get_mut(p)?;
    }
    Some(cur)
}

/// Applies `a.b.c=value` to `table`. The value is read as a TOML literal and
/// falls back to a bare string.
pub fn apply_override(table: &mut Table, assignment: &str) -> Result<(), ConfigError> {
    let (path, raw) = assignment
        .split_once('=')
        .ok_or_else(|| invalid(assignment, "override must look like key=value"))?;
    let path = path.trim();
    let raw = raw.trim();
    if path.is_empty() || path.split('.').any(str::is_empty) {
        return Err(invalid(path, "malformed key path"));
    }
    let value = format!("v = {raw}")
        .parse::<Table>()
        .ok()
        .and_then(|mut t| t.remove("v"))
        .unwrap_or_else(|| Value::String(raw.to_string()));
    let mut cur = table;
    let mut parts: Vec<&str> = path.split('.').collect();
    let leaf = parts.pop().expect("non-empty path");
    for p in parts {
        let entry = cur.entry(p.to_string()).or_insert_with(|| Value::Table(Table::new()));
        cur = entry
            .as_table_mut()
            .ok_or_else(|| invalid(path, format!("`{p}` is not a table")))?;
    }
    cur.insert(leaf.to_string(), value);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1c_defaults() {
        let c = ScenarioConfig::from_toml_str("scenario = \"fig1c\"").unwrap();
        assert_eq!(c.mode, Mode::Msd);
        assert_eq!(
            c.waveform,
            WaveformConfig::Transfer {
                eta0_mhz: Some(1.6),
                t1: 0.75,
                t2: 0.25,
                width: 0.408
            }
        );
        assert!(!c.is_open());
    }

    #[test]
    fn fig1e_delays_eta1() {
        let c = ScenarioConfig::from_toml_str("scenario = \"fig1e\"").unwrap();
        assert_eq!(c.mode, Mode::Stirap);
        assert!(matches!(c.waveform, WaveformConfig::Transfer { t1, .. } if t1 == 0.9));
    }

    #[test]
    fn zero_steps_names_the_key() {
        let err = ScenarioConfig::from_toml_str("scenario = \"fig1c\"\n[grid]\nsteps = 0\n").unwrap_err();
        assert!(err.to_string().contains("steps"), "{err}");
    }

    #[test]
    fn coarse_grid_is_rejected() {
        let err = ScenarioConfig::from_scenario("fig1c", &["grid.steps=100".into()]).unwrap_err();
        assert!(err.to_string().contains("grid.steps"), "{err}");
    }

    #[test]
    fn unknown_keys_and_ids_are_rejected() {
        assert!(ScenarioConfig::from_toml_str("scenario = \"fig1c\"\ncolour = 3\n").is_err());
        assert!(ScenarioConfig::from_toml_str("scenario = \"fig1c\"\n[grid]\nstep = 3\n").is_err());
        assert!(ScenarioConfig::from_toml_str("scenario = \"fig1c\"\n[waveform]\ndelay = 3\n").is_err());
        let err = ScenarioConfig::from_toml_str("scenario = \"fig9\"").unwrap_err();
        assert!(matches!(err, ConfigError::UnknownScenario(_)));
        assert!(
            matches!(ScenarioConfig::from_toml_str("mode = \"msd\"").unwrap_err(), ConfigError::Missing(k) if k == "scenario")
        );
    }

    #[test]
    fn non_positive_width_names_the_key() {
        let err = ScenarioConfig::from_scenario("fig2b", &["waveform.width=0".into()]).unwrap_err();
        assert!(err.to_string().contains("waveform.width"), "{err}");
    }

    #[test]
    fn custom_requires_its_keys() {
        let err = ScenarioConfig::from_toml_str("scenario = \"custom\"").unwrap_err();
        assert!(err.to_string().contains("missing"), "{err}");
        let doc = r#"
            scenario = "custom"
            mode = "stirap"
            target = "phi1"
            [waveform]
            kind = "transfer"
            eta0_mhz = 2.0
            t1 = 0.8
            t2 = 0.2
            width = 0.3
            [grid]
            t_start = 0.0
            t_end = 1.0
            steps = 1000
        "#;
        assert!(ScenarioConfig::from_toml_str(doc).is_ok());
    }

    #[test]
    fn waveform_kind_can_be_switched() {
        let doc = "scenario = \"fig1c\"\n[waveform]\nkind = \"superposition\"\neta0_mhz = 1.6\nt3 = 1.0\nt4 = 0.2\nwidth = 0.4\n";
        let c = ScenarioConfig::from_toml_str(doc).unwrap();
        assert!(matches!(c.waveform, WaveformConfig::Superposition { t3, .. } if t3 == 1.0));
    }

    #[test]
    fn hybrid_runs_reject_explicit_eta0() {
        let err = ScenarioConfig::from_scenario("fig4a", &["waveform.eta0_mhz=1.6".into()]).unwrap_err();
        assert!(err.to_string().contains("eta0_mhz"));
    }

    #[test]
    fn every_preset_round_trips() {
        for id in ScenarioId::ALL {
            let Some(c) = ScenarioConfig::preset(id) else { continue };
            c.validate().unwrap();
            let back = ScenarioConfig::from_toml_str(&c.to_toml_string()).unwrap();
            assert_eq!(back, c, "{id}");
        }
    }

    #[test]
    fn overrides_accept_literals_and_bare_strings() {
        let c = ScenarioConfig::from_scenario(
            "fig1c",
            &[
                "mode=stirap".into(),
                "waveform.t1 = 0.8".into(),
                "grid.steps=28000".into(),
            ],
        )
        .unwrap();
        assert_eq!(c.mode, Mode::Stirap);
        assert!(matches!(c.waveform, WaveformConfig::Transfer { t1, .. } if t1 == 0.8));
        assert_eq!(c.grid.steps, 28000);
        assert!(ScenarioConfig::from_scenario("fig1c", &["novalue".into()]).is_err());
    }

    #[test]
    fn sweep_validation() {
        assert!(ScenarioConfig::from_scenario("fig4b", &["sweep.values=[]".into()]).is_err());
        let err = ScenarioConfig::from_scenario("fig4b", &["sweep.parameter=\"dissipation.nope\"".into()]).unwrap_err();
        assert!(err.to_string().contains("sweep.parameter"));
        let c = ScenarioConfig::preset(ScenarioId::Fig4b).unwrap();
        let point = c.with_parameter("dissipation.kappa_ratio", 50.0).unwrap();
        assert_eq!(point.dissipation.unwrap().kappa_ratio, 50.0);
        assert!(point.sweep.is_none());
    }
}
