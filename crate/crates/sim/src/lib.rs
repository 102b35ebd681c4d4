//! Scenario runner for the `msd-core` simulator: TOML configs, figure presets,
//! parameter sweeps and CSV/JSON output.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod output;
pub mod scenario;

pub use config::{ConfigError, ScenarioConfig, ScenarioId};
pub use output::{emit_table, resolve_output_dir, write_outputs};
pub use scenario::{execute, run_scenario, run_sweep, RunOutput, RunSummary, SweepPoint};

/// Environment variable selecting the output directory.
pub const OUT_DIR_ENV: &str = "MSD_OUT_DIR";
