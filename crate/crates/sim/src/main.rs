use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use msd_sim::config::{apply_override, ScenarioConfig, ScenarioId};
use msd_sim::{execute, resolve_output_dir, write_outputs};

/// Counterdiabatic (MSD) and STIRAP population-transfer simulator.
#[derive(Debug, Parser)]
#[command(name = "msd", version)]
struct Cli {
    /// Output directory (default: $MSD_OUT_DIR, then output.dir, then out/<scenario>).
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a scenario from a TOML file or by name.
    Run {
        /// Scenario file.
        #[arg(required_unless_present = "scenario", conflicts_with = "scenario")]
        config: Option<PathBuf>,
        /// Named scenario, e.g. fig1c.
        #[arg(long)]
        scenario: Option<String>,
        /// Override a key, e.g. --set grid.steps=28000. Repeatable.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// List the named scenarios.
    ListScenarios,
}

fn load(config: Option<PathBuf>, scenario: Option<String>, overrides: &[String]) -> Result<ScenarioConfig> {
    match (config, scenario) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
            let mut table: toml::Table = text
                .parse()
                .with_context(|| format!("malformed config {}", path.display()))?;
            for o in overrides {
                apply_override(&mut table, o)?;
            }
            Ok(ScenarioConfig::resolve(table).with_context(|| format!("in {}", path.display()))?)
        }
        (None, Some(id)) => Ok(ScenarioConfig::from_scenario(&id, overrides)?),
        (None, None) => unreachable!("clap requires a config or --scenario"),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::ListScenarios => {
            for id in ScenarioId::ALL {
                println!("{:<8} {}", id.as_str(), id.description());
            }
            Ok(())
        }
        Command::Run {
            config,
            scenario,
            overrides,
        } => {
            let cfg = load(config, scenario, &overrides)?;
            let out = execute(&cfg)?;
            let dir = resolve_output_dir(cli.out.as_deref(), &cfg);
            let written = write_outputs(&out, &dir)?;
            let s = &out.summary;
            for w in &s.warnings {
                eprintln!("warning: {w}");
            }
            let p = s.final_populations;
            println!(
                "{}: P1 = {:.6}, P2 = {:.6}, P3 = {:.6}, F = {:.6} ({:.2} s)",
                s.scenario, p.p1, p.p2, p.p3, s.final_fidelity, s.wall_time_s
            );
            if let Some(points) = &out.sweep {
                for pt in points {
                    println!(
                        "  {} = {}: F = {:.6}",
                        cfg.sweep.as_ref().map_or("value", |w| w.parameter.as_str()),
                        pt.value,
                        pt.fidelity
                    );
                }
            }
            for path in written {
                println!("wrote {}", path.display());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
