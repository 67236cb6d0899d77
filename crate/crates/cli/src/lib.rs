//! Driver layer behind the `qce` binary: figure series, experiment reports
//! and scaling scans, each written with a JSON run manifest.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use serde_json::json;

pub mod config;
pub mod experiment;
pub mod figures;
pub mod output;
pub mod scaling;

pub use config::{read_experiment_file, ExperimentFile, ExperimentKind};
pub use figures::{Figure, FigureOptions};
pub use output::RunManifest;

fn ensure_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))
}

fn name_of(p: &Path) -> String {
    p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// Writes `<fig>.csv` and its manifest; returns the CSV path.
pub fn cmd_figure(figure: Figure, opts: &FigureOptions, out: &Path) -> Result<PathBuf> {
    let start = Instant::now();
    ensure_dir(out)?;
    let data = figures::build(figure, opts)?;
    let csv_path = out.join(format!("{}.csv", figure.stem()));
    let rows: Vec<Vec<String>> = data.points.iter().map(|p| p.record()).collect();
    output::write_csv(&csv_path, &figures::FIGURE_HEADER, &rows)?;
    for w in &data.warnings {
        log::warn!("{w}");
    }
    log::info!("{}: {} rows, series {:?}", figure.stem(), rows.len(), data.series_names());

    let mut manifest = RunManifest::new(figure.stem(), serde_json::to_value(opts)?);
    manifest.outputs.push(name_of(&csv_path));
    manifest.max_edge_mass = Some(data.max_edge_mass);
    manifest.warnings = data.warnings;
    manifest.finish(out, figure.stem(), start.elapsed())?;
    Ok(csv_path)
}

/// Writes `experiment_<kind>.json` and its manifest; returns the report path.
pub fn cmd_experiment(kind: ExperimentKind, config: &Path, out: &Path, simulate: bool) -> Result<PathBuf> {
    let start = Instant::now();
    ensure_dir(out)?;
    let file = read_experiment_file(config)?;
    let grid = if simulate { Some(qce_core::bloch_grid(24, 16)?) } else { None };
    let report = experiment::run(kind, &file, grid.as_ref())?;
    for w in &report.si.warnings {
        log::warn!("{w}");
    }
    let stem = format!("experiment_{}", kind.name());
    let path = out.join(format!("{stem}.json"));
    std::fs::write(&path, serde_json::to_string_pretty(&report)? + "\n")
        .with_context(|| format!("writing {}", path.display()))?;

    let params = json!({ "kind": kind, "config": config.display().to_string(), "simulate": simulate, "input": file });
    let mut manifest = RunManifest::new("experiment", params);
    manifest.outputs.push(name_of(&path));
    manifest.warnings = report.si.warnings.clone();
    manifest.finish(out, &stem, start.elapsed())?;
    Ok(path)
}

/// Writes `scaling_m<m>.csv` and its manifest; returns the CSV path.
pub fn cmd_scaling(m: u32, nbar_min: f64, nbar_max: f64, points: usize, out: &Path) -> Result<PathBuf> {
    let start = Instant::now();
    ensure_dir(out)?;
    let laws = scaling::scan(m, nbar_min, nbar_max, points)?;
    let stem = format!("scaling_m{m}");
    let path = out.join(format!("{stem}.csv"));
    let rows: Vec<Vec<String>> = laws.iter().map(|s| scaling::record(m, s)).collect();
    output::write_csv(&path, &scaling::SCALING_HEADER, &rows)?;

    let params = json!({ "m": m, "nbar_min": nbar_min, "nbar_max": nbar_max, "points": points });
    let mut manifest = RunManifest::new("scaling", params);
    manifest.outputs.push(name_of(&path));
    manifest.finish(out, &stem, start.elapsed())?;
    Ok(path)
}
