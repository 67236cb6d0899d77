//! CSV writing and run manifests.

use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{Context, Result};
use serde::Serialize;

/// Fixed nine-significant-digit rendering used in every CSV cell.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.8e}")
}

pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("creating {}", path.display()))?;
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: serde_json::Value,
    pub outputs: Vec<String>,
    pub version: String,
    pub duration_s: f64,
    /// Largest amplitude mass on frozen window edges over the run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_edge_mass: Option<f64>,
    pub warnings: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &str, parameters: serde_json::Value) -> Self {
        Self {
            command: command.to_string(),
            parameters,
            outputs: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            duration_s: 0.0,
            max_edge_mass: None,
            warnings: Vec::new(),
        }
    }

    /// Writes `<stem>.manifest.json` next to the outputs and returns its path.
    pub fn finish(mut self, dir: &Path, stem: &str, elapsed: Duration) -> Result<PathBuf> {
        self.duration_s = elapsed.as_secs_f64();
        let path = dir.join(format!("{stem}.manifest.json"));
        let text = serde_json::to_string_pretty(&self)?;
        std::fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(fmt_num(0.0), "0.00000000e0");
        assert_eq!(fmt_num(1.0 / 3.0), "3.33333333e-1");
        assert_eq!(fmt_num(-2.5e-8), "-2.50000000e-8");
    }
}
