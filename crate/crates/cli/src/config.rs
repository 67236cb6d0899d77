//! Experiment configs in human units, converted to SI at the boundary.

use std::f64::consts::TAU;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use qce_core::constants::CODATA_2018;
use qce_core::experiments::{DipoleConfig, QuadrupoleConfig, RamanConfig, DEFAULT_BANDWIDTH, DEFAULT_RAMAN_GAMMA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ExperimentKind {
    Quadrupole,
    Dipole,
    Raman,
}

impl ExperimentKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExperimentKind::Quadrupole => "quadrupole",
            ExperimentKind::Dipole => "dipole",
            ExperimentKind::Raman => "raman",
        }
    }
}

/// The JSON file as written by users. Every key is optional at this level;
/// which ones are required depends on the experiment kind.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
pub struct ExperimentFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub area_um2: Option<f64>,
    pub power_mW: Option<f64>,
    pub wavelength_nm: Option<f64>,
    pub quadrupole_e_a0_sq: Option<f64>,
    pub dipole_e_a0: Option<f64>,
    pub detuning_GHz: Option<f64>,
    pub gamma_MHz: Option<f64>,
    pub lifetime_s: Option<f64>,
    pub bandwidth_kHz: Option<f64>,
}

/// Core-side field name for each JSON key, so errors name both.
fn si_name(key: &str) -> &'static str {
    match key {
        "area_um2" => "area_A",
        "power_mW" => "power_P",
        "wavelength_nm" => "wavelength",
        "quadrupole_e_a0_sq" => "quadrupole_Q",
        "dipole_e_a0" => "dipole_d",
        "detuning_GHz" => "detuning_delta",
        "gamma_MHz" => "gamma_excited",
        "lifetime_s" => "lifetime_tau0",
        "bandwidth_kHz" => "bandwidth_B",
        _ => "?",
    }
}

fn required(key: &str, v: Option<f64>) -> Result<f64> {
    let v = v.with_context(|| format!("config: missing field `{key}` ({})", si_name(key)))?;
    positive(key, v)
}

fn positive(key: &str, v: f64) -> Result<f64> {
    if !(v.is_finite() && v > 0.0) {
        bail!("config: field `{key}` ({}) must be positive, got {v}", si_name(key));
    }
    Ok(v)
}

fn bandwidth(v: Option<f64>) -> Result<f64> {
    match v {
        None => Ok(DEFAULT_BANDWIDTH),
        Some(b) if b.is_finite() && b >= 0.0 => Ok(TAU * 1e3 * b),
        Some(b) => bail!("config: field `bandwidth_kHz` (bandwidth_B) must be >= 0, got {b}"),
    }
}

fn forbid(kind: ExperimentKind, key: &str, v: Option<f64>) -> Result<()> {
    if v.is_some() {
        bail!("config: field `{key}` does not apply to a {} experiment", kind.name());
    }
    Ok(())
}

pub fn read_experiment_file(path: &Path) -> Result<ExperimentFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

impl ExperimentFile {
    pub fn quadrupole(&self) -> Result<QuadrupoleConfig> {
        let kind = ExperimentKind::Quadrupole;
        forbid(kind, "dipole_e_a0", self.dipole_e_a0)?;
        forbid(kind, "detuning_GHz", self.detuning_GHz)?;
        forbid(kind, "gamma_MHz", self.gamma_MHz)?;
        Ok(QuadrupoleConfig {
            area: required("area_um2", self.area_um2)? * 1e-12,
            power: required("power_mW", self.power_mW)? * 1e-3,
            wavelength: required("wavelength_nm", self.wavelength_nm)? * 1e-9,
            quadrupole: required("quadrupole_e_a0_sq", self.quadrupole_e_a0_sq)? * CODATA_2018.atomic_quadrupole(),
            lifetime: required("lifetime_s", self.lifetime_s)?,
            bandwidth: bandwidth(self.bandwidth_kHz)?,
        })
    }

    pub fn dipole(&self) -> Result<DipoleConfig> {
        let kind = ExperimentKind::Dipole;
        forbid(kind, "quadrupole_e_a0_sq", self.quadrupole_e_a0_sq)?;
        forbid(kind, "detuning_GHz", self.detuning_GHz)?;
        forbid(kind, "gamma_MHz", self.gamma_MHz)?;
        Ok(DipoleConfig {
            area: required("area_um2", self.area_um2)? * 1e-12,
            power: required("power_mW", self.power_mW)? * 1e-3,
            wavelength: required("wavelength_nm", self.wavelength_nm)? * 1e-9,
            dipole: required("dipole_e_a0", self.dipole_e_a0)? * CODATA_2018.atomic_dipole(),
            lifetime: required("lifetime_s", self.lifetime_s)?,
            bandwidth: bandwidth(self.bandwidth_kHz)?,
        })
    }

    pub fn raman(&self) -> Result<RamanConfig> {
        let kind = ExperimentKind::Raman;
        forbid(kind, "quadrupole_e_a0_sq", self.quadrupole_e_a0_sq)?;
        forbid(kind, "lifetime_s", self.lifetime_s)?;
        let gamma = match self.gamma_MHz {
            Some(g) => TAU * 1e6 * positive("gamma_MHz", g)?,
            None => DEFAULT_RAMAN_GAMMA,
        };
        Ok(RamanConfig {
            area: required("area_um2", self.area_um2)? * 1e-12,
            power: required("power_mW", self.power_mW)? * 1e-3,
            wavelength: required("wavelength_nm", self.wavelength_nm)? * 1e-9,
            dipole: required("dipole_e_a0", self.dipole_e_a0)? * CODATA_2018.atomic_dipole(),
            detuning: TAU * 1e9 * required("detuning_GHz", self.detuning_GHz)?,
            gamma,
            bandwidth: bandwidth(self.bandwidth_kHz)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_are_rejected() {
        let err = serde_json::from_str::<ExperimentFile>(r#"{"area_um2": 1, "area_A": 2}"#).unwrap_err();
        assert!(err.to_string().contains("area_A"));
    }

    #[test]
    fn unit_conversion() {
        let f: ExperimentFile = serde_json::from_str(
            r#"{"area_um2": 100, "power_mW": 0.5, "wavelength_nm": 800, "dipole_e_a0": 0.2, "detuning_GHz": 10}"#,
        )
        .unwrap();
        let c = f.raman().unwrap();
        assert!((c.area - 1e-10).abs() < 1e-24);
        assert!((c.power - 5e-4).abs() < 1e-18);
        assert!((c.detuning - TAU * 1e10).abs() < 1e-3);
        assert_eq!(c.gamma, DEFAULT_RAMAN_GAMMA);
        assert!(f.quadrupole().is_err());
    }

    #[test]
    fn missing_and_negative_fields_name_both_spellings() {
        let f: ExperimentFile = serde_json::from_str(r#"{"area_um2": -3}"#).unwrap();
        let msg = f.dipole().unwrap_err().to_string();
        assert!(msg.contains("area_um2") && msg.contains("area_A"), "{msg}");
        let f: ExperimentFile = serde_json::from_str(r#"{"area_um2": 3}"#).unwrap();
        let msg = f.dipole().unwrap_err().to_string();
        assert!(msg.contains("power_mW") && msg.contains("power_P"), "{msg}");
    }
}
