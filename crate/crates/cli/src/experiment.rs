//! Gate decoherence reports for the bundled experiment kinds.

use std::f64::consts::TAU;

use anyhow::Result;
use serde::Serialize;

use qce_core::experiments::{attach_simulation, dipole_report, quadrupole_report, raman_report, GateReport};
use qce_core::BlochGrid;

use crate::config::{ExperimentFile, ExperimentKind};

/// The same numbers as [`GateReport`] in lab units.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[allow(non_snake_case)]
pub struct HumanUnits {
    pub t_not_us: f64,
    pub nbar: f64,
    pub rabi_rate_MHz: f64,
    pub coupling_Hz: f64,
    pub entanglement_bits: f64,
    pub p_spon: f64,
    pub laser_frequency_THz: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub kind: ExperimentKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub human: HumanUnits,
    pub si: GateReport,
}

fn human(r: &GateReport) -> HumanUnits {
    HumanUnits {
        t_not_us: r.t_not * 1e6,
        nbar: r.nbar,
        rabi_rate_MHz: r.rabi_rate / TAU * 1e-6,
        coupling_Hz: r.coupling / TAU,
        entanglement_bits: r.entanglement_e,
        p_spon: r.p_spon,
        laser_frequency_THz: r.omega_l / TAU * 1e-12,
    }
}

/// Builds the report; `grid` enables the exact simulation when n̄ allows.
pub fn run(kind: ExperimentKind, file: &ExperimentFile, grid: Option<&BlochGrid>) -> Result<ExperimentReport> {
    let mut si = match kind {
        ExperimentKind::Quadrupole => quadrupole_report(&file.quadrupole()?)?,
        ExperimentKind::Dipole => dipole_report(&file.dipole()?)?,
        ExperimentKind::Raman => raman_report(&file.raman()?)?,
    };
    if let Some(grid) = grid {
        attach_simulation(&mut si, grid)?;
    }
    Ok(ExperimentReport {
        kind,
        description: file.description.clone(),
        human: human(&si),
        si,
    })
}
