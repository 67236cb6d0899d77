//! Gate budgets for realistic single-ion and neutral-atom experiments.
//!
//! Everything here is SI: m², W, m, C·m, C·m², s, rad/s. Entanglement is
//! taken from the closed forms at τ = π/2; [`attach_simulation`] adds an
//! exact Bloch-averaged value when the photon number is small enough to
//! simulate.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::Serialize;

use crate::coherent::CoherentSpec;
use crate::constants::CODATA_2018;
use crate::entanglement::{analytic_average, Model, Simulator};
use crate::error::{QceError, Result};
use crate::quadrature::BlochGrid;

/// Laser bandwidth assumed when none is given: 2π·10 kHz.
pub const DEFAULT_BANDWIDTH: f64 = TAU * 1e4;

/// Cs dipole moment that reproduces T = 0.46 ns at A = 100 µm², P = 100 µW,
/// λ = 850 nm. Fitted, not measured (≈ 3.09 e·a₀).
pub const CS_FITTED_DIPOLE: f64 = 2.6238e-29;

/// Excited-state linewidth used for Raman budgets when none is given.
pub const DEFAULT_RAMAN_GAMMA: f64 = TAU * 6.4e6;

/// Largest n̄ for which the JC simulator is run on request.
pub const MAX_SIMULATED_NBAR_JC: f64 = 16384.0;
/// Largest n̄ per beam for which the Raman simulator is run on request.
pub const MAX_SIMULATED_NBAR_RAMAN: f64 = 512.0;

/// Below this many λ² the one-dimensional beam model is unreliable.
const MIN_AREA_IN_WAVELENGTHS_SQ: f64 = 10.0;
/// Below this δ/Γ the adiabatic elimination of the excited state is doubtful.
const MIN_DETUNING_OVER_GAMMA: f64 = 100.0;
/// Validity ratios above this are flagged.
const VALIDITY_WARN: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadrupoleConfig {
    pub area: f64,
    pub power: f64,
    pub wavelength: f64,
    pub quadrupole: f64,
    pub lifetime: f64,
    pub bandwidth: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DipoleConfig {
    pub area: f64,
    pub power: f64,
    pub wavelength: f64,
    pub dipole: f64,
    pub lifetime: f64,
    pub bandwidth: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RamanConfig {
    pub area: f64,
    /// Power per beam.
    pub power: f64,
    pub wavelength: f64,
    pub dipole: f64,
    /// Single-photon detuning δ.
    pub detuning: f64,
    /// Decay rate Γ of the intermediate excited state.
    pub gamma: f64,
    pub bandwidth: f64,
}

fn positive(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(QceError::param(name, format!("must be positive, got {v}")))
    }
}

fn non_negative(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(QceError::param(name, format!("must be >= 0, got {v}")))
    }
}

impl QuadrupoleConfig {
    pub fn validate(&self) -> Result<()> {
        positive("area_A", self.area)?;
        positive("power_P", self.power)?;
        positive("wavelength", self.wavelength)?;
        positive("quadrupole_Q", self.quadrupole)?;
        positive("lifetime_tau0", self.lifetime)?;
        non_negative("bandwidth_B", self.bandwidth)
    }
}

impl DipoleConfig {
    pub fn validate(&self) -> Result<()> {
        positive("area_A", self.area)?;
        positive("power_P", self.power)?;
        positive("wavelength", self.wavelength)?;
        positive("dipole_d", self.dipole)?;
        positive("lifetime_tau0", self.lifetime)?;
        non_negative("bandwidth_B", self.bandwidth)
    }
}

impl RamanConfig {
    pub fn validate(&self) -> Result<()> {
        positive("area_A", self.area)?;
        positive("power_P", self.power)?;
        positive("wavelength", self.wavelength)?;
        positive("dipole_d", self.dipole)?;
        positive("detuning_delta", self.detuning)?;
        positive("gamma_excited", self.gamma)?;
        non_negative("bandwidth_B", self.bandwidth)
    }
}

/// Decoherence budget of one NOT gate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GateReport {
    pub model: Model,
    /// Effective dipole moment, C·m.
    pub d_eff: f64,
    /// Laser angular frequency, rad/s.
    pub omega_l: f64,
    /// NOT-gate duration, s.
    pub t_not: f64,
    /// Mean photon number in the pulse mode (per beam for Raman).
    pub nbar: f64,
    /// Single-photon coupling g (JC) or two-photon Ω (Raman), rad/s.
    pub coupling: f64,
    /// g|α| (JC) or Ω|α|² (Raman), rad/s.
    pub rabi_rate: f64,
    /// Bloch-averaged entanglement after the gate from the closed form, bits.
    pub entanglement_e: f64,
    pub p_spon: f64,
    /// (BT/2π, B/(g√(n̄+1))) for JC; the second entry is B/(Ω(n̄+1)) for Raman.
    pub validity_ratios: (f64, f64),
    /// Exact Bloch-averaged entanglement, when it was simulated.
    pub simulated_entanglement: Option<f64>,
    pub warnings: Vec<String>,
}

/// Ratios that must both be ≪ 1 for the single-mode description to hold.
pub fn single_mode_validity(bandwidth: f64, t: f64, g: f64, nbar: f64) -> Result<(f64, f64)> {
    non_negative("bandwidth_B", bandwidth)?;
    positive("T", t)?;
    positive("g", g)?;
    non_negative("nbar", nbar)?;
    Ok((bandwidth * t / TAU, bandwidth / (g * (nbar + 1.0).sqrt())))
}

fn area_warning(area: f64, wavelength: f64, warnings: &mut Vec<String>) {
    let ratio = area / (wavelength * wavelength);
    if ratio < MIN_AREA_IN_WAVELENGTHS_SQ {
        warnings.push(format!(
            "focal area is only {ratio:.2} wavelength^2; the one-dimensional beam model is unreliable"
        ));
    }
}

fn validity_warning(ratios: (f64, f64), warnings: &mut Vec<String>) {
    if ratios.0 > VALIDITY_WARN || ratios.1 > VALIDITY_WARN {
        warnings.push(format!(
            "single-mode approximation questionable: BT/2pi = {:.3e}, bandwidth/coupling = {:.3e}",
            ratios.0, ratios.1
        ));
    }
}

fn jc_report(d: f64, area: f64, power: f64, wavelength: f64, lifetime: f64, bandwidth: f64) -> Result<GateReport> {
    let k = CODATA_2018;
    let omega_l = k.angular_frequency(wavelength);
    let field_scale = k.eps0 * k.c_light * area;
    let t_not = PI * k.hbar / d * (field_scale / (2.0 * power)).sqrt();
    let nbar = PI / (omega_l * d) * (field_scale * power / 2.0).sqrt();
    let rabi_rate = d / k.hbar * (power / (2.0 * field_scale)).sqrt();
    let coupling = rabi_rate / nbar.sqrt();
    let entanglement_e = analytic_average(Model::JaynesCummings, FRAC_PI_2, nbar)?;
    let validity_ratios = single_mode_validity(bandwidth, t_not, coupling, nbar)?;
    let mut warnings = Vec::new();
    area_warning(area, wavelength, &mut warnings);
    validity_warning(validity_ratios, &mut warnings);
    Ok(GateReport {
        model: Model::JaynesCummings,
        d_eff: d,
        omega_l,
        t_not,
        nbar,
        coupling,
        rabi_rate,
        entanglement_e,
        p_spon: (t_not / (2.0 * lifetime)).min(1.0),
        validity_ratios,
        simulated_entanglement: None,
        warnings,
    })
}

/// Single-photon quadrupole transition; d_eff = 2πQ/λ.
pub fn quadrupole_report(cfg: &QuadrupoleConfig) -> Result<GateReport> {
    cfg.validate()?;
    let d = TAU * cfg.quadrupole / cfg.wavelength;
    jc_report(d, cfg.area, cfg.power, cfg.wavelength, cfg.lifetime, cfg.bandwidth)
}

/// Single-photon dipole transition; d_eff is the dipole moment itself.
pub fn dipole_report(cfg: &DipoleConfig) -> Result<GateReport> {
    cfg.validate()?;
    jc_report(cfg.dipole, cfg.area, cfg.power, cfg.wavelength, cfg.lifetime, cfg.bandwidth)
}

/// Two-photon Raman transition through a far-detuned excited state, with
/// both beams of equal power and area.
pub fn raman_report(cfg: &RamanConfig) -> Result<GateReport> {
    cfg.validate()?;
    let k = CODATA_2018;
    let omega_l = k.angular_frequency(cfg.wavelength);
    let d2 = cfg.dipole * cfg.dipole;
    let field_scale = k.eps0 * k.c_light * cfg.area;
    let t_not = k.hbar * k.hbar * cfg.detuning * PI * field_scale / (d2 * cfg.power);
    let nbar = k.hbar * cfg.detuning * PI * field_scale / (d2 * omega_l);
    let rabi_rate = cfg.power * d2 / (2.0 * k.hbar * k.hbar * field_scale * cfg.detuning);
    let coupling = rabi_rate / nbar;
    let entanglement_e = analytic_average(Model::Raman, FRAC_PI_2, nbar)?;
    non_negative("bandwidth_B", cfg.bandwidth)?;
    let validity_ratios = (cfg.bandwidth * t_not / TAU, cfg.bandwidth / (coupling * (nbar + 1.0)));
    let mut warnings = Vec::new();
    area_warning(cfg.area, cfg.wavelength, &mut warnings);
    validity_warning(validity_ratios, &mut warnings);
    if cfg.detuning < MIN_DETUNING_OVER_GAMMA * cfg.gamma {
        warnings.push(format!(
            "detuning is only {:.1} linewidths; the effective two-photon Hamiltonian may not apply",
            cfg.detuning / cfg.gamma
        ));
    }
    Ok(GateReport {
        model: Model::Raman,
        d_eff: cfg.dipole,
        omega_l,
        t_not,
        nbar,
        coupling,
        rabi_rate,
        entanglement_e,
        p_spon: (0.25 * PI * cfg.gamma / cfg.detuning).min(1.0),
        validity_ratios,
        simulated_entanglement: None,
        warnings,
    })
}

/// Runs the exact simulator for the report's n̄ at τ = π/2 when n̄ is within
/// reach; otherwise records that the value is analytic only.
pub fn attach_simulation(report: &mut GateReport, grid: &BlochGrid) -> Result<()> {
    let limit = match report.model {
        Model::JaynesCummings => MAX_SIMULATED_NBAR_JC,
        Model::Raman => MAX_SIMULATED_NBAR_RAMAN,
    };
    if report.nbar > limit {
        report.warnings.push(format!(
            "nbar = {:.3e} exceeds the simulation limit {limit}; entanglement is analytic only",
            report.nbar
        ));
        return Ok(());
    }
    let sim = Simulator::new(report.model, CoherentSpec::from_nbar(report.nbar)?)?;
    report.simulated_entanglement = Some(sim.average(FRAC_PI_2, grid)?);
    Ok(())
}
