//! Entanglement-vs-time figures as CSV series.

use std::f64::consts::{FRAC_PI_2, PI};

use anyhow::{bail, Result};
use serde::Serialize;

use qce_core::entanglement::analytic_average_rederived;
use qce_core::{analytic_average, bloch_grid, BlochState, CoherentSpec, Model, QceError, Simulator};

use crate::output::fmt_num;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
}

impl Figure {
    pub fn stem(&self) -> &'static str {
        match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FigureOptions {
    pub n_theta: usize,
    pub n_phi: usize,
    pub tail_eps: f64,
    pub tau_max: f64,
    pub points: usize,
}

impl Default for FigureOptions {
    fn default() -> Self {
        Self {
            n_theta: qce_core::quadrature::DEFAULT_N_THETA,
            n_phi: qce_core::quadrature::DEFAULT_N_PHI,
            tail_eps: qce_core::DEFAULT_TAIL_EPS,
            tau_max: PI,
            points: 101,
        }
    }
}

/// One CSV row: series, nbar, tau, entropy_bits.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub series: String,
    pub nbar: f64,
    pub tau: f64,
    pub entropy: f64,
}

impl Point {
    pub fn record(&self) -> Vec<String> {
        vec![self.series.clone(), fmt_num(self.nbar), fmt_num(self.tau), fmt_num(self.entropy)]
    }
}

pub const FIGURE_HEADER: [&str; 4] = ["series", "nbar", "tau", "entropy_bits"];

#[derive(Debug, Clone, Default)]
pub struct FigureData {
    pub points: Vec<Point>,
    pub max_edge_mass: f64,
    pub warnings: Vec<String>,
}

impl FigureData {
    pub fn series_names(&self) -> Vec<String> {
        let mut names: Vec<String> = Vec::new();
        for p in &self.points {
            if !names.contains(&p.series) {
                names.push(p.series.clone());
            }
        }
        names
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

fn logspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    linspace(a.ln(), b.ln(), n).into_iter().map(f64::exp).collect()
}

pub fn build(figure: Figure, opts: &FigureOptions) -> Result<FigureData> {
    if opts.points < 2 {
        bail!("--points must be at least 2");
    }
    if !(opts.tau_max.is_finite() && opts.tau_max > 0.0) {
        bail!("--tau-max must be positive");
    }
    match figure {
        Figure::Fig1 => fig1(opts),
        Figure::Fig2 => scaling_figure(Model::JaynesCummings, &[8.0, 128.0, 4096.0], opts),
        Figure::Fig3 => scaling_figure(Model::Raman, &[8.0, 256.0], opts),
    }
}

/// Single-state and averaged curves for JC at n̄ = 10.
fn fig1(opts: &FigureOptions) -> Result<FigureData> {
    let field = CoherentSpec::real(10f64.sqrt())?;
    let sim = Simulator::with_tail_eps(Model::JaynesCummings, field, opts.tail_eps)?;
    let grid = bloch_grid(opts.n_theta, opts.n_phi)?;
    let states = [
        ("ground", BlochState::ground()),
        ("excited", BlochState::excited()),
        ("plus", BlochState::equator(0.0)),
        ("minus", BlochState::equator(PI)),
        ("plus_i", BlochState::equator(FRAC_PI_2)),
    ];
    let mut data = FigureData::default();
    let mut per_series: Vec<Vec<Point>> = vec![Vec::new(); states.len() + 1];
    for tau in linspace(0.0, opts.tau_max, opts.points) {
        let basis = sim.evolve_basis(tau)?;
        data.max_edge_mass = data.max_edge_mass.max(basis.edge_mass());
        for (k, (name, atom)) in states.iter().enumerate() {
            per_series[k].push(Point {
                series: (*name).to_string(),
                nbar: field.nbar(),
                tau,
                entropy: basis.entropy(atom)?,
            });
        }
        per_series[states.len()].push(Point {
            series: "average".to_string(),
            nbar: field.nbar(),
            tau,
            entropy: basis.average(&grid)?,
        });
    }
    data.points = per_series.into_iter().flatten().collect();
    Ok(data)
}

/// Exact ⟨E⟩ at τ = π/2ⁿ against both closed forms on a log grid.
fn scaling_figure(model: Model, nbars: &[f64], opts: &FigureOptions) -> Result<FigureData> {
    let grid = bloch_grid(opts.n_theta, opts.n_phi)?;
    let numeric_taus: Vec<f64> = (1..=16).map(|n| PI / 2f64.powi(n)).rev().collect();
    let analytic_taus = logspace(numeric_taus[0], FRAC_PI_2, opts.points);
    let mut data = FigureData::default();
    for &nbar in nbars {
        let sim = Simulator::with_tail_eps(model, CoherentSpec::from_nbar(nbar)?, opts.tail_eps)?;
        for &tau in &numeric_taus {
            let basis = sim.evolve_basis(tau)?;
            data.max_edge_mass = data.max_edge_mass.max(basis.edge_mass());
            data.points.push(Point {
                series: "numeric".to_string(),
                nbar,
                tau,
                entropy: basis.average(&grid)?,
            });
        }
        type ClosedForm = fn(Model, f64, f64) -> qce_core::Result<f64>;
        let forms: [(&str, ClosedForm); 2] =
            [("analytic", analytic_average), ("analytic_rederived", analytic_average_rederived)];
        for (name, f) in forms {
            let mut skipped = 0;
            for &tau in &analytic_taus {
                match f(model, tau, nbar) {
                    Ok(entropy) => data.points.push(Point {
                        series: name.to_string(),
                        nbar,
                        tau,
                        entropy,
                    }),
                    Err(QceError::OutOfRegime(_)) => skipped += 1,
                    Err(e) => return Err(e.into()),
                }
            }
            if skipped > 0 {
                data.warnings
                    .push(format!("{name} nbar={nbar}: {skipped} points with tau^2/nbar >= 1 omitted"));
            }
        }
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing() {
        let l = linspace(0.0, 1.0, 5);
        assert_eq!(l, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let g = logspace(1e-3, 1.0, 4);
        assert!((g[1] - 1e-2).abs() < 1e-15 && (g[3] - 1.0).abs() < 1e-15);
    }
}
