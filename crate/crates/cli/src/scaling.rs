//! NOT-gate entanglement against n̄: full closed form vs the leading law.

use anyhow::{bail, Result};

use qce_core::entanglement::ScalingLaw;
use qce_core::{not_gate_scaling, Model};

use crate::output::fmt_num;

pub const SCALING_HEADER: [&str; 5] = ["series", "nbar", "e_full", "e_leading", "ratio"];

pub fn model_for_order(m: u32) -> Result<Model> {
    match m {
        1 => Ok(Model::JaynesCummings),
        2 => Ok(Model::Raman),
        _ => bail!("--m must be 1 (single photon) or 2 (Raman), got {m}"),
    }
}

pub fn scan(m: u32, nbar_min: f64, nbar_max: f64, points: usize) -> Result<Vec<ScalingLaw>> {
    let model = model_for_order(m)?;
    if !(nbar_min.is_finite() && nbar_min >= 100.0) {
        bail!("--nbar-min must be >= 100, got {nbar_min}");
    }
    if !(nbar_max.is_finite() && nbar_max >= nbar_min) {
        bail!("--nbar-max must be >= --nbar-min");
    }
    if points < 2 {
        bail!("--points must be at least 2");
    }
    let (a, b) = (nbar_min.ln(), nbar_max.ln());
    (0..points)
        .map(|i| {
            let nbar = (a + (b - a) * i as f64 / (points - 1) as f64).exp();
            Ok(not_gate_scaling(model, nbar)?)
        })
        .collect()
}

pub fn record(m: u32, s: &ScalingLaw) -> Vec<String> {
    vec![format!("m{m}"), fmt_num(s.nbar), fmt_num(s.full), fmt_num(s.leading), fmt_num(s.ratio)]
}
