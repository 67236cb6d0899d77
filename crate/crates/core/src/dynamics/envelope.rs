//! Pulse envelopes φ(t) and the derived times T = ∫φ, 𝒯 = ∫φ², t̃(t) = ∫_{−∞}^t φ.

use std::f64::consts::PI;

use serde::Serialize;
use statrs::function::erf::erf;

use crate::coherent::CoherentSpec;
use crate::error::{QceError, Result};

/// Dimensionless envelope with peak value 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum PulseEnvelope {
    /// φ = 1 on [start, stop], 0 elsewhere.
    Rectangular { start: f64, stop: f64 },
    /// φ = exp(−(t − center)²/half_width²).
    Gaussian { center: f64, half_width: f64 },
}

impl PulseEnvelope {
    pub fn rectangular(start: f64, stop: f64) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && stop > start) {
            return Err(QceError::param("stop", format!("need finite start < stop, got [{start}, {stop}]")));
        }
        Ok(Self::Rectangular { start, stop })
    }

    pub fn gaussian(center: f64, half_width: f64) -> Result<Self> {
        if !(center.is_finite() && half_width.is_finite() && half_width > 0.0) {
            return Err(QceError::param("half_width", format!("must be positive, got {half_width}")));
        }
        Ok(Self::Gaussian { center, half_width })
    }

    pub fn value(&self, t: f64) -> f64 {
        match *self {
            Self::Rectangular { start, stop } => {
                if (start..=stop).contains(&t) {
                    1.0
                } else {
                    0.0
                }
            }
            Self::Gaussian { center, half_width } => {
                let u = (t - center) / half_width;
                (-u * u).exp()
            }
        }
    }
}

/// Interaction time T, mode-normalization time 𝒯, and the map t ↦ t̃.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnvelopeTimes {
    pub total: f64,
    pub energy_duration: f64,
    envelope: PulseEnvelope,
}

impl EnvelopeTimes {
    /// t̃(t) = ∫_{−∞}^t φ(s) ds. `scaled_time(f64::INFINITY) == total`.
    pub fn scaled_time(&self, t: f64) -> f64 {
        match self.envelope {
            PulseEnvelope::Rectangular { start, stop } => (t.min(stop) - start).max(0.0),
            PulseEnvelope::Gaussian { center, half_width } => {
                if t == f64::INFINITY {
                    return self.total;
                }
                0.5 * self.total * (1.0 + erf((t - center) / half_width))
            }
        }
    }

    pub fn envelope(&self) -> &PulseEnvelope {
        &self.envelope
    }
}

pub fn envelope_times(env: &PulseEnvelope) -> EnvelopeTimes {
    let (total, energy_duration) = match *env {
        PulseEnvelope::Rectangular { start, stop } => (stop - start, stop - start),
        PulseEnvelope::Gaussian { half_width, .. } => {
            (PI.sqrt() * half_width, (0.5 * PI).sqrt() * half_width)
        }
    };
    EnvelopeTimes {
        total,
        energy_duration,
        envelope: *env,
    }
}

/// Amplitude of the single effective mode φ/√𝒯 for a narrow-band beam of
/// photon flux `flux`: α = √F · T / √𝒯, which is √(FT) for a rectangular pulse.
pub fn effective_alpha(flux: f64, env: &PulseEnvelope) -> Result<CoherentSpec> {
    if !(flux.is_finite() && flux >= 0.0) {
        return Err(QceError::param("flux", format!("must be >= 0, got {flux}")));
    }
    let times = envelope_times(env);
    CoherentSpec::real(flux.sqrt() * times.total / times.energy_duration.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangular_times() {
        let env = PulseEnvelope::rectangular(0.0, 5e-6).unwrap();
        let t = envelope_times(&env);
        assert_eq!(t.total, 5e-6);
        assert_eq!(t.energy_duration, 5e-6);
        assert!((t.scaled_time(2.5e-6) - 2.5e-6).abs() < 1e-21);
        assert_eq!(t.scaled_time(-1.0), 0.0);
        assert_eq!(t.scaled_time(f64::INFINITY), t.total);
    }

    #[test]
    fn gaussian_ratio_and_limits() {
        let env = PulseEnvelope::gaussian(1e-6, 2e-7).unwrap();
        let t = envelope_times(&env);
        assert!((t.total / t.energy_duration - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(t.scaled_time(f64::INFINITY), t.total);
        assert!((t.scaled_time(1e-6) - 0.5 * t.total).abs() < 1e-20);
        assert!((t.scaled_time(1e-6 + 3e-6) - t.total).abs() < 1e-18);
        assert!(t.scaled_time(-5e-6).abs() < 1e-25);
    }

    #[test]
    fn gaussian_times_match_quadrature() {
        let (c, w) = (0.3, 0.05);
        let env = PulseEnvelope::gaussian(c, w).unwrap();
        let t = envelope_times(&env);
        let n = 200_000;
        let (a, b) = (c - 12.0 * w, c + 12.0 * w);
        let h = (b - a) / n as f64;
        let (mut s1, mut s2) = (0.0, 0.0);
        for k in 0..n {
            let x = a + (k as f64 + 0.5) * h;
            let v = env.value(x);
            s1 += v * h;
            s2 += v * v * h;
        }
        assert!((s1 - t.total).abs() < 1e-12);
        assert!((s2 - t.energy_duration).abs() < 1e-12);
    }

    #[test]
    fn effective_alpha_examples() {
        let rect = PulseEnvelope::rectangular(0.0, 5e-6).unwrap();
        let a = effective_alpha(1e9, &rect).unwrap();
        assert!((a.alpha_mag() - 5000f64.sqrt()).abs() < 1e-10);
        assert_eq!(effective_alpha(0.0, &rect).unwrap().alpha_mag(), 0.0);

        // Gaussian with the same T: α grows by 𝒯^{-1/2}·T^{1/2} = 2^{1/4}
        let w = 5e-6 / PI.sqrt();
        let gauss = PulseEnvelope::gaussian(0.0, w).unwrap();
        let g = effective_alpha(1e9, &gauss).unwrap();
        assert!((g.alpha_mag() / a.alpha_mag() - 2f64.powf(0.25)).abs() < 1e-12);
        assert!(effective_alpha(-1.0, &rect).is_err());
    }

    #[test]
    fn envelope_peak_is_one() {
        let g = PulseEnvelope::gaussian(2.0, 0.5).unwrap();
        assert_eq!(g.value(2.0), 1.0);
        assert!(g.value(2.3) < 1.0);
        assert!(PulseEnvelope::rectangular(1.0, 1.0).is_err());
        assert!(PulseEnvelope::gaussian(0.0, 0.0).is_err());
    }
}
