//! Coherent-state Fock amplitudes and truncation windows.
//!
//! Photon numbers in realistic gate experiments reach 10⁹, far past the range
//! where factorials or powers of α can be formed directly, so everything here
//! works with log-magnitudes. Single amplitudes use the saddle-point form of
//! the Poisson mass function (Stirling remainder plus the deviance term
//! `bd0`); whole windows are filled by the ratio recurrence
//! `a_{n+1}/a_n = α/√(n+1)` anchored at the mode, which keeps neighbouring
//! amplitudes consistent to a few ulps even when the absolute log-mass is of
//! order 10¹⁰.

use std::f64::consts::TAU;

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{QceError, Result};

/// Default Poisson mass allowed outside a truncation window.
pub const DEFAULT_TAIL_EPS: f64 = 1e-12;

/// Single-mode coherent state |α⟩, α = |α|·e^{i·phase}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoherentSpec {
    alpha_mag: f64,
    alpha_phase: f64,
    nbar: f64,
}

impl CoherentSpec {
    pub fn new(alpha_mag: f64, alpha_phase: f64) -> Result<Self> {
        if !(alpha_mag.is_finite() && alpha_mag >= 0.0) {
            return Err(QceError::param("alpha_mag", format!("must be finite and >= 0, got {alpha_mag}")));
        }
        if !alpha_phase.is_finite() {
            return Err(QceError::param("alpha_phase", "must be finite"));
        }
        Ok(Self {
            alpha_mag,
            alpha_phase: wrap_angle(alpha_phase),
            nbar: alpha_mag * alpha_mag,
        })
    }

    /// Real, non-negative amplitude.
    pub fn real(alpha: f64) -> Result<Self> {
        Self::new(alpha, 0.0)
    }

    /// Real amplitude with the given mean photon number.
    pub fn from_nbar(nbar: f64) -> Result<Self> {
        if !(nbar.is_finite() && nbar >= 0.0) {
            return Err(QceError::param("nbar", format!("must be finite and >= 0, got {nbar}")));
        }
        Self::new(nbar.sqrt(), 0.0)
    }

    pub fn alpha_mag(&self) -> f64 {
        self.alpha_mag
    }

    pub fn alpha_phase(&self) -> f64 {
        self.alpha_phase
    }

    pub fn nbar(&self) -> f64 {
        self.nbar
    }

    pub fn alpha(&self) -> C64 {
        C64::from_polar(self.alpha_mag, self.alpha_phase)
    }

    /// Same magnitude, phase shifted by `delta`.
    pub fn rotated(&self, delta: f64) -> Self {
        Self {
            alpha_phase: wrap_angle(self.alpha_phase + delta),
            ..*self
        }
    }
}

pub(crate) fn wrap_angle(x: f64) -> f64 {
    let w = x.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Closed range of photon numbers `[n_min, n_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FockWindow {
    n_min: u64,
    n_max: u64,
}

impl FockWindow {
    pub fn new(n_min: u64, n_max: u64) -> Result<Self> {
        if n_max < n_min {
            return Err(QceError::param("n_max", format!("{n_max} < n_min = {n_min}")));
        }
        Ok(Self { n_min, n_max })
    }

    pub fn n_min(&self) -> u64 {
        self.n_min
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn len(&self) -> usize {
        (self.n_max - self.n_min + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, n: u64) -> bool {
        (self.n_min..=self.n_max).contains(&n)
    }

    pub fn photon_numbers(&self) -> impl Iterator<Item = u64> {
        self.n_min..=self.n_max
    }

    pub(crate) fn extend_up(self, by: u64) -> Self {
        Self {
            n_max: self.n_max + by,
            ..self
        }
    }

    pub(crate) fn extend_down(self, by: u64) -> Self {
        Self {
            n_min: self.n_min.saturating_sub(by),
            ..self
        }
    }
}

/// Stirling-series remainder ln n! − [(n+½)ln n − n + ½ln 2π].
fn stirlerr(n: u64) -> f64 {
    #[allow(clippy::excessive_precision)]
    const TABLE: [f64; 16] = [
        0.0, // unused: n = 0 is handled by the caller
        0.081_061_466_795_327_258_22,
        0.041_340_695_955_409_294_09,
        0.027_677_925_684_998_339_15,
        0.020_790_672_103_765_093_11,
        0.016_644_691_189_821_192_16,
        0.013_876_128_823_070_748_00,
        0.011_896_709_945_891_770_10,
        0.010_411_265_261_972_096_50,
        0.009_255_462_182_712_732_918,
        0.008_330_563_433_362_871_257,
        0.007_573_675_487_951_840_795,
        0.006_942_840_107_209_529_866,
        0.006_408_994_188_004_207_068,
        0.005_951_370_112_758_847_736,
        0.005_554_733_551_962_801_371,
    ];
    const S0: f64 = 1.0 / 12.0;
    const S1: f64 = 1.0 / 360.0;
    const S2: f64 = 1.0 / 1260.0;
    const S3: f64 = 1.0 / 1680.0;
    const S4: f64 = 1.0 / 1188.0;

    if n < 16 {
        return TABLE[n as usize];
    }
    let x = n as f64;
    let xx = x * x;
    (S0 - (S1 - (S2 - (S3 - S4 / xx) / xx) / xx) / xx) / x
}

/// Deviance term x·ln(x/m) + m − x, evaluated without cancellation near x ≈ m.
fn bd0(x: f64, m: f64) -> f64 {
    if (x - m).abs() < 0.1 * (x + m) {
        let v = (x - m) / (x + m);
        let mut s = (x - m) * v;
        let mut ej = 2.0 * x * v;
        let v2 = v * v;
        for j in 1..1000 {
            ej *= v2;
            let s1 = s + ej / (2 * j + 1) as f64;
            if s1 == s {
                return s1;
            }
            s = s1;
        }
        s
    } else {
        x * (x / m).ln() + m - x
    }
}

/// ln P(n; n̄) for the Poisson distribution, accurate to a few ulps of the
/// result even for n̄ ~ 10⁹.
pub fn ln_poisson_pmf(n: u64, nbar: f64) -> f64 {
    if nbar == 0.0 {
        return if n == 0 { 0.0 } else { f64::NEG_INFINITY };
    }
    if n == 0 {
        return -nbar;
    }
    let x = n as f64;
    -stirlerr(n) - bd0(x, nbar) - 0.5 * (TAU * x).ln()
}

/// Fock amplitude ⟨n|α⟩ = e^{−|α|²/2} αⁿ/√(n!). Underflows to exact zero.
pub fn coherent_amplitude(spec: &CoherentSpec, n: u64) -> C64 {
    let mag = (0.5 * ln_poisson_pmf(n, spec.nbar)).exp();
    if mag == 0.0 {
        return C64::new(0.0, 0.0);
    }
    let phase = (n as f64 * spec.alpha_phase).rem_euclid(TAU);
    C64::from_polar(mag, phase)
}

/// Unnormalized coherent amplitudes over every photon number in `window`.
pub fn coherent_amplitudes(spec: &CoherentSpec, window: &FockWindow) -> Vec<C64> {
    let len = window.len();
    let nbar = spec.nbar;
    if nbar == 0.0 {
        return window
            .photon_numbers()
            .map(|n| C64::new(if n == 0 { 1.0 } else { 0.0 }, 0.0))
            .collect();
    }

    let anchor = (nbar.floor() as u64).clamp(window.n_min, window.n_max);
    let a_idx = (anchor - window.n_min) as usize;
    let mut log_mag = vec![0.0_f64; len];
    log_mag[a_idx] = 0.5 * ln_poisson_pmf(anchor, nbar);
    // ln a_{n+1} − ln a_n = −½ ln((n+1)/n̄)
    for i in a_idx + 1..len {
        let n1 = (window.n_min + i as u64) as f64;
        log_mag[i] = log_mag[i - 1] - 0.5 * ((n1 - nbar) / nbar).ln_1p();
    }
    for i in (0..a_idx).rev() {
        let n1 = (window.n_min + i as u64 + 1) as f64;
        log_mag[i] = log_mag[i + 1] + 0.5 * ((n1 - nbar) / nbar).ln_1p();
    }

    let phase_step = spec.alpha_phase;
    let base = (window.n_min as f64 * phase_step).rem_euclid(TAU);
    log_mag
        .iter()
        .enumerate()
        .map(|(i, &lm)| {
            let mag = lm.exp();
            if mag == 0.0 {
                C64::new(0.0, 0.0)
            } else {
                C64::from_polar(mag, base + i as f64 * phase_step)
            }
        })
        .collect()
}

/// Smallest window around n̄ that leaves Poisson mass below `tail_eps`
/// outside it (half in each tail).
pub fn fock_window(spec: &CoherentSpec, tail_eps: f64) -> Result<FockWindow> {
    if !(tail_eps > 0.0 && tail_eps < 1.0) {
        return Err(QceError::param("tail_eps", format!("must lie in (0, 1), got {tail_eps}")));
    }
    let nbar = spec.nbar;
    if nbar == 0.0 {
        return FockWindow::new(0, 0);
    }
    let half = 0.5 * tail_eps;
    let negligible = tail_eps * 1e-6;
    let mode = nbar.floor() as u64;
    let ln_nbar = nbar.ln();
    let lp_mode = ln_poisson_pmf(mode, nbar);

    // Upper tail: p_{mode+1}, p_{mode+2}, ... until the geometric bound on
    // everything beyond is negligible.
    let mut upper = Vec::new();
    let mut lp = lp_mode;
    let mut k = mode;
    loop {
        k += 1;
        lp += ln_nbar - (k as f64).ln();
        let p = lp.exp();
        upper.push(p);
        let kf = k as f64;
        if kf > nbar && p / (1.0 - nbar / (kf + 1.0)) < negligible {
            break;
        }
    }
    // Running suffix sums equal the mass strictly above mode + j.
    let mut n_max = mode + upper.len() as u64;
    let mut acc = 0.0;
    for (j, p) in upper.iter().enumerate().rev() {
        acc += p;
        if acc >= half {
            break;
        }
        n_max = mode + j as u64;
    }

    // Lower tail: p_{mode-1}, p_{mode-2}, ...
    let mut lower = Vec::new();
    let mut lp = lp_mode;
    let mut k = mode;
    while k > 0 {
        lp -= ln_nbar - (k as f64).ln();
        k -= 1;
        let p = lp.exp();
        lower.push(p);
        let kf = k as f64;
        if kf < nbar && p / (1.0 - kf / nbar) < negligible {
            break;
        }
    }
    // Suffix sums of `lower` equal the mass strictly below mode - j.
    let mut n_min = mode - lower.len() as u64;
    let mut acc = 0.0;
    for (j, p) in lower.iter().enumerate().rev() {
        acc += p;
        if acc >= half {
            break;
        }
        n_min = mode - j as u64;
    }

    FockWindow::new(n_min, n_max)
}

/// Poisson mass inside `window` for mean `nbar`, summed smallest-first.
pub fn window_mass(nbar: f64, window: &FockWindow) -> f64 {
    let spec = match CoherentSpec::from_nbar(nbar) {
        Ok(s) => s,
        Err(_) => return f64::NAN,
    };
    let amps = coherent_amplitudes(&spec, window);
    let mut probs: Vec<f64> = amps.iter().map(|a| a.norm_sqr()).collect();
    probs.sort_by(|a, b| a.total_cmp(b));
    probs.iter().sum()
}
