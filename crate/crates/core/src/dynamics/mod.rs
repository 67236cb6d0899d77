//! Exact time evolution of an atom coupled to one or two coherent field modes.
//!
//! Both Hamiltonians conserve an excitation number, so the joint Hilbert space
//! splits into independent two-dimensional blocks and each block is rotated in
//! closed form. All evolution is in scaled time t̃ (the integral of the pulse
//! envelope); see [`envelope`] for the bookkeeping between physical and
//! scaled time.

pub mod envelope;
mod jc;
mod raman;

use num_complex::Complex64 as C64;

pub use envelope::{effective_alpha, envelope_times, EnvelopeTimes, PulseEnvelope};
pub use jc::{init_jc_state, jc_evolve, JCJointState, JCParams};
pub use raman::{init_raman_state, raman_evolve, RamanJointState};

use crate::error::{QceError, Result};

/// Edge mass above which evolution refuses to proceed.
pub const LEAKAGE_LIMIT: f64 = 1e-6;
/// Edge mass above which evolution logs a warning.
pub const LEAKAGE_WARN: f64 = 1e-10;

/// Joint atom–field amplitudes split by atomic level.
///
/// Both slices index the same field configurations in the same order, so
/// `ground()[k]` and `excited()[k]` belong to one field basis state.
pub trait AtomFieldState {
    fn ground(&self) -> &[C64];
    fn excited(&self) -> &[C64];

    /// Mass of amplitudes that are frozen only because their coupling partner
    /// lies outside the stored window.
    fn edge_mass(&self) -> f64;

    fn norm_sqr(&self) -> f64 {
        self.ground()
            .iter()
            .chain(self.excited())
            .map(|c| c.norm_sqr())
            .sum()
    }
}

pub(crate) fn check_leakage(mass: f64) -> Result<()> {
    if mass > LEAKAGE_LIMIT {
        return Err(QceError::WindowLeakage { mass, limit: LEAKAGE_LIMIT });
    }
    if mass > LEAKAGE_WARN {
        log::warn!("truncation window edge carries {mass:.3e} of amplitude mass");
    }
    Ok(())
}

pub(crate) fn normalize(v: &mut [C64]) {
    let n: f64 = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if n > 0.0 {
        let inv = 1.0 / n;
        v.iter_mut().for_each(|c| *c *= inv);
    }
}

pub(crate) fn check_norm(c0: &[C64], c1: &[C64]) -> Result<()> {
    let n: f64 = c0.iter().chain(c1).map(|c| c.norm_sqr()).sum();
    if (n - 1.0).abs() > 1e-9 {
        return Err(QceError::param("amplitudes", format!("state norm² is {n}, expected 1")));
    }
    Ok(())
}
