use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::dynamics::AtomFieldState;
use crate::entropy::entropy_from_minor;
use crate::error::{QceError, Result};

const TRACE_TOL: f64 = 1e-9;

/// Reduced 2×2 density matrix of the atom.
///
/// Besides the matrix elements it carries `det = ρ₀₀ρ₁₁ − |ρ₀₁|²`. For
/// nearly pure states the determinant is many orders of magnitude below the
/// elements, so when the matrix comes from a joint state it is computed from
/// the amplitudes directly instead of from the rounded elements.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QubitDensity {
    rho00: f64,
    rho11: f64,
    rho01: C64,
    det: f64,
}

impl QubitDensity {
    pub fn new(rho00: f64, rho11: f64, rho01: C64) -> Result<Self> {
        let det = rho00 * rho11 - rho01.norm_sqr();
        Self::checked(rho00, rho11, rho01, det)
    }

    fn checked(rho00: f64, rho11: f64, rho01: C64, det: f64) -> Result<Self> {
        let trace = rho00 + rho11;
        if (trace - 1.0).abs() > TRACE_TOL || trace.is_nan() {
            return Err(QceError::param("rho", format!("trace is {trace}, expected 1")));
        }
        if rho00 < -TRACE_TOL || rho11 < -TRACE_TOL || det < -TRACE_TOL {
            return Err(QceError::param("rho", "matrix is not positive semidefinite"));
        }
        Ok(Self { rho00, rho11, rho01, det })
    }

    pub fn rho00(&self) -> f64 {
        self.rho00
    }

    pub fn rho11(&self) -> f64 {
        self.rho11
    }

    pub fn rho01(&self) -> C64 {
        self.rho01
    }

    pub fn rho10(&self) -> C64 {
        self.rho01.conj()
    }

    pub fn det(&self) -> f64 {
        self.det
    }

    /// Eigenvalues (λ₊, λ₋), with λ₋ = det/λ₊ so it keeps full relative
    /// precision when tiny.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let half_trace = 0.5 * (self.rho00 + self.rho11);
        let half_diff = 0.5 * (self.rho00 - self.rho11);
        let radius = (half_diff * half_diff + self.rho01.norm_sqr()).sqrt();
        let plus = half_trace + radius;
        let minus = if plus > 0.0 { self.det.max(0.0) / plus } else { 0.0 };
        (plus, minus)
    }
}

/// Traces out the field(s).
pub fn reduce_to_qubit<S: AtomFieldState + ?Sized>(state: &S) -> QubitDensity {
    reduce_amplitudes(state.ground(), state.excited())
}

pub(crate) fn reduce_amplitudes(c0: &[C64], c1: &[C64]) -> QubitDensity {
    let rho00: f64 = c0.iter().map(|c| c.norm_sqr()).sum();
    let rho11: f64 = c1.iter().map(|c| c.norm_sqr()).sum();
    let rho01: C64 = c0.iter().zip(c1).map(|(a, b)| a * b.conj()).sum();
    let det = gram_determinant(c0, c1, rho00, rho11);
    QubitDensity { rho00, rho11, rho01, det }
}

/// ‖u‖²‖v‖² − |⟨u,v⟩|² as ‖u‖²·‖v − proj_u v‖², with one re-orthogonalization.
fn gram_determinant(c0: &[C64], c1: &[C64], n0: f64, n1: f64) -> f64 {
    let (u, v, nu) = if n0 >= n1 { (c0, c1, n0) } else { (c1, c0, n1) };
    if nu == 0.0 {
        return 0.0;
    }
    let inner = |x: &[C64], y: &[C64]| -> C64 { x.iter().zip(y).map(|(a, b)| a.conj() * b).sum() };
    let mu = inner(u, v) / nu;
    let mu2: C64 = u.iter().zip(v).map(|(a, b)| a.conj() * (b - mu * a)).sum::<C64>() / nu;
    let coef = mu + mu2;
    let residual: f64 = u.iter().zip(v).map(|(a, b)| (b - coef * a).norm_sqr()).sum();
    nu * residual
}

/// Von Neumann entropy of the reduced state, in bits.
pub fn entropy_of(rho: &QubitDensity) -> Result<f64> {
    let (plus, minus) = rho.eigenvalues();
    let tol = crate::entropy::PROBABILITY_CLAMP;
    if !(plus <= 1.0 + tol && minus >= -tol) || plus.is_nan() {
        return Err(QceError::InvalidProbability(plus));
    }
    Ok(entropy_from_minor(minus))
}
