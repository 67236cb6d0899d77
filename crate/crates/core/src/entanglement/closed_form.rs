//! Short-time perturbative approximations and the NOT-gate scaling law.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::sync::OnceLock;

use serde::Serialize;

use super::simulate::Model;
use crate::error::{QceError, Result};

/// First-order eigenvalues of the reduced atomic state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PerturbativeEigenvalues {
    pub plus: f64,
    pub minus: f64,
    /// The radicand 1 − 4τ²f(θ)/n̄ went negative and was clamped to 0.
    pub clamped: bool,
}

/// f(θ) = sin⁴(θ/2) for JC, sin⁴(θ/2) + cos⁴(θ/2) for Raman.
fn angular_factor(model: Model, theta: f64) -> f64 {
    let s = (0.5 * theta).sin().powi(4);
    match model {
        Model::JaynesCummings => s,
        Model::Raman => s + (0.5 * theta).cos().powi(4),
    }
}

/// λ± ≈ ½ ± ½√(1 − 4τ²f(θ)/n̄).
pub fn perturbative_eigenvalues(model: Model, theta: f64, tau: f64, nbar: f64) -> Result<PerturbativeEigenvalues> {
    if !(theta.is_finite() && tau.is_finite() && tau >= 0.0) {
        return Err(QceError::param("tau", format!("need finite theta and tau >= 0, got ({theta}, {tau})")));
    }
    if !(nbar.is_finite() && nbar > 0.0) {
        return Err(QceError::param("nbar", format!("must be positive, got {nbar}")));
    }
    let z = 4.0 * tau * tau * angular_factor(model, theta) / nbar;
    let clamped = z > 1.0;
    if clamped {
        log::warn!("perturbative radicand negative (z = {z:.3}); clamped");
    }
    let z = z.min(1.0);
    // (1 − √(1−z))/2 without cancellation
    let minus = 0.5 * z / (1.0 + (1.0 - z).sqrt());
    Ok(PerturbativeEigenvalues {
        plus: 1.0 - minus,
        minus,
        clamped,
    })
}

fn check_regime(tau: f64, nbar: f64) -> Result<f64> {
    if !(tau.is_finite() && tau >= 0.0) {
        return Err(QceError::param("tau", format!("must be >= 0, got {tau}")));
    }
    if !(nbar.is_finite() && nbar > 0.0) {
        return Err(QceError::param("nbar", format!("must be positive, got {nbar}")));
    }
    let x = tau * tau / nbar;
    if x >= 1.0 {
        return Err(QceError::OutOfRegime(format!("tau^2/nbar = {x} is not small")));
    }
    Ok(x)
}

fn closed_form(x: f64, linear: f64, log_coef: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    linear * x - log_coef * x * x.log2()
}

/// Bloch-averaged entanglement in the short-time limit, with the constants
/// as commonly quoted: (1/3 + 2/(9 ln2))x − (1/3)x log₂x for JC and
/// (2/3 + X)x − (2/3)x log₂x for Raman, x = τ²/n̄.
pub fn analytic_average(model: Model, tau: f64, nbar: f64) -> Result<f64> {
    let x = check_regime(tau, nbar)?;
    Ok(match model {
        Model::JaynesCummings => closed_form(x, 1.0 / 3.0 + 2.0 / (9.0 * LN_2), 1.0 / 3.0),
        Model::Raman => closed_form(x, 2.0 / 3.0 + raman_x_constant(), 2.0 / 3.0),
    })
}

/// Same limit obtained by averaging −λ₋log₂λ₋ + λ₋/ln2 over the sphere.
///
/// The linear coefficients become 1/(3 ln2) + 2/(9 ln2) and 2/(3 ln2) + X;
/// [`analytic_average`] carries 1/3 and 2/3 in place of the 1/ln2 terms.
pub fn analytic_average_rederived(model: Model, tau: f64, nbar: f64) -> Result<f64> {
    let x = check_regime(tau, nbar)?;
    Ok(match model {
        Model::JaynesCummings => closed_form(x, 1.0 / (3.0 * LN_2) + 2.0 / (9.0 * LN_2), 1.0 / 3.0),
        Model::Raman => closed_form(x, 2.0 / (3.0 * LN_2) + raman_x_constant(), 2.0 / 3.0),
    })
}

fn x_integrand(u: f64) -> f64 {
    let f = u * u + (1.0 - u) * (1.0 - u);
    -f * f.log2()
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (x_integrand(lm), x_integrand(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// X = −2∫₀¹ x·g(x)·log₂g(x) dx with g = x⁴ + (1−x²)², evaluated after the
/// substitution u = x² as −∫₀¹ f log₂f du, f = u² + (1−u)².
pub fn raman_x_constant() -> f64 {
    static X: OnceLock<f64> = OnceLock::new();
    *X.get_or_init(|| {
        let (fa, fm, fb) = (x_integrand(0.0), x_integrand(0.5), x_integrand(1.0));
        let whole = simpson(0.0, 1.0, fa, fm, fb);
        adaptive_simpson(0.0, 1.0, fa, fm, fb, whole, 1e-14, 40)
    })
}

/// Entanglement left behind by one NOT gate (τ = π/2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalingLaw {
    pub nbar: f64,
    /// Full closed form at τ = π/2.
    pub full: f64,
    /// (mπ²/(12n̄))·log₂(4n̄/π²).
    pub leading: f64,
    /// leading / full.
    pub ratio: f64,
}

pub fn not_gate_scaling(model: Model, nbar: f64) -> Result<ScalingLaw> {
    if nbar < 100.0 {
        log::warn!("scaling law evaluated at nbar = {nbar}; it assumes nbar >> 1");
    }
    let full = analytic_average(model, FRAC_PI_2, nbar)?;
    let m = model.photon_order() as f64;
    let leading = m * PI * PI / (12.0 * nbar) * (4.0 * nbar / (PI * PI)).log2();
    Ok(ScalingLaw {
        nbar,
        full,
        leading,
        ratio: leading / full,
    })
}
