use std::f64::consts::LN_2;

use crate::error::{QceError, Result};

/// Probabilities this far outside [0, 1] are treated as roundoff and clamped.
pub const PROBABILITY_CLAMP: f64 = 1e-12;

/// Von Neumann entropy (bits) of a qubit whose larger eigenvalue is `lambda_plus`.
///
/// `0·log₂0` is taken as 0. The result is symmetric under `p ↦ 1 − p`
/// bit-for-bit because only the smaller of the two eigenvalues is used.
pub fn binary_entropy_bits(lambda_plus: f64) -> Result<f64> {
    if !(-PROBABILITY_CLAMP..=1.0 + PROBABILITY_CLAMP).contains(&lambda_plus) {
        return Err(QceError::InvalidProbability(lambda_plus));
    }
    let p = lambda_plus.clamp(0.0, 1.0);
    let minor = if p > 0.5 { 1.0 - p } else { p };
    Ok(entropy_from_minor(minor))
}

/// Binary entropy from the smaller eigenvalue `q ∈ [0, ½]`.
///
/// Takes the minor eigenvalue directly so callers that know it to full
/// relative precision (e.g. from a determinant) do not lose it to `1 − λ₊`.
pub(crate) fn entropy_from_minor(q: f64) -> f64 {
    let q = q.clamp(0.0, 0.5);
    if q == 0.0 {
        return 0.0;
    }
    let major = 1.0 - q;
    (-q * q.ln() - major * (-q).ln_1p()) / LN_2
}
