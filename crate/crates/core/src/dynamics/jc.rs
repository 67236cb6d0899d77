use num_complex::Complex64 as C64;

use super::{check_leakage, check_norm, normalize, AtomFieldState};
use crate::coherent::{coherent_amplitudes, fock_window, CoherentSpec, FockWindow};
use crate::error::{QceError, Result};
use crate::quadrature::BlochState;

/// Jaynes–Cummings coupling and detuning, both in rad/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JCParams {
    g: f64,
    delta: f64,
}

impl JCParams {
    pub fn new(g: f64, delta: f64) -> Result<Self> {
        if !(g.is_finite() && g > 0.0) {
            return Err(QceError::param("g", format!("must be positive, got {g}")));
        }
        if !delta.is_finite() {
            return Err(QceError::param("delta", "must be finite"));
        }
        Ok(Self { g, delta })
    }

    pub fn resonant(g: f64) -> Result<Self> {
        Self::new(g, 0.0)
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Ω_n = √(Δ² + 4g²(n+1)), the Rabi frequency of block n.
    pub fn rabi_frequency(&self, n: u64) -> f64 {
        (self.delta * self.delta + 4.0 * self.g * self.g * (n as f64 + 1.0)).sqrt()
    }
}

/// Σₙ c₀ⁿ|n⟩|0⟩ + c₁ⁿ|n⟩|1⟩ over a finite photon-number window.
#[derive(Debug, Clone, PartialEq)]
pub struct JCJointState {
    window: FockWindow,
    c0: Vec<C64>,
    c1: Vec<C64>,
}

impl JCJointState {
    /// Builds a state from explicit amplitudes; both vectors are indexed by
    /// `n - window.n_min()` and must have unit total norm.
    pub fn from_amplitudes(window: FockWindow, c0: Vec<C64>, c1: Vec<C64>) -> Result<Self> {
        if c0.len() != window.len() || c1.len() != window.len() {
            return Err(QceError::param(
                "amplitudes",
                format!("expected {} entries per level, got {} and {}", window.len(), c0.len(), c1.len()),
            ));
        }
        check_norm(&c0, &c1)?;
        Ok(Self { window, c0, c1 })
    }

    pub fn window(&self) -> &FockWindow {
        &self.window
    }

    pub fn c0(&self) -> &[C64] {
        &self.c0
    }

    pub fn c1(&self) -> &[C64] {
        &self.c1
    }

    pub fn excited_population(&self) -> f64 {
        self.c1.iter().map(|c| c.norm_sqr()).sum()
    }

    pub(crate) fn evolve_in_place(&mut self, params: &JCParams, t_tilde: f64) -> Result<()> {
        check_leakage(self.edge_mass())?;
        if t_tilde == 0.0 {
            return Ok(());
        }
        let JCParams { g, delta } = *params;
        let frame_up = C64::from_polar(1.0, 0.5 * delta * t_tilde);
        let frame_down = frame_up.conj();
        let n_min = self.window.n_min();
        let len = self.c0.len();
        // Block n couples c1[n] with c0[n+1]; the top c1 and (for n_min > 0)
        // the bottom c0 have no partner inside the window and stay frozen.
        for j in 0..len.saturating_sub(1) {
            let n = n_min + j as u64;
            let omega = params.rabi_frequency(n);
            let (s, c) = (0.5 * omega * t_tilde).sin_cos();
            let detune = delta / omega * s;
            let mix = 2.0 * g * (n as f64 + 1.0).sqrt() / omega * s;
            let x1 = self.c1[j];
            let x0 = self.c0[j + 1];
            self.c1[j] = (C64::new(c, -detune) * x1 - C64::new(0.0, mix) * x0) * frame_up;
            self.c0[j + 1] = (C64::new(c, detune) * x0 - C64::new(0.0, mix) * x1) * frame_down;
        }
        Ok(())
    }
}

impl AtomFieldState for JCJointState {
    fn ground(&self) -> &[C64] {
        &self.c0
    }

    fn excited(&self) -> &[C64] {
        &self.c1
    }

    fn edge_mass(&self) -> f64 {
        let top = self.c1.last().map_or(0.0, |c| c.norm_sqr());
        let bottom = if self.window.n_min() > 0 { self.c0[0].norm_sqr() } else { 0.0 };
        top + bottom
    }
}

/// Product state (atom) ⊗ |α⟩, truncated to the Poisson window for
/// `tail_eps` plus one photon on top so the highest block is complete.
pub fn init_jc_state(atom: &BlochState, field: &CoherentSpec, tail_eps: f64) -> Result<JCJointState> {
    let window = fock_window(field, tail_eps)?.extend_up(1);
    let mut a = coherent_amplitudes(field, &window);
    normalize(&mut a);
    let (b0, b1) = atom.amplitudes();
    let c0 = a.iter().map(|x| b0 * x).collect();
    let c1 = a.iter().map(|x| b1 * x).collect();
    Ok(JCJointState { window, c0, c1 })
}

/// Evolves under the JC Hamiltonian for scaled time `t_tilde`, block by block.
///
/// Includes the frame phases e^{±iΔt̃/2} of the standard closed-form solution.
pub fn jc_evolve(state: &JCJointState, params: &JCParams, t_tilde: f64) -> Result<JCJointState> {
    let mut out = state.clone();
    out.evolve_in_place(params, t_tilde)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn vacuum_excited() -> JCJointState {
        let w = FockWindow::new(0, 1).unwrap();
        let z = C64::new(0.0, 0.0);
        JCJointState::from_amplitudes(w, vec![z, z], vec![C64::new(1.0, 0.0), z]).unwrap()
    }

    #[test]
    fn zero_time_is_identity() {
        let s = init_jc_state(&BlochState::new(1.0, 0.3).unwrap(), &CoherentSpec::from_nbar(10.0).unwrap(), 1e-12).unwrap();
        let p = JCParams::new(1.0, 0.4).unwrap();
        assert_eq!(jc_evolve(&s, &p, 0.0).unwrap(), s);
    }

    #[test]
    fn vacuum_rabi_oscillation() {
        let s = vacuum_excited();
        let p = JCParams::resonant(2.0).unwrap();
        for t in [0.1, 0.37, 0.6, FRAC_PI_2 / 2.0] {
            let e = jc_evolve(&s, &p, t).unwrap();
            let gt = 2.0 * t;
            assert!((e.c1()[0] - C64::new(gt.cos(), 0.0)).norm() < 1e-15);
            assert!((e.c0()[1] - C64::new(0.0, -gt.sin())).norm() < 1e-15);
        }
        let full = jc_evolve(&s, &p, FRAC_PI_2 / 2.0).unwrap();
        assert!((full.c0()[1].norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn product_state_construction() {
        let ground_vac = init_jc_state(&BlochState::ground(), &CoherentSpec::from_nbar(0.0).unwrap(), 1e-12).unwrap();
        assert_eq!(ground_vac.c0()[0], C64::new(1.0, 0.0));
        assert!(ground_vac.c0()[1..].iter().chain(ground_vac.c1()).all(|c| c.norm() == 0.0));

        let s = init_jc_state(&BlochState::excited(), &CoherentSpec::real(10f64.sqrt()).unwrap(), 1e-12).unwrap();
        assert!(s.c0().iter().all(|c| c.norm() < 1e-16));
        assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dark_state_is_stationary() {
        let s = init_jc_state(&BlochState::ground(), &CoherentSpec::from_nbar(0.0).unwrap(), 1e-12).unwrap();
        let e = jc_evolve(&s, &JCParams::new(1.3, 0.2).unwrap(), 7.0).unwrap();
        assert!((e.c0()[0] - C64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn leakage_is_signalled() {
        let w = FockWindow::new(3, 4).unwrap();
        let h = C64::new(0.5f64.sqrt(), 0.0);
        let z = C64::new(0.0, 0.0);
        let s = JCJointState::from_amplitudes(w, vec![z, h], vec![z, h]).unwrap();
        let err = jc_evolve(&s, &JCParams::resonant(1.0).unwrap(), 0.1).unwrap_err();
        assert!(matches!(err, QceError::WindowLeakage { .. }));
    }

    #[test]
    fn off_resonant_block_matches_two_level_formula() {
        // single block n = 0 detuned: population transfer (2g/Ω)² sin²(Ωt/2)
        let s = vacuum_excited();
        let p = JCParams::new(1.0, 1.5).unwrap();
        let t = 0.8;
        let e = jc_evolve(&s, &p, t).unwrap();
        let omega = p.rabi_frequency(0);
        let transfer = (2.0 / omega).powi(2) * (0.5 * omega * t).sin().powi(2);
        assert!((e.c0()[1].norm_sqr() - transfer).abs() < 1e-14);
        assert!((e.norm_sqr() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(JCParams::new(0.0, 0.0).is_err());
        assert!(JCParams::new(1.0, f64::NAN).is_err());
        let w = FockWindow::new(0, 1).unwrap();
        let z = C64::new(0.0, 0.0);
        assert!(JCJointState::from_amplitudes(w, vec![z], vec![z, z]).is_err());
        assert!(JCJointState::from_amplitudes(w, vec![z, z], vec![z, z]).is_err());
    }
}
