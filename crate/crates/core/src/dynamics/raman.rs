use num_complex::Complex64 as C64;

use super::{check_leakage, check_norm, normalize, AtomFieldState};
use crate::coherent::{coherent_amplitudes, fock_window, CoherentSpec, FockWindow};
use crate::error::{QceError, Result};
use crate::quadrature::BlochState;

/// Atom plus two field modes on a dense `window1 × window2` rectangle.
///
/// Amplitudes are stored row-major: field configuration (n₁, n₂) lives at
/// `(n₁ − n₁_min)·len₂ + (n₂ − n₂_min)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RamanJointState {
    window1: FockWindow,
    window2: FockWindow,
    c0: Vec<C64>,
    c1: Vec<C64>,
}

impl RamanJointState {
    pub fn from_amplitudes(window1: FockWindow, window2: FockWindow, c0: Vec<C64>, c1: Vec<C64>) -> Result<Self> {
        let cells = window1.len() * window2.len();
        if c0.len() != cells || c1.len() != cells {
            return Err(QceError::param(
                "amplitudes",
                format!("expected {cells} entries per level, got {} and {}", c0.len(), c1.len()),
            ));
        }
        check_norm(&c0, &c1)?;
        Ok(Self { window1, window2, c0, c1 })
    }

    pub fn window1(&self) -> &FockWindow {
        &self.window1
    }

    pub fn window2(&self) -> &FockWindow {
        &self.window2
    }

    pub fn c0(&self) -> &[C64] {
        &self.c0
    }

    pub fn c1(&self) -> &[C64] {
        &self.c1
    }

    pub fn index(&self, n1: u64, n2: u64) -> Option<usize> {
        if !self.window1.contains(n1) || !self.window2.contains(n2) {
            return None;
        }
        let i = (n1 - self.window1.n_min()) as usize;
        let j = (n2 - self.window2.n_min()) as usize;
        Some(i * self.window2.len() + j)
    }

    pub fn excited_population(&self) -> f64 {
        self.c1.iter().map(|c| c.norm_sqr()).sum()
    }

    pub(crate) fn evolve_in_place(&mut self, omega_eff: f64, t_tilde: f64) -> Result<()> {
        check_leakage(self.edge_mass())?;
        if t_tilde == 0.0 {
            return Ok(());
        }
        let (len1, len2) = (self.window1.len(), self.window2.len());
        let (m1, m2) = (self.window1.n_min(), self.window2.n_min());
        // (|0⟩, n₁, n₂) ↔ (|1⟩, n₁+1, n₂−1), coupling Ω√((n₁+1)n₂)
        for i in 0..len1.saturating_sub(1) {
            let n1 = (m1 + i as u64) as f64;
            for j in 1..len2 {
                let n2 = (m2 + j as u64) as f64;
                let kappa = omega_eff * ((n1 + 1.0) * n2).sqrt();
                let (s, c) = (kappa * t_tilde).sin_cos();
                let g = i * len2 + j;
                let e = (i + 1) * len2 + (j - 1);
                let x0 = self.c0[g];
                let x1 = self.c1[e];
                self.c0[g] = c * x0 - C64::new(0.0, s) * x1;
                self.c1[e] = c * x1 - C64::new(0.0, s) * x0;
            }
        }
        Ok(())
    }
}

impl AtomFieldState for RamanJointState {
    fn ground(&self) -> &[C64] {
        &self.c0
    }

    fn excited(&self) -> &[C64] {
        &self.c1
    }

    fn edge_mass(&self) -> f64 {
        let (len1, len2) = (self.window1.len(), self.window2.len());
        let (m1, m2) = (self.window1.n_min(), self.window2.n_min());
        let mut mass = 0.0;
        for i in 0..len1 {
            for j in 0..len2 {
                let k = i * len2 + j;
                let (n1, n2) = (m1 + i as u64, m2 + j as u64);
                // ground cell couples upward when n₂ ≥ 1
                let ground_inside = i + 1 < len1 && j >= 1;
                if n2 >= 1 && !ground_inside {
                    mass += self.c0[k].norm_sqr();
                }
                // excited cell couples downward when n₁ ≥ 1
                let excited_inside = i >= 1 && j + 1 < len2;
                if n1 >= 1 && !excited_inside {
                    mass += self.c1[k].norm_sqr();
                }
            }
        }
        mass
    }
}

/// Product state (atom) ⊗ |α₁⟩ ⊗ |α₂⟩.
///
/// Mode 1 gains a photon and mode 2 loses one when the atom is raised, so
/// window 1 is padded by one photon on top and window 2 by one at the bottom.
pub fn init_raman_state(
    atom: &BlochState,
    field1: &CoherentSpec,
    field2: &CoherentSpec,
    tail_eps: f64,
) -> Result<RamanJointState> {
    let window1 = fock_window(field1, tail_eps)?.extend_up(1);
    let window2 = fock_window(field2, tail_eps)?.extend_down(1);
    let mut a1 = coherent_amplitudes(field1, &window1);
    let mut a2 = coherent_amplitudes(field2, &window2);
    normalize(&mut a1);
    normalize(&mut a2);
    let (b0, b1) = atom.amplitudes();
    let cells = a1.len() * a2.len();
    let mut c0 = Vec::with_capacity(cells);
    let mut c1 = Vec::with_capacity(cells);
    for x in &a1 {
        for y in &a2 {
            let p = x * y;
            c0.push(b0 * p);
            c1.push(b1 * p);
        }
    }
    Ok(RamanJointState { window1, window2, c0, c1 })
}

/// Evolves under ħΩ(σ†a₁†a₂ + σa₂†a₁) at exact two-photon resonance.
pub fn raman_evolve(state: &RamanJointState, omega_eff: f64, t_tilde: f64) -> Result<RamanJointState> {
    if !omega_eff.is_finite() {
        return Err(QceError::param("omega_eff", "must be finite"));
    }
    let mut out = state.clone();
    out.evolve_in_place(omega_eff, t_tilde)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn number_state(n1: u64, n2: u64) -> RamanJointState {
        let w1 = FockWindow::new(0, 1).unwrap();
        let w2 = FockWindow::new(0, 1).unwrap();
        let mut c0 = vec![C64::new(0.0, 0.0); 4];
        let c1 = vec![C64::new(0.0, 0.0); 4];
        c0[(n1 * 2 + n2) as usize] = C64::new(1.0, 0.0);
        RamanJointState::from_amplitudes(w1, w2, c0, c1).unwrap()
    }

    #[test]
    fn single_block_flop() {
        let s = number_state(0, 1);
        let omega = 0.7;
        let t = FRAC_PI_2 / omega;
        let e = raman_evolve(&s, omega, t).unwrap();
        let k = e.index(1, 0).unwrap();
        assert!((e.c1()[k].norm_sqr() - 1.0).abs() < 1e-15);
        assert!((e.c1()[k] - C64::new(0.0, -1.0)).norm() < 1e-15);
        for tt in [0.1, 0.9, 1.7] {
            let e = raman_evolve(&s, omega, tt).unwrap();
            assert!((e.excited_population() - (omega * tt).sin().powi(2)).abs() < 1e-15);
        }
    }

    #[test]
    fn initial_product_state() {
        let vac = CoherentSpec::from_nbar(0.0).unwrap();
        let s = init_raman_state(&BlochState::ground(), &vac, &vac, 1e-12).unwrap();
        let nonzero: Vec<_> = s.c0().iter().chain(s.c1()).filter(|c| c.norm() > 0.0).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(s.c0()[s.index(0, 0).unwrap()], C64::new(1.0, 0.0));

        let f = CoherentSpec::from_nbar(8.0).unwrap();
        let s = init_raman_state(&BlochState::new(0.4, 1.0).unwrap(), &f, &f, 1e-12).unwrap();
        assert!((s.norm_sqr() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn zero_time_identity_and_ground_no_photons_stationary() {
        let s = number_state(1, 0);
        assert_eq!(raman_evolve(&s, 1.0, 3.0).unwrap(), s);
        let f = CoherentSpec::from_nbar(2.0).unwrap();
        let s = init_raman_state(&BlochState::new(1.0, 0.2).unwrap(), &f, &f, 1e-12).unwrap();
        assert_eq!(raman_evolve(&s, 1.0, 0.0).unwrap(), s);
    }

    #[test]
    fn leakage_is_signalled() {
        // ground amplitude on the top row of window 1 cannot be raised
        let w = FockWindow::new(0, 1).unwrap();
        let mut c0 = vec![C64::new(0.0, 0.0); 4];
        c0[3] = C64::new(1.0, 0.0); // (n1, n2) = (1, 1)
        let s = RamanJointState::from_amplitudes(w, w, c0, vec![C64::new(0.0, 0.0); 4]).unwrap();
        assert!(matches!(raman_evolve(&s, 1.0, 0.1), Err(QceError::WindowLeakage { .. })));
    }
}
