//! Dense-matrix reference evolution on the same truncated spaces the
//! blockwise propagators use.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use qce_core::dynamics::{init_jc_state, init_raman_state, jc_evolve, raman_evolve, JCJointState, JCParams};
use qce_core::{BlochState, CoherentSpec, C64};

/// e^{−iHt}ψ for real symmetric H.
pub fn propagate(h: DMatrix<f64>, psi: &[C64], t: f64) -> Vec<C64> {
    let eig = SymmetricEigen::new(h);
    let v = eig.eigenvectors.map(|x| C64::new(x, 0.0));
    let phases = DVector::from_iterator(eig.eigenvalues.len(), eig.eigenvalues.iter().map(|&l| C64::from_polar(1.0, -l * t)));
    let psi = DVector::from_column_slice(psi);
    let coeffs = v.transpose() * psi;
    let evolved = &v * coeffs.component_mul(&phases);
    evolved.iter().copied().collect()
}

/// H = (Δ/2)σ_z + g(a†σ + σ†a) on span{|n,0⟩, |n,1⟩ : n ∈ window}, then the
/// frame rotation e^{iΔσ_z t/2}. Interleaved ordering: 2j ↔ c0, 2j+1 ↔ c1.
pub fn jc_dense(state: &JCJointState, g: f64, delta: f64, t: f64) -> (Vec<C64>, Vec<C64>) {
    let len = state.c0().len();
    let n_min = state.window().n_min();
    let mut h = DMatrix::<f64>::zeros(2 * len, 2 * len);
    for j in 0..len {
        h[(2 * j, 2 * j)] = -0.5 * delta;
        h[(2 * j + 1, 2 * j + 1)] = 0.5 * delta;
        if j + 1 < len {
            let k = g * ((n_min + j as u64) as f64 + 1.0).sqrt();
            h[(2 * j + 1, 2 * (j + 1))] = k;
            h[(2 * (j + 1), 2 * j + 1)] = k;
        }
    }
    let psi: Vec<C64> = (0..len).flat_map(|j| [state.c0()[j], state.c1()[j]]).collect();
    let out = propagate(h, &psi, t);
    let up = C64::from_polar(1.0, 0.5 * delta * t);
    let c0 = (0..len).map(|j| out[2 * j] * up.conj()).collect();
    let c1 = (0..len).map(|j| out[2 * j + 1] * up).collect();
    (c0, c1)
}

fn max_diff(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn jc_max_deviation(nbar: f64, delta: f64, t: f64, eps: f64) -> f64 {
    let field = CoherentSpec::new(nbar.sqrt(), 0.4).unwrap();
    let mut worst: f64 = 0.0;
    for atom in [BlochState::ground(), BlochState::excited(), BlochState::new(1.2, 2.0).unwrap()] {
        let s = init_jc_state(&atom, &field, eps).unwrap();
        assert!(s.c0().len() <= 64, "window too large for the dense oracle");
        let fast = jc_evolve(&s, &JCParams::new(1.0, delta).unwrap(), t).unwrap();
        let (c0, c1) = jc_dense(&s, 1.0, delta, t);
        worst = worst.max(max_diff(fast.c0(), &c0)).max(max_diff(fast.c1(), &c1));
    }
    worst
}

/// Raman: H = Ω(σ†a₁†a₂ + σa₂†a₁) on the stored rectangle; ordering 2k ↔ c0,
/// 2k+1 ↔ c1 with k the row-major field index.
pub fn raman_max_deviation(nbar: f64, t: f64, eps: f64) -> f64 {
    let field = CoherentSpec::new(nbar.sqrt(), 1.1).unwrap();
    let mut worst: f64 = 0.0;
    for atom in [BlochState::ground(), BlochState::new(0.8, -0.6).unwrap()] {
        let s = init_raman_state(&atom, &field, &field, eps).unwrap();
        let (w1, w2) = (*s.window1(), *s.window2());
        assert!(w1.len() <= 16 && w2.len() <= 16, "window too large for the dense oracle");
        let cells = w1.len() * w2.len();
        let mut h = DMatrix::<f64>::zeros(2 * cells, 2 * cells);
        for n1 in w1.photon_numbers() {
            for n2 in w2.photon_numbers() {
                if let (Some(g), Some(e)) = (s.index(n1, n2), n2.checked_sub(1).and_then(|m| s.index(n1 + 1, m))) {
                    let k = ((n1 as f64 + 1.0) * n2 as f64).sqrt();
                    h[(2 * g, 2 * e + 1)] = k;
                    h[(2 * e + 1, 2 * g)] = k;
                }
            }
        }
        let psi: Vec<C64> = (0..cells).flat_map(|k| [s.c0()[k], s.c1()[k]]).collect();
        let out = propagate(h, &psi, t);
        let c0: Vec<C64> = (0..cells).map(|k| out[2 * k]).collect();
        let c1: Vec<C64> = (0..cells).map(|k| out[2 * k + 1]).collect();
        let fast = raman_evolve(&s, 1.0, t).unwrap();
        worst = worst.max(max_diff(fast.c0(), &c0)).max(max_diff(fast.c1(), &c1));
    }
    worst
}
