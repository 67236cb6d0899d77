//! Initial qubit states and Bloch-sphere averaging.
//!
//! The sphere average uses Gauss–Legendre nodes in cos θ and a periodic
//! trapezoid rule in φ. Weights discretize sin θ dθ dφ / 4π and sum to one.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::coherent::wrap_angle;
use crate::error::{QceError, Result};

pub const DEFAULT_N_THETA: usize = 24;
pub const DEFAULT_N_PHI: usize = 16;

/// Pure qubit state cos(θ/2)|0⟩ + sin(θ/2)e^{iφ}|1⟩.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlochState {
    theta: f64,
    phi: f64,
}

impl BlochState {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(QceError::param("theta", format!("must lie in [0, π], got {theta}")));
        }
        if !phi.is_finite() {
            return Err(QceError::param("phi", "must be finite"));
        }
        Ok(Self { theta, phi: wrap_angle(phi) })
    }

    pub fn ground() -> Self {
        Self { theta: 0.0, phi: 0.0 }
    }

    pub fn excited() -> Self {
        Self { theta: PI, phi: 0.0 }
    }

    /// Equator of the Bloch sphere at azimuth `phi`.
    pub fn equator(phi: f64) -> Self {
        Self { theta: FRAC_PI_2, phi: wrap_angle(phi) }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Amplitudes on |0⟩ and |1⟩.
    pub fn amplitudes(&self) -> (C64, C64) {
        let (s, c) = (0.5 * self.theta).sin_cos();
        (C64::new(c, 0.0), C64::from_polar(s, self.phi))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlochNode {
    pub theta: f64,
    pub phi: f64,
    pub weight: f64,
}

impl BlochNode {
    pub fn state(&self) -> BlochState {
        BlochState { theta: self.theta, phi: self.phi }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlochGrid {
    nodes: Vec<BlochNode>,
    n_theta: usize,
    n_phi: usize,
}

impl BlochGrid {
    pub fn nodes(&self) -> &[BlochNode] {
        &self.nodes
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    /// Weighted sum of `f` over the nodes, in node order.
    pub fn average<F: FnMut(&BlochNode) -> f64>(&self, mut f: F) -> f64 {
        self.nodes.iter().map(|node| node.weight * f(node)).sum()
    }
}

impl Default for BlochGrid {
    fn default() -> Self {
        bloch_grid(DEFAULT_N_THETA, DEFAULT_N_PHI).expect("default grid sizes are valid")
    }
}

/// Gauss–Legendre nodes and weights on [−1, 1], nodes ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(z) by the three-term recurrence
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { z } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = nf * (z * pn - pm) / (z * z - 1.0);
            let dz = pn / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

pub fn bloch_grid(n_theta: usize, n_phi: usize) -> Result<BlochGrid> {
    if n_theta < 2 {
        return Err(QceError::param("n_theta", format!("must be >= 2, got {n_theta}")));
    }
    if n_phi < 1 {
        return Err(QceError::param("n_phi", "must be >= 1"));
    }
    let (x, w) = gauss_legendre(n_theta);
    let mut nodes = Vec::with_capacity(n_theta * n_phi);
    for (&xi, &wi) in x.iter().zip(&w) {
        let theta = xi.clamp(-1.0, 1.0).acos();
        for k in 0..n_phi {
            nodes.push(BlochNode {
                theta,
                phi: TAU * k as f64 / n_phi as f64,
                weight: 0.5 * wi / n_phi as f64,
            });
        }
    }
    Ok(BlochGrid { nodes, n_theta, n_phi })
}
