use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;

use super::density::{entropy_of, reduce_amplitudes, QubitDensity};
use crate::coherent::{CoherentSpec, DEFAULT_TAIL_EPS};
use crate::dynamics::{init_jc_state, init_raman_state, AtomFieldState, JCJointState, JCParams, RamanJointState};
use crate::error::{QceError, Result};
use crate::quadrature::{BlochGrid, BlochState};

/// Which atom–laser interaction drives the gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Model {
    /// One laser on a single-photon (quadrupole or dipole) transition.
    JaynesCummings,
    /// Two lasers driving a two-photon Raman transition.
    Raman,
}

impl Model {
    /// Number of photons exchanged per atomic flip (the m of the scaling law).
    pub fn photon_order(&self) -> u32 {
        match self {
            Model::JaynesCummings => 1,
            Model::Raman => 2,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Model::JaynesCummings => "jc",
            Model::Raman => "raman",
        }
    }
}

#[derive(Debug, Clone)]
enum Joint {
    Jc(JCJointState),
    Raman(RamanJointState),
}

impl Joint {
    fn evolve(&mut self, t_tilde: f64) -> Result<()> {
        match self {
            // g = 1 and Ω = 1: time is measured in units of the coupling
            Joint::Jc(s) => s.evolve_in_place(&JCParams::resonant(1.0)?, t_tilde),
            Joint::Raman(s) => s.evolve_in_place(1.0, t_tilde),
        }
    }

    fn levels(&self) -> (&[C64], &[C64]) {
        match self {
            Joint::Jc(s) => (s.ground(), s.excited()),
            Joint::Raman(s) => (s.ground(), s.excited()),
        }
    }

    fn into_levels(self) -> (Vec<C64>, Vec<C64>, f64) {
        match self {
            Joint::Jc(s) => {
                let m = s.edge_mass();
                (s.c0().to_vec(), s.c1().to_vec(), m)
            }
            Joint::Raman(s) => {
                let m = s.edge_mass();
                (s.c0().to_vec(), s.c1().to_vec(), m)
            }
        }
    }
}

/// Exact simulator for one field amplitude and model, evaluated at scaled
/// times τ (τ = g|α|t̃ for JC, τ = Ω|α|²t̃ for Raman; the NOT gate is τ = π/2).
///
/// Evolution is linear in the initial atomic state, so the two product
/// states |0⟩|α⟩ and |1⟩|α⟩ are evolved once per τ and every Bloch-sphere
/// node is formed as a superposition of the results.
#[derive(Debug, Clone)]
pub struct Simulator {
    model: Model,
    field: CoherentSpec,
    tail_eps: f64,
    ground: Joint,
    excited: Joint,
}

impl Simulator {
    pub fn new(model: Model, field: CoherentSpec) -> Result<Self> {
        Self::with_tail_eps(model, field, DEFAULT_TAIL_EPS)
    }

    pub fn with_tail_eps(model: Model, field: CoherentSpec, tail_eps: f64) -> Result<Self> {
        let build = |atom: &BlochState| -> Result<Joint> {
            Ok(match model {
                Model::JaynesCummings => Joint::Jc(init_jc_state(atom, &field, tail_eps)?),
                Model::Raman => Joint::Raman(init_raman_state(atom, &field, &field, tail_eps)?),
            })
        };
        Ok(Self {
            model,
            field,
            tail_eps,
            ground: build(&BlochState::ground())?,
            excited: build(&BlochState::excited())?,
        })
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn field(&self) -> &CoherentSpec {
        &self.field
    }

    pub fn tail_eps(&self) -> f64 {
        self.tail_eps
    }

    /// Number of stored joint amplitudes per atomic level.
    pub fn field_dimension(&self) -> usize {
        self.ground.levels().0.len()
    }

    /// t̃ in units of 1/g (JC) or 1/Ω (Raman). A vacuum field has no natural
    /// scale, so τ is used as t̃ directly.
    pub fn scaled_time(&self, tau: f64) -> f64 {
        let scale = match self.model {
            Model::JaynesCummings => self.field.alpha_mag(),
            Model::Raman => self.field.nbar(),
        };
        if scale > 0.0 {
            tau / scale
        } else {
            tau
        }
    }

    pub fn evolve_basis(&self, tau: f64) -> Result<EvolvedBasis> {
        if !(tau.is_finite() && tau >= 0.0) {
            return Err(QceError::param("tau", format!("must be >= 0, got {tau}")));
        }
        let t = self.scaled_time(tau);
        let mut g = self.ground.clone();
        let mut e = self.excited.clone();
        g.evolve(t)?;
        e.evolve(t)?;
        let (g0, g1, mg) = g.into_levels();
        let (e0, e1, me) = e.into_levels();
        Ok(EvolvedBasis {
            tau,
            from_ground: (g0, g1),
            from_excited: (e0, e1),
            edge_mass: mg.max(me),
        })
    }

    pub fn entanglement(&self, atom: &BlochState, tau: f64) -> Result<f64> {
        self.evolve_basis(tau)?.entropy(atom)
    }

    pub fn curve(&self, atom: &BlochState, taus: &[f64]) -> Result<EntanglementCurve> {
        let entropy_values = taus
            .iter()
            .map(|&tau| self.entanglement(atom, tau))
            .collect::<Result<Vec<_>>>()?;
        Ok(EntanglementCurve {
            tau_values: taus.to_vec(),
            entropy_values,
            nbar: self.field.nbar(),
            model: self.model,
            initial: Some(*atom),
        })
    }

    /// Bloch-sphere average ⟨E⟩(τ) over `grid`.
    pub fn average(&self, tau: f64, grid: &BlochGrid) -> Result<f64> {
        self.evolve_basis(tau)?.average(grid)
    }

    pub fn average_curve(&self, taus: &[f64], grid: &BlochGrid) -> Result<EntanglementCurve> {
        let entropy_values = taus
            .iter()
            .map(|&tau| self.average(tau, grid))
            .collect::<Result<Vec<_>>>()?;
        Ok(EntanglementCurve {
            tau_values: taus.to_vec(),
            entropy_values,
            nbar: self.field.nbar(),
            model: self.model,
            initial: None,
        })
    }
}

/// The evolved images of |0⟩|α⟩ and |1⟩|α⟩ at one scaled time.
#[derive(Debug, Clone)]
pub struct EvolvedBasis {
    tau: f64,
    from_ground: (Vec<C64>, Vec<C64>),
    from_excited: (Vec<C64>, Vec<C64>),
    edge_mass: f64,
}

impl EvolvedBasis {
    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Largest amplitude mass parked on frozen window edges.
    pub fn edge_mass(&self) -> f64 {
        self.edge_mass
    }

    pub fn density(&self, atom: &BlochState) -> QubitDensity {
        let (b0, b1) = atom.amplitudes();
        let combine = |x: &[C64], y: &[C64]| -> Vec<C64> { x.iter().zip(y).map(|(p, q)| b0 * p + b1 * q).collect() };
        let c0 = combine(&self.from_ground.0, &self.from_excited.0);
        let c1 = combine(&self.from_ground.1, &self.from_excited.1);
        reduce_amplitudes(&c0, &c1)
    }

    pub fn entropy(&self, atom: &BlochState) -> Result<f64> {
        entropy_of(&self.density(atom))
    }

    /// Weighted node sum; nodes are evaluated in parallel and summed in order.
    pub fn average(&self, grid: &BlochGrid) -> Result<f64> {
        let terms = grid
            .nodes()
            .par_iter()
            .map(|node| Ok(node.weight * self.entropy(&node.state())?))
            .collect::<Result<Vec<f64>>>()?;
        Ok(terms.iter().sum())
    }
}

/// E(τ) for one initial state, or ⟨E⟩(τ) when `initial` is `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntanglementCurve {
    pub tau_values: Vec<f64>,
    pub entropy_values: Vec<f64>,
    pub nbar: f64,
    pub model: Model,
    pub initial: Option<BlochState>,
}

pub fn entanglement_vs_time(
    atom: &BlochState,
    field: &CoherentSpec,
    model: Model,
    tau_grid: &[f64],
) -> Result<EntanglementCurve> {
    Simulator::new(model, *field)?.curve(atom, tau_grid)
}

pub fn average_entanglement(field: &CoherentSpec, model: Model, tau: f64, grid: &BlochGrid) -> Result<f64> {
    Simulator::new(model, *field)?.average(tau, grid)
}
