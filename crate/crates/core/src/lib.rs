//! Entanglement between an atomic qubit and the coherent laser field that
//! drives its single-qubit gates.
//!
//! The crate simulates the Jaynes–Cummings and two-photon Raman interactions
//! exactly on a truncated Fock space, reduces the joint state to the atom,
//! and compares the resulting von Neumann entropy with short-time closed
//! forms. [`experiments`] turns laser and atom parameters into SI-unit gate
//! budgets.

pub mod coherent;
pub mod constants;
pub mod dynamics;
pub mod entanglement;
pub mod entropy;
pub mod error;
pub mod experiments;
pub mod quadrature;

#[cfg(test)]
extern crate self as qce_core;
#[cfg(test)]
mod tests;

pub use num_complex::Complex64 as C64;

pub use coherent::{coherent_amplitudes, fock_window, CoherentSpec, FockWindow, DEFAULT_TAIL_EPS};
pub use constants::{PhysConstants, CODATA_2018};
pub use dynamics::{AtomFieldState, JCJointState, JCParams, PulseEnvelope, RamanJointState};
pub use entanglement::{
    analytic_average, average_entanglement, entanglement_vs_time, entropy_of, not_gate_scaling,
    perturbative_eigenvalues, raman_x_constant, reduce_to_qubit, EntanglementCurve, Model, QubitDensity, Simulator,
};
pub use entropy::binary_entropy_bits;
pub use error::{QceError, Result};
pub use quadrature::{bloch_grid, BlochGrid, BlochState};
