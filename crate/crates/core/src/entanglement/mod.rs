//! Atom–field entanglement: reduced density matrices, exact entropy curves,
//! Bloch-sphere averages and the short-time closed forms.

mod closed_form;
mod density;
mod simulate;

pub use closed_form::{
    analytic_average, analytic_average_rederived, not_gate_scaling, perturbative_eigenvalues, raman_x_constant,
    PerturbativeEigenvalues, ScalingLaw,
};
pub use density::{entropy_of, reduce_to_qubit, QubitDensity};
pub use simulate::{average_entanglement, entanglement_vs_time, EntanglementCurve, EvolvedBasis, Model, Simulator};
