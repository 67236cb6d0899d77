use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use super::dense;
use crate::coherent::CoherentSpec;
use crate::dynamics::init_jc_state;
use crate::entanglement::{
    analytic_average, analytic_average_rederived, entropy_of, perturbative_eigenvalues, Model, QubitDensity, Simulator,
};
use crate::entropy::binary_entropy_bits;
use crate::quadrature::{bloch_grid, BlochState};
use crate::C64;

fn averaged(model: Model, nbar: f64, tau: f64, nt: usize, np: usize) -> f64 {
    let sim = Simulator::new(model, CoherentSpec::from_nbar(nbar).unwrap()).unwrap();
    sim.average(tau, &bloch_grid(nt, np).unwrap()).unwrap()
}

#[test]
fn bloch_average_converges_under_grid_doubling() {
    for (model, nbar) in [(Model::JaynesCummings, 128.0), (Model::JaynesCummings, 8.0), (Model::Raman, 8.0)] {
        for tau in [PI / 16.0, FRAC_PI_4, FRAC_PI_2] {
            let coarse = averaged(model, nbar, tau, 24, 16);
            let fine = averaged(model, nbar, tau, 48, 32);
            let change = (fine / coarse - 1.0).abs();
            assert!(change < 5e-3, "{model:?} nbar={nbar} tau={tau}: {change}");
        }
    }
}

#[test]
fn averaged_entanglement_falls_with_photon_number() {
    for tau in [FRAC_PI_2, PI / 8.0, PI / 64.0] {
        let e: Vec<f64> = [8.0, 128.0, 4096.0].iter().map(|&n| averaged(Model::JaynesCummings, n, tau, 24, 16)).collect();
        assert!(e[0] > e[1] && e[1] > e[2], "tau={tau}: {e:?}");
    }
}

#[test]
fn two_mode_raman_entangles_more_than_single_mode() {
    let raman = averaged(Model::Raman, 8.0, FRAC_PI_4, 24, 16);
    let jc = averaged(Model::JaynesCummings, 8.0, FRAC_PI_4, 24, 16);
    assert!(raman > jc, "{raman} vs {jc}");
}

#[test]
fn excited_state_rises_most_quickly() {
    let sim = Simulator::new(Model::JaynesCummings, CoherentSpec::real(10f64.sqrt()).unwrap()).unwrap();
    let others = [
        BlochState::ground(),
        BlochState::equator(0.0),
        BlochState::equator(FRAC_PI_2),
        BlochState::equator(PI),
    ];
    for tau in [0.1, 0.25, 0.5] {
        let b = sim.evolve_basis(tau).unwrap();
        let top = b.entropy(&BlochState::excited()).unwrap();
        for s in &others {
            assert!(top > b.entropy(s).unwrap(), "tau={tau} state={s:?}");
        }
    }
}

#[test]
fn excited_state_at_not_time_regression() {
    // value from the blockwise simulator, cross-checked below against the
    // dense matrix exponential on the same window
    const ANCHOR: f64 = 0.279_267_305_728_066;
    let field = CoherentSpec::real(10f64.sqrt()).unwrap();
    let sim = Simulator::new(Model::JaynesCummings, field).unwrap();
    let e = sim.entanglement(&BlochState::excited(), FRAC_PI_2).unwrap();

    let s = init_jc_state(&BlochState::excited(), &field, 1e-12).unwrap();
    assert!(s.c0().len() <= 64);
    let (c0, c1) = dense::jc_dense(&s, 1.0, 0.0, FRAC_PI_2 / field.alpha_mag());
    let rho00: f64 = c0.iter().map(|c| c.norm_sqr()).sum();
    let rho11: f64 = c1.iter().map(|c| c.norm_sqr()).sum();
    let rho01: C64 = c0.iter().zip(&c1).map(|(a, b)| a * b.conj()).sum();
    let dense_e = entropy_of(&QubitDensity::new(rho00, rho11, rho01).unwrap()).unwrap();
    assert!((e - dense_e).abs() < 1e-9, "{e} vs dense {dense_e}");
    assert!((e - ANCHOR).abs() < 1e-9, "{e:.15}");
}

#[test]
fn rederived_closed_form_matches_averaged_perturbative_entropy() {
    let grid = bloch_grid(48, 1).unwrap();
    for model in [Model::JaynesCummings, Model::Raman] {
        for (tau, nbar) in [(FRAC_PI_2, 1e5), (FRAC_PI_2, 1e8), (0.1, 1e3)] {
            assert!(tau * tau / nbar <= 1e-4);
            let numeric = grid.average(|node| {
                let l = perturbative_eigenvalues(model, node.theta, tau, nbar).unwrap();
                binary_entropy_bits(l.plus).unwrap()
            });
            let closed = analytic_average_rederived(model, tau, nbar).unwrap();
            assert!((closed / numeric - 1.0).abs() < 0.01, "{model:?} {tau} {nbar}: {closed} vs {numeric}");
        }
    }
}

#[test]
fn averaged_entanglement_vanishes_at_zero_time() {
    for model in [Model::JaynesCummings, Model::Raman] {
        assert!(averaged(model, 16.0, 0.0, 8, 4).abs() < 1e-10);
        assert_eq!(analytic_average(model, 0.0, 16.0).unwrap(), 0.0);
    }
}
