//! Cross-module checks: reference oracles, property tests and physics
//! regressions that need the full simulator.

#[path = "../../tests/common/dense.rs"]
mod dense;

mod physics;
