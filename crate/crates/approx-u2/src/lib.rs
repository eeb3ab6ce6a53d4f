//! Approximate n-controlled U(2) gates without ancillas.
//!
//! A ladder of controlled roots of `U` on the first `n_b - 1` controls is combined with a
//! controlled incrementer whose multi-controlled part is an SU(2) multi-target gate on the
//! remaining controls. Dropping the smallest root leaves an error set by `n_b` alone, so
//! the CX count grows by 24 per extra control.

pub mod params;
pub mod synth;
pub mod verify;

pub use params::{nb_from_epsilon, root_gate, su2_angle, ApproxParams};
pub use synth::{append_increment, approx_mcu, approx_mcu_with_base, exact_mcu, qft, untruncated_mcu, ApproxSynthesis};
pub use verify::{approx_error, approx_error_exhaustive, predicted_error};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ApproxError {
    #[error("gate is not unitary")]
    NotUnitary,
    #[error("theta is zero: U is a phase gate and the error formula is undefined")]
    ThetaZero,
    #[error("epsilon {0} must lie in (0, 2)")]
    Epsilon(f64),
    #[error("{n} controls is too few for n_b = {n_b}: need n >= n_b + 5 = {required}")]
    TooFewControls { n: usize, n_b: usize, required: usize },
    #[error("base size {n_b} must be between 1 and the control count {n}")]
    BadBase { n: usize, n_b: usize },
    #[error("circuit leaks out of the control basis by {0:e}")]
    Leakage(f64),
    #[error(transparent)]
    Su2(#[from] su2_synth::Su2Error),
    #[error(transparent)]
    Ir(#[from] circuit_ir::IrError),
    #[error(transparent)]
    Sim(#[from] dense_sim::SimError),
}
