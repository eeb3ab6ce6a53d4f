//! Multi-controlled multi-target X and SU(2) gates without extra ancillas beyond
//! the controls, and the published baseline formulas used for comparison.

pub mod baseline;
pub mod mcmt;
pub mod su2;

use circuit_ir::IrError;
use mcx_synth::McxError;
use num_complex::Complex;
use thiserror::Error;

pub use baseline::{baseline_counts, BaselineCounts, BaselineFamily};
pub use mcmt::{append_mcmt_su2, append_mcmt_x, fanout_layers, mcmt_su2, mcmt_x, McmtSpec};
pub use su2::{align_to_yz, conjugation_square, find_conjugating_gate, principal_sqrt, residual, Su2Gate};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Su2Error {
    #[error("matrix is not unitary")]
    NotUnitary,
    #[error("determinant {0} is not 1")]
    NotSpecial(Complex<f64>),
    #[error("no conjugating gate: W has X component {x_component:.3e}, which (X A X A^dagger)^2 cannot produce")]
    NoConjugatingGate { x_component: f64 },
    #[error("at least one control is required")]
    NoControls,
    #[error("target list is empty or does not match the gate list")]
    NoTargets,
    #[error("unknown baseline family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Mcx(#[from] McxError),
    #[error(transparent)]
    Ir(#[from] IrError),
}
