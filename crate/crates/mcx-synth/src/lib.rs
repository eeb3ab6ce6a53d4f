//! Multi-controlled X with one clean or dirty ancilla, built from relative-phase
//! Toffoli blocks, plus the reference permutation oracle.

pub mod ladder;
pub mod mcx;

use circuit_ir::IrError;
use thiserror::Error;

pub use ladder::{append_ladder, dressing_a, dressing_b, rccx, toffoli_ladder, Block};
pub use mcx::{append_mcx, cnx_oracle, mcx_log, AncillaMode, McxSpec};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum McxError {
    #[error("at least one control is required")]
    NoControls,
    #[error("three or more controls need an ancilla")]
    MissingAncilla,
    #[error("two ladder blocks share target {0}")]
    OverlappingTargets(usize),
    #[error("ladder target {0} is also a control of another block")]
    TargetIsControl(usize),
    #[error("ladder block on target {0} repeats a qubit")]
    BlockQubits(usize),
    #[error(transparent)]
    Ir(#[from] IrError),
}
