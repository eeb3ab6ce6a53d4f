//! Dense statevector and unitary simulation, generic over the real scalar type,
//! plus the equivalence and error oracles used to validate synthesized circuits.

pub mod blocks;
pub mod equiv;
pub mod matrix;
pub mod state;

use num_traits::Float;
use thiserror::Error;

pub use blocks::{block_distance, controlled_blocks, covering_arc_distance, probe_blocks, target_blocks, TargetBlocks};
pub use equiv::{equiv, EquivMode, EquivReport};
pub use matrix::{controlled_product, embed, unitary_of, DenseMatrix};
pub use state::StateVector;

pub const UNITARY_CAP: usize = 13;
pub const STATE_CAP: usize = 26;

pub trait Real: Float + Send + Sync + std::fmt::Debug + 'static {}
impl<T: Float + Send + Sync + std::fmt::Debug + 'static> Real for T {}

pub type State = StateVector<f64>;
pub type Unitary = DenseMatrix<f64>;
pub type StateF32 = StateVector<f32>;
pub type UnitaryF32 = DenseMatrix<f32>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimError {
    #[error("{n} qubits exceeds the simulation cap of {cap}")]
    TooManyQubits { n: usize, cap: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("qubit {0} out of range")]
    QubitOutOfRange(usize),
    #[error("state is not normalized")]
    NotNormalized,
}
