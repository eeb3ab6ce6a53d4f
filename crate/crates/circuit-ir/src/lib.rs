//! Gate-level circuit representation: gates, lowering to CX plus single-qubit
//! gates, CX and depth metrics, inversion, and QASM/JSON serialization.
//!
//! Qubit 0 is the least significant bit of a basis index.

pub mod circuit;
pub mod error;
pub mod export;
pub mod gate;
pub mod mat2;

pub use circuit::{zyz, AncillaRole, Circuit, DecompReport};
pub use error::IrError;
pub use export::{export, fmt_angle, matrix_from_json, matrix_to_json, parse_json, Format};
pub use gate::{Gate, GateKind, GateTag, Mat2f};
pub use mat2::Mat2;
