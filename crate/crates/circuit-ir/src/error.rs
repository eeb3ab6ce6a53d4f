use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IrError {
    #[error("{kind} takes {expected} qubits, got {got}")]
    Arity { kind: &'static str, expected: usize, got: usize },
    #[error("qubit {0} appears twice in one gate")]
    RepeatedQubit(usize),
    #[error("qubit {q} out of range for a {n}-qubit circuit")]
    OutOfRange { q: usize, n: usize },
    #[error("matrix is not unitary within 1e-10")]
    NotUnitary,
    #[error("rotation angle is not finite")]
    BadAngle,
    #[error("gate kind {kind} is not supported by {format}; lower the circuit first")]
    Unsupported { kind: &'static str, format: &'static str },
    #[error("parse error: {0}")]
    Parse(String),
}
