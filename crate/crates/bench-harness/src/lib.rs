//! Count and depth tables for every construction, baseline columns, CSV output and a
//! log-model fit.

pub mod fit;
pub mod oracle;
pub mod run;

pub use fit::{fit_log, fit_log_points, LogFit};
pub use oracle::{check, check_circuit, synthesize, Check};
pub use run::{run_family, write_csv, BenchParams, BenchRow, Family};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("unknown family `{0}` (expected mcx_clean, mcx_dirty, mcmt_x, mcmt_su2 or approx_u)")]
    UnknownFamily(String),
    #[error("empty range {0}..={1}")]
    EmptyRange(usize, usize),
    #[error("{family} n={n} needs {qubits} qubits, above the simulation cap of {cap}")]
    TooLargeToVerify { family: Family, n: usize, qubits: usize, cap: usize },
    #[error("{family} n={n} failed verification: distance {distance:e} > {tol:e}")]
    Verification { family: Family, n: usize, distance: f64, tol: f64 },
    #[error("need at least 3 rows with distinct n")]
    Degenerate,
    #[error(transparent)]
    Mcx(#[from] mcx_synth::McxError),
    #[error(transparent)]
    Su2(#[from] su2_synth::Su2Error),
    #[error(transparent)]
    Approx(#[from] approx_u2::ApproxError),
    #[error(transparent)]
    Sim(#[from] dense_sim::SimError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
