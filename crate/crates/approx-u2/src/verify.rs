use crate::params::root_gate;
use crate::ApproxError;
use circuit_ir::{Circuit, Mat2f};
use dense_sim::{block_distance, controlled_blocks, covering_arc_distance, probe_blocks, target_blocks, TargetBlocks};

const LEAK_TOL: f64 = 1e-9;
const PROBE_SEED: u64 = 0x5eed;

/// Spectral distance, optimal over global phase, between `circuit` and C^n(U) with the
/// target on the last qubit. Blocks come from a randomized probe of four simulations.
pub fn approx_error(circuit: &Circuit, u: &Mat2f) -> Result<f64, ApproxError> {
    let nq = circuit.num_qubits();
    distance(probe_blocks::<f64>(circuit, nq - 1, PROBE_SEED)?, u)
}

/// [`approx_error`] with every block simulated column by column.
pub fn approx_error_exhaustive(circuit: &Circuit, u: &Mat2f) -> Result<f64, ApproxError> {
    let nq = circuit.num_qubits();
    distance(target_blocks::<f64>(circuit, nq - 1)?, u)
}

fn distance(tb: TargetBlocks<f64>, u: &Mat2f) -> Result<f64, ApproxError> {
    let nq = tb.blocks.len().trailing_zeros() as usize + 1;
    if tb.leakage > LEAK_TOL {
        return Err(ApproxError::Leakage(tb.leakage));
    }
    Ok(block_distance(&tb.blocks, &controlled_blocks(nq, u))?)
}

/// Error left by dropping the root `U^{1/2^(n_b-1)}`.
pub fn predicted_error(u: &Mat2f, n_b: usize) -> f64 {
    let r = root_gate(u, (n_b - 1) as u32);
    let (ls, _) = r.unitary_eigen();
    let mut phases = vec![0.0, ls[0].arg(), ls[1].arg()];
    for p in &mut phases {
        *p = p.rem_euclid(2.0 * std::f64::consts::PI);
    }
    covering_arc_distance(&mut phases)
}
