use crate::state::apply_circuit;
use crate::{Real, SimError, STATE_CAP};
use circuit_ir::{Circuit, Mat2};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::PI;

/// 2x2 blocks of a circuit that keeps every qubit except `target` in its basis state.
#[derive(Debug, Clone)]
pub struct TargetBlocks<T> {
    pub target: usize,
    /// Indexed by the basis state of the other qubits, packed low to high.
    pub blocks: Vec<Mat2<T>>,
    /// Largest amplitude norm that escaped a block.
    pub leakage: f64,
}

fn spread(idx: usize, t: usize) -> usize {
    let low = idx & ((1 << t) - 1);
    ((idx >> t) << (t + 1)) | low
}

pub fn target_blocks<T: Real>(circuit: &Circuit, target: usize) -> Result<TargetBlocks<T>, SimError> {
    let n = circuit.num_qubits();
    if n > STATE_CAP {
        return Err(SimError::TooManyQubits { n, cap: STATE_CAP });
    }
    if target >= n {
        return Err(SimError::QubitOutOfRange(target));
    }
    let tb = 1usize << target;
    let res: Vec<(Mat2<T>, f64)> = (0..1usize << (n - 1))
        .into_par_iter()
        .map(|idx| {
            let base = spread(idx, target);
            let mut cols = [[Complex::new(T::zero(), T::zero()); 2]; 2];
            let mut leak = 0.0f64;
            for (k, col) in cols.iter_mut().enumerate() {
                let mut amps = vec![Complex::new(T::zero(), T::zero()); 1 << n];
                amps[base | (k * tb)] = Complex::new(T::one(), T::zero());
                apply_circuit(&mut amps, circuit);
                *col = [amps[base], amps[base | tb]];
                let out: f64 = amps
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| i & !tb != base)
                    .map(|(_, a)| a.norm_sqr().to_f64().unwrap())
                    .sum();
                leak = leak.max(out.sqrt());
            }
            (Mat2::new(cols[0][0], cols[1][0], cols[0][1], cols[1][1]), leak)
        })
        .collect();
    let leakage = res.iter().map(|r| r.1).fold(0.0, f64::max);
    Ok(TargetBlocks { target, blocks: res.into_iter().map(|r| r.0).collect(), leakage })
}

fn weights<T: Real>(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex<T>> {
    (0..len)
        .map(|_| {
            let r = T::from(0.5 + rng.gen::<f64>()).unwrap();
            Complex::from_polar(r, T::from(rng.gen::<f64>() * 2.0 * PI).unwrap())
        })
        .collect()
}

/// Same blocks as [`target_blocks`] from four simulations instead of `2^n`.
///
/// One run per target column, with a distinct nonzero weight on every control state,
/// reads all blocks at once when the circuit is block diagonal. A run with fresh random
/// weights on both columns then checks that claim; `leakage` is its relative residual.
pub fn probe_blocks<T: Real>(circuit: &Circuit, target: usize, seed: u64) -> Result<TargetBlocks<T>, SimError> {
    let n = circuit.num_qubits();
    if n > STATE_CAP {
        return Err(SimError::TooManyQubits { n, cap: STATE_CAP });
    }
    if target >= n {
        return Err(SimError::QubitOutOfRange(target));
    }
    let tb = 1usize << target;
    let len = 1usize << (n - 1);
    let zero = Complex::new(T::zero(), T::zero());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks = vec![Mat2::identity(); len];
    for k in 0..2 {
        let w = weights::<T>(&mut rng, len);
        let mut amps = vec![zero; 1 << n];
        for (x, c) in w.iter().enumerate() {
            amps[spread(x, target) | (k * tb)] = *c;
        }
        apply_circuit(&mut amps, circuit);
        for (x, c) in w.iter().enumerate() {
            let base = spread(x, target);
            blocks[x].m[0][k] = amps[base] / c;
            blocks[x].m[1][k] = amps[base | tb] / c;
        }
    }
    let (w0, w1) = (weights::<T>(&mut rng, len), weights::<T>(&mut rng, len));
    let mut amps = vec![zero; 1 << n];
    for x in 0..len {
        let base = spread(x, target);
        amps[base] = w0[x];
        amps[base | tb] = w1[x];
    }
    let norm: f64 = amps.iter().map(|a| a.norm_sqr().to_f64().unwrap()).sum();
    apply_circuit(&mut amps, circuit);
    let mut resid = 0.0f64;
    for x in 0..len {
        let base = spread(x, target);
        let b = &blocks[x].m;
        let e0 = b[0][0] * w0[x] + b[0][1] * w1[x];
        let e1 = b[1][0] * w0[x] + b[1][1] * w1[x];
        resid += (amps[base] - e0).norm_sqr().to_f64().unwrap() + (amps[base | tb] - e1).norm_sqr().to_f64().unwrap();
        amps[base] = zero;
        amps[base | tb] = zero;
    }
    resid += amps.iter().map(|a| a.norm_sqr().to_f64().unwrap()).sum::<f64>();
    Ok(TargetBlocks { target, blocks, leakage: (resid / norm).sqrt() })
}

/// Blocks of C^k(U) on `k = num_qubits - 1` controls: `u` when every other qubit is 1.
pub fn controlled_blocks<T: Real>(num_qubits: usize, u: &Mat2<T>) -> Vec<Mat2<T>> {
    let len = 1usize << (num_qubits - 1);
    (0..len).map(|i| if i == len - 1 { *u } else { Mat2::identity() }).collect()
}

/// min over phi of the spectral norm of (A - e^{i phi} B), for block-diagonal A and B.
pub fn block_distance<T: Real>(a: &[Mat2<T>], b: &[Mat2<T>]) -> Result<f64, SimError> {
    if a.len() != b.len() {
        return Err(SimError::DimensionMismatch { left: a.len(), right: b.len() });
    }
    let mut phases: Vec<f64> = Vec::with_capacity(2 * a.len());
    for (x, y) in a.iter().zip(b) {
        let m = y.adjoint() * *x;
        let (ls, _) = m.unitary_eigen();
        for l in ls {
            phases.push(l.arg().to_f64().unwrap().rem_euclid(2.0 * PI));
        }
    }
    Ok(covering_arc_distance(&mut phases))
}

/// Max distance from the unit-circle points `e^{i p}` to the best single point on the circle.
pub fn covering_arc_distance(phases: &mut [f64]) -> f64 {
    if phases.is_empty() {
        return 0.0;
    }
    phases.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut gap = 2.0 * PI - (phases[phases.len() - 1] - phases[0]);
    for w in phases.windows(2) {
        gap = gap.max(w[1] - w[0]);
    }
    let width = 2.0 * PI - gap;
    2.0 * (width / 4.0).sin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use circuit_ir::Mat2f;

    #[test]
    fn arc_of_two_points() {
        let d = covering_arc_distance(&mut [0.0, 0.5]);
        assert!((d - 2.0 * (0.125f64).sin()).abs() < 1e-15);
        let d = covering_arc_distance(&mut [6.2, 0.1]);
        let w = 0.1 + 2.0 * PI - 6.2;
        assert!((d - 2.0 * (w / 4.0).sin()).abs() < 1e-12);
    }

    #[test]
    fn blocks_of_cu2() {
        let g = Mat2f::ry(0.3);
        let mut c = Circuit::new(2);
        c.cu2(g, 0, 1).unwrap();
        let tb = target_blocks::<f64>(&c, 1).unwrap();
        assert!(tb.leakage < 1e-12);
        assert!(block_distance(&tb.blocks, &controlled_blocks(2, &g)).unwrap() < 1e-12);
    }

    #[test]
    fn leakage_detected() {
        let mut c = Circuit::new(2);
        c.cx(1, 0).unwrap();
        let tb = target_blocks::<f64>(&c, 1).unwrap();
        assert!(tb.leakage > 0.5);
    }

    #[test]
    fn probe_agrees_with_exhaustive() {
        let mut c = Circuit::new(4);
        c.cu2(Mat2f::ry(0.3), 0, 2).unwrap();
        c.ccx(0, 3, 2).unwrap();
        c.h(1).unwrap();
        c.cx(1, 3).unwrap();
        c.cx(1, 3).unwrap();
        c.h(1).unwrap();
        let a = target_blocks::<f64>(&c, 2).unwrap();
        let b = probe_blocks::<f64>(&c, 2, 9).unwrap();
        assert!(b.leakage < 1e-12);
        for (x, y) in a.blocks.iter().zip(&b.blocks) {
            assert!(x.max_diff(y) < 1e-12);
        }
        let mut leaky = Circuit::new(3);
        leaky.h(0).unwrap();
        leaky.cx(0, 2).unwrap();
        assert!(probe_blocks::<f64>(&leaky, 2, 9).unwrap().leakage > 0.1);
    }

    #[test]
    fn phase_only_difference_is_free() {
        let g = Mat2f::phase(0.7).scale(Complex::from_polar(1.0, 0.2));
        let a = vec![g.scale(Complex::from_polar(1.0, 1.0)); 2];
        let b = vec![g; 2];
        assert!(block_distance(&a, &b).unwrap() < 1e-12);
    }
}
