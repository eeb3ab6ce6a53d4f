use crate::params::{nb_from_epsilon, root_gate, su2_angle, ApproxParams};
use crate::ApproxError;
use circuit_ir::{Circuit, DecompReport, GateKind, Mat2f};
use std::f64::consts::PI;
use su2_synth::{append_mcmt_su2, Su2Gate};

#[derive(Debug, Clone)]
pub struct ApproxSynthesis {
    pub circuit: Circuit,
    pub params: ApproxParams,
    pub report: DecompReport,
}

/// Fourier transform on `reg` (least significant first) without the final swaps.
pub fn qft(num_qubits: usize, reg: &[usize]) -> Result<Circuit, ApproxError> {
    let mut f = Circuit::new(num_qubits);
    for j in (0..reg.len()).rev() {
        f.h(reg[j])?;
        for i in (0..j).rev() {
            f.cu2(Mat2f::phase(PI / 2f64.powi((j - i) as i32)), reg[i], reg[j])?;
        }
    }
    Ok(f)
}

/// Adds `sign` (+1 or -1) to the register `reg` modulo `2^len`, conditioned on `controls`.
///
/// Phases are Rz rather than P, so the controlled version is off by a phase on the
/// all-ones control subspace that cancels between an increment and a decrement.
pub fn append_increment(c: &mut Circuit, reg: &[usize], controls: &[usize], sign: f64) -> Result<(), ApproxError> {
    if reg.is_empty() {
        return Ok(());
    }
    let m = reg.len() as i32;
    let f = qft(c.num_qubits(), reg)?;
    c.append(&f)?;
    let phis: Vec<f64> = (0..m).map(|j| sign * 2.0 * PI * 2f64.powi(-j - 1)).collect();
    if controls.is_empty() {
        for (&q, &phi) in reg.iter().zip(&phis) {
            c.push(GateKind::Rz(phi), &[q])?;
        }
    } else {
        let gates = phis.iter().map(|&p| Su2Gate::new(Mat2f::rz(p))).collect::<Result<Vec<_>, _>>()?;
        append_mcmt_su2(c, controls, reg, &gates)?;
    }
    c.append(&f.inverse())?;
    Ok(())
}

/// `C^{reg+controls}(U) * C^{controls}(R^dagger)` with `R = U^{1/2^|reg|}`.
fn append_root_scheme(
    c: &mut Circuit,
    reg: &[usize],
    controls: &[usize],
    target: usize,
    u: &Mat2f,
) -> Result<(), ApproxError> {
    let m = reg.len() as u32;
    let ladder: Vec<(usize, Mat2f)> = reg.iter().enumerate().map(|(i, &q)| (q, root_gate(u, m - i as u32))).collect();
    for (q, r) in &ladder {
        c.cu2(*r, *q, target)?;
    }
    append_increment(c, reg, controls, 1.0)?;
    for (q, r) in ladder.iter().rev() {
        c.cu2(r.adjoint(), *q, target)?;
    }
    append_increment(c, reg, controls, -1.0)?;
    Ok(())
}

fn append_exact(c: &mut Circuit, controls: &[usize], target: usize, u: &Mat2f) -> Result<(), ApproxError> {
    match controls.len() {
        0 => c.u2(*u, target)?,
        1 => c.cu2(*u, controls[0], target)?,
        k => {
            let (reg, rest) = controls.split_at(k - 1);
            append_root_scheme(c, reg, rest, target, u)?;
            c.cu2(root_gate(u, (k - 1) as u32), rest[0], target)?;
        }
    }
    Ok(())
}

/// Exact ancilla-free C^n(U); the CX count is quadratic in `n`.
pub fn exact_mcu(n: usize, u: &Mat2f) -> Result<Circuit, ApproxError> {
    if !u.is_unitary(1e-10) {
        return Err(ApproxError::NotUnitary);
    }
    let mut c = Circuit::new(n + 1);
    let controls: Vec<usize> = (0..n).collect();
    append_exact(&mut c, &controls, n, u)?;
    Ok(c)
}

fn split(n: usize, n_b: usize) -> Result<(Vec<usize>, Vec<usize>), ApproxError> {
    if n_b == 0 || n_b > n {
        return Err(ApproxError::BadBase { n, n_b });
    }
    Ok(((0..n_b - 1).collect(), (n_b - 1..n).collect()))
}

/// Truncated scheme with an explicit base size: controls `[0, n_b - 1)` carry the root
/// ladder, the rest drive the incrementer. Target is qubit `n`.
pub fn approx_mcu_with_base(n: usize, u: &Mat2f, n_b: usize) -> Result<Circuit, ApproxError> {
    if !u.is_unitary(1e-10) {
        return Err(ApproxError::NotUnitary);
    }
    let (reg, rest) = split(n, n_b)?;
    let mut c = Circuit::new(n + 1);
    append_root_scheme(&mut c, &reg, &rest, n, u)?;
    Ok(c)
}

/// The truncated scheme followed by the dropped root, synthesized exactly.
pub fn untruncated_mcu(n: usize, u: &Mat2f, n_b: usize) -> Result<Circuit, ApproxError> {
    let mut c = approx_mcu_with_base(n, u, n_b)?;
    let (_, rest) = split(n, n_b)?;
    append_exact(&mut c, &rest, n, &root_gate(u, (n_b - 1) as u32))?;
    Ok(c)
}

pub fn approx_mcu(n: usize, u: &Mat2f, epsilon: f64) -> Result<ApproxSynthesis, ApproxError> {
    let (theta, alpha) = su2_angle(u)?;
    let n_b = nb_from_epsilon(theta, epsilon)?;
    if n < n_b + 5 {
        return Err(ApproxError::TooFewControls { n, n_b, required: n_b + 5 });
    }
    let circuit = approx_mcu_with_base(n, u, n_b)?;
    let report = circuit.report();
    Ok(ApproxSynthesis { circuit, params: ApproxParams { epsilon, theta, alpha, n_b, n_e: n - n_b }, report })
}
