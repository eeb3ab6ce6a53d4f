use crate::{BenchError, BenchParams, Family};
use circuit_ir::{Circuit, Mat2f};
use dense_sim::{controlled_product, embed, equiv, unitary_of, EquivMode, Unitary, UNITARY_CAP};
use mcx_synth::{cnx_oracle, mcx_log, AncillaMode, McxSpec};
use su2_synth::{mcmt_su2, mcmt_x, McmtSpec, Su2Gate};

const TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Check {
    pub distance: f64,
    pub tol: f64,
    pub passed: bool,
}

pub fn synthesize(family: Family, n: usize, p: &BenchParams) -> Result<Circuit, BenchError> {
    Ok(match family {
        Family::McxClean => mcx_log(McxSpec::new(n, AncillaMode::Clean)?),
        Family::McxDirty => mcx_log(McxSpec::new(n, AncillaMode::Dirty)?),
        Family::McmtX => mcmt_x(n, p.m)?,
        Family::McmtSu2 => mcmt_su2(&McmtSpec::new(n, vec![Su2Gate::from_u2(p.gate)?; p.m])?)?,
        Family::ApproxU => approx_u2::approx_mcu(n, &p.gate, p.epsilon)?.circuit,
    })
}

fn targets(n: usize, m: usize, g: Mat2f) -> Vec<(usize, Mat2f)> {
    (n..n + m).map(|t| (t, g)).collect()
}

/// Simulates the synthesized circuit against its defining operator.
pub fn check(family: Family, n: usize, p: &BenchParams) -> Result<Check, BenchError> {
    check_circuit(family, n, p, &synthesize(family, n, p)?)
}

pub fn check_circuit(family: Family, n: usize, p: &BenchParams, c: &Circuit) -> Result<Check, BenchError> {
    let qubits = c.num_qubits();
    if qubits > UNITARY_CAP {
        return Err(BenchError::TooLargeToVerify { family, n, qubits, cap: UNITARY_CAP });
    }
    if family == Family::ApproxU {
        let d = approx_u2::approx_error(c, &p.gate)?;
        return Ok(Check { distance: d, tol: p.epsilon, passed: d <= p.epsilon });
    }
    let controls: Vec<usize> = (0..n).collect();
    let (reference, mode): (Unitary, EquivMode) = match family {
        Family::McxClean | Family::McxDirty => {
            let qs: Vec<usize> = (0..=n).collect();
            let r = embed(&cnx_oracle(n)?, &qs, n + 2);
            let mode = if family == Family::McxClean {
                EquivMode::CleanSubspace(vec![n + 1])
            } else {
                EquivMode::TensorIdentity(vec![n + 1])
            };
            (r, mode)
        }
        Family::McmtX => (
            controlled_product(n + p.m + 1, &controls, &targets(n, p.m, Mat2f::x())),
            EquivMode::CleanSubspace(vec![n + p.m]),
        ),
        Family::McmtSu2 => {
            let g = Su2Gate::from_u2(p.gate)?.matrix();
            (controlled_product(n + p.m, &controls, &targets(n, p.m, g)), EquivMode::GlobalPhase)
        }
        Family::ApproxU => unreachable!(),
    };
    let u: Unitary = unitary_of(c)?;
    let r = equiv(&u, &reference, &mode, TOL)?;
    Ok(Check { distance: r.distance, tol: TOL, passed: r.equivalent })
}
