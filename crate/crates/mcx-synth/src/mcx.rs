use crate::ladder::{append_ladder, Block};
use crate::McxError;
use circuit_ir::{AncillaRole, Circuit};
use dense_sim::{DenseMatrix, Real, SimError, UNITARY_CAP};
use num_complex::Complex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AncillaMode {
    Clean,
    Dirty,
}

/// Layout: controls `[0..n)`, target `n`, ancilla `n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McxSpec {
    pub n: usize,
    pub mode: AncillaMode,
}

impl McxSpec {
    pub fn new(n: usize, mode: AncillaMode) -> Result<Self, McxError> {
        if n == 0 {
            return Err(McxError::NoControls);
        }
        Ok(McxSpec { n, mode })
    }

    pub fn target(&self) -> usize {
        self.n
    }

    pub fn ancilla(&self) -> usize {
        self.n + 1
    }
}

/// X-dressed merges after the first Toffoli, plus the qubit left holding the AND.
///
/// `c[0]` and `c[1]` are freed by the first Toffoli and serve as the first targets.
fn chain(c: &[usize]) -> (Vec<Block>, usize) {
    let fresh = &c[2..];
    let k = fresh.len() / 2;
    let mut merges = Vec::new();
    // node k lives on qubit nodes[k] and owns the two children kids[k]
    let mut nodes = vec![usize::MAX];
    let mut kids = vec![(c[0], c[1])];
    for i in 1..=k {
        let (x, y) = (fresh[2 * i - 2], fresh[2 * i - 1]);
        let w = kids[i - 1].0;
        merges.push(((x, y), w));
        nodes.push(w);
        kids.push((x, y));
    }
    let mut acc = if k == 0 { fresh[0] } else { nodes[k] };
    if fresh.len() % 2 == 1 && k > 0 {
        let w = kids[k - 1].1;
        merges.push(((fresh[fresh.len() - 1], acc), w));
        acc = w;
    }
    for i in (1..k).rev() {
        let w = kids[i - 1].1;
        merges.push(((nodes[i], acc), w));
        acc = w;
    }
    (merges, acc)
}

fn append_merges(circ: &mut Circuit, merges: &[((usize, usize), usize)]) -> Result<(), McxError> {
    for &m in merges {
        append_ladder(circ, &[m])?;
    }
    Ok(())
}

/// Appends C^n X on `controls -> target` using `ancilla` (required for n >= 3).
pub fn append_mcx(
    circ: &mut Circuit,
    controls: &[usize],
    target: usize,
    ancilla: Option<usize>,
    mode: AncillaMode,
) -> Result<(), McxError> {
    match controls.len() {
        0 => return Err(McxError::NoControls),
        1 => return Ok(circ.cx(controls[0], target)?),
        2 => return Ok(circ.ccx(controls[0], controls[1], target)?),
        _ => {}
    }
    let a = ancilla.ok_or(McxError::MissingAncilla)?;
    let (merges, acc) = chain(controls);
    let mut body = Circuit::new(circ.num_qubits());
    append_merges(&mut body, &merges)?;
    let undo = body.inverse();
    body.ccx(acc, a, target)?;
    body.append(&undo)?;
    let (c0, c1) = (controls[0], controls[1]);
    match mode {
        AncillaMode::Clean => {
            circ.rccx(c0, c1, a)?;
            circ.append(&body)?;
            circ.rccx(c0, c1, a)?;
        }
        AncillaMode::Dirty => {
            circ.append(&body)?;
            circ.rccx(c0, c1, a)?;
            circ.append(&body)?;
            circ.rccx(c0, c1, a)?;
        }
    }
    Ok(())
}

pub fn mcx_log(spec: McxSpec) -> Circuit {
    let mut c = Circuit::new(spec.n + 2);
    let role = match spec.mode {
        AncillaMode::Clean => AncillaRole::Clean,
        AncillaMode::Dirty => AncillaRole::Dirty,
    };
    c.mark_ancilla(spec.ancilla(), role).unwrap();
    let controls: Vec<usize> = (0..spec.n).collect();
    append_mcx(&mut c, &controls, spec.target(), Some(spec.ancilla()), spec.mode).unwrap();
    c
}

/// Permutation matrix of C^n X on `n + 1` qubits, target on qubit `n`.
pub fn cnx_oracle<T: Real>(n: usize) -> Result<DenseMatrix<T>, SimError> {
    if n + 1 > UNITARY_CAP {
        return Err(SimError::TooManyQubits { n: n + 1, cap: UNITARY_CAP });
    }
    let dim = 1usize << (n + 1);
    let all = (1usize << n) - 1;
    let mut m = DenseMatrix::zeros(dim);
    for j in 0..dim {
        let i = if j & all == all { j ^ (1 << n) } else { j };
        m.set(i, j, Complex::new(T::one(), T::zero()));
    }
    Ok(m)
}
