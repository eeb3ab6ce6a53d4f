use crate::McxError;
use circuit_ir::{Circuit, GateKind, Mat2f};

/// One relative-phase Toffoli block: `((a, b), target)`. `b` drives the outer two CX, `a` the middle one.
pub type Block = ((usize, usize), usize);

/// Pre-dressing `A = X, H, T` applied in that order.
pub fn dressing_a() -> Mat2f {
    Mat2f::t() * Mat2f::h() * Mat2f::x()
}

/// Post-dressing `B = Tdg, H` applied in that order.
pub fn dressing_b() -> Mat2f {
    Mat2f::h() * Mat2f::tdg()
}

/// Plain relative-phase Toffoli on three qubits.
pub fn rccx() -> Circuit {
    let mut c = Circuit::new(3);
    c.rccx(0, 1, 2).unwrap();
    c
}

fn check(blocks: &[Block]) -> Result<(), McxError> {
    for (i, &((a, b), t)) in blocks.iter().enumerate() {
        if a == b || a == t || b == t {
            return Err(McxError::BlockQubits(t));
        }
        for &((a2, b2), t2) in &blocks[..i] {
            if t2 == t {
                return Err(McxError::OverlappingTargets(t));
            }
            if t2 == a || t2 == b || t == a2 || t == b2 {
                return Err(McxError::TargetIsControl(t.min(t2)));
            }
        }
    }
    Ok(())
}

/// Appends the blocks layer by layer so independent blocks share layers.
pub fn append_ladder(c: &mut Circuit, blocks: &[Block]) -> Result<(), McxError> {
    check(blocks)?;
    let a = dressing_a();
    let b = dressing_b();
    for &(_, t) in blocks {
        c.u2(a, t)?;
    }
    for &((_, y), t) in blocks {
        c.cx(y, t)?;
    }
    for &(_, t) in blocks {
        c.push(GateKind::Tdg, &[t])?;
    }
    for &((x, _), t) in blocks {
        c.cx(x, t)?;
    }
    for &(_, t) in blocks {
        c.push(GateKind::T, &[t])?;
    }
    for &((_, y), t) in blocks {
        c.cx(y, t)?;
    }
    for &(_, t) in blocks {
        c.u2(b, t)?;
    }
    Ok(())
}

pub fn toffoli_ladder(blocks: &[Block]) -> Result<Circuit, McxError> {
    let width = blocks.iter().map(|&((a, b), t)| a.max(b).max(t) + 1).max().unwrap_or(0);
    let mut c = Circuit::new(width);
    append_ladder(&mut c, blocks)?;
    Ok(c)
}
