use crate::error::IrError;
use crate::gate::{Gate, GateKind, GateTag, Mat2f};
use num_complex::Complex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AncillaRole {
    Clean,
    Dirty,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
    ancillas: Vec<(usize, AncillaRole)>,
}

/// Resource summary, measured on the lowered circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompReport {
    pub qubits: usize,
    pub gates: usize,
    pub cx: usize,
    pub depth: usize,
    pub ancillas: usize,
    /// `None` when there are no ancillas or roles are mixed.
    pub ancilla_kind: Option<AncillaRole>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Circuit { num_qubits, gates: Vec::new(), ancillas: Vec::new() }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn ancillas(&self) -> &[(usize, AncillaRole)] {
        &self.ancillas
    }

    pub fn mark_ancilla(&mut self, q: usize, role: AncillaRole) -> Result<(), IrError> {
        self.check_range(q)?;
        self.ancillas.retain(|(a, _)| *a != q);
        self.ancillas.push((q, role));
        Ok(())
    }

    fn check_range(&self, q: usize) -> Result<(), IrError> {
        if q >= self.num_qubits {
            return Err(IrError::OutOfRange { q, n: self.num_qubits });
        }
        Ok(())
    }

    pub fn push_gate(&mut self, gate: Gate) -> Result<(), IrError> {
        for &q in &gate.qubits {
            self.check_range(q)?;
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn push(&mut self, kind: GateKind, qubits: &[usize]) -> Result<(), IrError> {
        self.push_gate(Gate::new(kind, qubits.to_vec())?)
    }

    pub fn x(&mut self, q: usize) -> Result<(), IrError> {
        self.push(GateKind::X, &[q])
    }

    pub fn h(&mut self, q: usize) -> Result<(), IrError> {
        self.push(GateKind::H, &[q])
    }

    pub fn cx(&mut self, c: usize, t: usize) -> Result<(), IrError> {
        self.push(GateKind::Cx, &[c, t])
    }

    pub fn ccx(&mut self, a: usize, b: usize, t: usize) -> Result<(), IrError> {
        self.push(GateKind::Ccx, &[a, b, t])
    }

    pub fn rccx(&mut self, a: usize, b: usize, t: usize) -> Result<(), IrError> {
        self.push(GateKind::Rccx, &[a, b, t])
    }

    pub fn u2(&mut self, m: Mat2f, q: usize) -> Result<(), IrError> {
        self.push(GateKind::U2(m), &[q])
    }

    pub fn cu2(&mut self, m: Mat2f, c: usize, t: usize) -> Result<(), IrError> {
        self.push(GateKind::Cu2(m), &[c, t])
    }

    /// Appends every gate of `other`, which must not be wider than `self`.
    pub fn append(&mut self, other: &Circuit) -> Result<(), IrError> {
        for g in &other.gates {
            self.push_gate(g.clone())?;
        }
        Ok(())
    }

    /// Appends `other` with its qubit `i` relabelled to `map[i]`.
    pub fn append_mapped(&mut self, other: &Circuit, map: &[usize]) -> Result<(), IrError> {
        for g in &other.gates {
            let qs: Vec<usize> = g
                .qubits
                .iter()
                .map(|&q| map.get(q).copied().ok_or(IrError::OutOfRange { q, n: map.len() }))
                .collect::<Result<_, _>>()?;
            self.push_gate(Gate::new(g.kind.clone(), qs)?)?;
        }
        Ok(())
    }

    pub fn inverse(&self) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits,
            gates: self.gates.iter().rev().map(Gate::adjoint).collect(),
            ancillas: self.ancillas.clone(),
        }
    }

    pub fn count(&self, tag: GateTag) -> usize {
        self.gates.iter().filter(|g| g.kind.tag() == tag).count()
    }

    /// CX count of the lowered circuit, computed without lowering.
    pub fn cx_count(&self) -> usize {
        self.gates
            .iter()
            .map(|g| match g.kind.tag() {
                GateTag::Cx => 1,
                GateTag::Cu2 => 2,
                GateTag::Rccx => 3,
                GateTag::Ccx => 6,
                _ => 0,
            })
            .sum()
    }

    /// Greedy ASAP layering; each gate occupies one layer on all its qubits.
    pub fn depth(&self) -> usize {
        let mut front = vec![0usize; self.num_qubits];
        let mut depth = 0;
        for g in &self.gates {
            let layer = 1 + g.qubits.iter().map(|&q| front[q]).max().unwrap_or(0);
            for &q in &g.qubits {
                front[q] = layer;
            }
            depth = depth.max(layer);
        }
        depth
    }

    /// Rewrites macros into single-qubit gates and CX, preserving the unitary exactly.
    pub fn lower(&self) -> Circuit {
        let mut out = Circuit { num_qubits: self.num_qubits, gates: Vec::new(), ancillas: self.ancillas.clone() };
        for g in &self.gates {
            lower_gate(g, &mut out.gates);
        }
        out
    }

    pub fn is_lowered(&self) -> bool {
        self.gates.iter().all(|g| matches!(g.kind.tag(), GateTag::Cx) || g.kind.arity() == 1)
    }

    pub fn report(&self) -> DecompReport {
        let low = self.lower();
        let kind = match self.ancillas.first() {
            Some(&(_, r)) if self.ancillas.iter().all(|&(_, x)| x == r) => Some(r),
            _ => None,
        };
        DecompReport {
            qubits: self.num_qubits,
            gates: low.len(),
            cx: low.cx_count(),
            depth: low.depth(),
            ancillas: self.ancillas.len(),
            ancilla_kind: kind,
        }
    }
}

fn g1(kind: GateKind, q: usize) -> Gate {
    Gate { kind, qubits: vec![q] }
}

fn cx(c: usize, t: usize) -> Gate {
    Gate { kind: GateKind::Cx, qubits: vec![c, t] }
}

fn lower_gate(g: &Gate, out: &mut Vec<Gate>) {
    use GateKind::*;
    match &g.kind {
        Ccx => {
            let (a, b, t) = (g.qubits[0], g.qubits[1], g.qubits[2]);
            out.extend([
                g1(H, t),
                cx(b, t),
                g1(Tdg, t),
                cx(a, t),
                g1(T, t),
                cx(b, t),
                g1(Tdg, t),
                cx(a, t),
                g1(T, b),
                g1(T, t),
                g1(H, t),
                cx(a, b),
                g1(T, a),
                g1(Tdg, b),
                cx(a, b),
            ]);
        }
        Rccx => {
            let (a, b, t) = (g.qubits[0], g.qubits[1], g.qubits[2]);
            out.extend([g1(H, t), g1(T, t), cx(b, t), g1(Tdg, t), cx(a, t), g1(T, t), cx(b, t), g1(Tdg, t), g1(H, t)]);
        }
        Cu2(m) => {
            let (c, t) = (g.qubits[0], g.qubits[1]);
            let alpha = m.det().arg() / 2.0;
            let v = m.scale(Complex::from_polar(1.0, -alpha));
            let (beta, gamma, delta) = zyz(&v);
            let a = Mat2f::rz(beta) * Mat2f::ry(gamma / 2.0);
            let b = Mat2f::ry(-gamma / 2.0) * Mat2f::rz(-(delta + beta) / 2.0);
            let cm = Mat2f::rz((delta - beta) / 2.0);
            out.extend([g1(U2(cm), t), cx(c, t), g1(U2(b), t), cx(c, t), g1(U2(a), t), g1(U2(Mat2f::phase(alpha)), c)]);
        }
        _ => out.push(g.clone()),
    }
}

/// Angles (beta, gamma, delta) with `v = Rz(beta) Ry(gamma) Rz(delta)` for `v` in SU(2).
pub fn zyz(v: &Mat2f) -> (f64, f64, f64) {
    let [[v00, _], [v10, v11]] = v.m;
    let gamma = 2.0 * v10.norm().atan2(v00.norm());
    let sum = if v11.norm() > 1e-12 { 2.0 * v11.arg() } else { 0.0 };
    let diff = if v10.norm() > 1e-12 { 2.0 * v10.arg() } else { 0.0 };
    let beta = (sum + diff) / 2.0;
    let delta = (sum - diff) / 2.0;
    // the SU(2) lift is fixed up to sign; flip one Rz by 2pi to match it
    let cand = Mat2f::rz(beta) * Mat2f::ry(gamma) * Mat2f::rz(delta);
    if cand.max_diff(v) < 1e-8 {
        (beta, gamma, delta)
    } else {
        (beta + 2.0 * std::f64::consts::PI, gamma, delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_is_asap() {
        let mut c = Circuit::new(3);
        c.cx(0, 1).unwrap();
        c.x(2).unwrap();
        c.cx(1, 2).unwrap();
        assert_eq!(c.depth(), 2);
        assert_eq!(Circuit::new(4).depth(), 0);
    }

    #[test]
    fn out_of_range_rejected() {
        let mut c = Circuit::new(2);
        assert_eq!(c.cx(0, 2), Err(IrError::OutOfRange { q: 2, n: 2 }));
    }

    #[test]
    fn lowering_counts() {
        let mut c = Circuit::new(3);
        c.ccx(0, 1, 2).unwrap();
        c.rccx(0, 1, 2).unwrap();
        c.cu2(Mat2f::ry(0.4), 0, 2).unwrap();
        let low = c.lower();
        assert!(low.is_lowered());
        assert_eq!(low.count(GateTag::Cx), 11);
        assert_eq!(c.cx_count(), 11);
    }

    #[test]
    fn zyz_reconstructs() {
        for v in [
            Mat2f::h().scale(Complex::new(0.0, -1.0)),
            Mat2f::rx(2.0),
            Mat2f::rz(-1.0),
            Mat2f::ry(0.3) * Mat2f::rx(0.9),
        ] {
            let (b, g, d) = zyz(&v);
            let back = Mat2f::rz(b) * Mat2f::ry(g) * Mat2f::rz(d);
            assert!(back.max_diff(&v) < 1e-10, "{v:?}");
        }
    }

    #[test]
    fn inverse_reverses() {
        let mut c = Circuit::new(2);
        c.push(GateKind::T, &[0]).unwrap();
        c.cx(0, 1).unwrap();
        let inv = c.inverse();
        assert_eq!(inv.gates()[0].kind, GateKind::Cx);
        assert_eq!(inv.gates()[1].kind, GateKind::Tdg);
    }
}
