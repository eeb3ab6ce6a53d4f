use crate::error::IrError;
use crate::mat2::Mat2;

pub type Mat2f = Mat2<f64>;

const UNITARY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub enum GateKind {
    X,
    H,
    T,
    Tdg,
    Rx(f64),
    Ry(f64),
    Rz(f64),
    U2(Mat2f),
    Cx,
    Ccx,
    /// Relative-phase Toffoli, defined by its 3-CX network.
    Rccx,
    Cu2(Mat2f),
}

/// Parameter-free discriminant of [`GateKind`], used for counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateTag {
    X,
    H,
    T,
    Tdg,
    Rx,
    Ry,
    Rz,
    U2,
    Cx,
    Ccx,
    Rccx,
    Cu2,
}

impl GateKind {
    pub fn tag(&self) -> GateTag {
        match self {
            GateKind::X => GateTag::X,
            GateKind::H => GateTag::H,
            GateKind::T => GateTag::T,
            GateKind::Tdg => GateTag::Tdg,
            GateKind::Rx(_) => GateTag::Rx,
            GateKind::Ry(_) => GateTag::Ry,
            GateKind::Rz(_) => GateTag::Rz,
            GateKind::U2(_) => GateTag::U2,
            GateKind::Cx => GateTag::Cx,
            GateKind::Ccx => GateTag::Ccx,
            GateKind::Rccx => GateTag::Rccx,
            GateKind::Cu2(_) => GateTag::Cu2,
        }
    }

    pub fn arity(&self) -> usize {
        match self.tag() {
            GateTag::Cx | GateTag::Cu2 => 2,
            GateTag::Ccx | GateTag::Rccx => 3,
            _ => 1,
        }
    }

    /// Matrix of a single-qubit kind, or the target block of `Cu2`.
    pub fn matrix(&self) -> Option<Mat2f> {
        Some(match self {
            GateKind::X => Mat2f::x(),
            GateKind::H => Mat2f::h(),
            GateKind::T => Mat2f::t(),
            GateKind::Tdg => Mat2f::tdg(),
            GateKind::Rx(t) => Mat2f::rx(*t),
            GateKind::Ry(t) => Mat2f::ry(*t),
            GateKind::Rz(t) => Mat2f::rz(*t),
            GateKind::U2(m) | GateKind::Cu2(m) => *m,
            _ => return None,
        })
    }

    pub fn adjoint(&self) -> GateKind {
        match self {
            GateKind::T => GateKind::Tdg,
            GateKind::Tdg => GateKind::T,
            GateKind::Rx(t) => GateKind::Rx(-t),
            GateKind::Ry(t) => GateKind::Ry(-t),
            GateKind::Rz(t) => GateKind::Rz(-t),
            GateKind::U2(m) => GateKind::U2(m.adjoint()),
            GateKind::Cu2(m) => GateKind::Cu2(m.adjoint()),
            // the Rccx network is its own reversed adjoint
            k => k.clone(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self.tag() {
            GateTag::X => "x",
            GateTag::H => "h",
            GateTag::T => "t",
            GateTag::Tdg => "tdg",
            GateTag::Rx => "rx",
            GateTag::Ry => "ry",
            GateTag::Rz => "rz",
            GateTag::U2 => "u2",
            GateTag::Cx => "cx",
            GateTag::Ccx => "ccx",
            GateTag::Rccx => "rccx",
            GateTag::Cu2 => "cu2",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    /// Controls first, target last.
    pub qubits: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, qubits: Vec<usize>) -> Result<Gate, IrError> {
        if qubits.len() != kind.arity() {
            return Err(IrError::Arity { kind: kind.name(), expected: kind.arity(), got: qubits.len() });
        }
        for (i, q) in qubits.iter().enumerate() {
            if qubits[..i].contains(q) {
                return Err(IrError::RepeatedQubit(*q));
            }
        }
        match &kind {
            GateKind::U2(m) | GateKind::Cu2(m) if !m.is_unitary(UNITARY_TOL) => return Err(IrError::NotUnitary),
            GateKind::Rx(t) | GateKind::Ry(t) | GateKind::Rz(t) if !t.is_finite() => return Err(IrError::BadAngle),
            _ => {}
        }
        Ok(Gate { kind, qubits })
    }

    pub fn adjoint(&self) -> Gate {
        Gate { kind: self.kind.adjoint(), qubits: self.qubits.clone() }
    }

    pub fn target(&self) -> usize {
        *self.qubits.last().unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_checked() {
        assert!(Gate::new(GateKind::Cx, vec![0]).is_err());
        assert!(Gate::new(GateKind::Ccx, vec![0, 1, 1]).is_err());
        assert!(Gate::new(GateKind::Ccx, vec![0, 1, 2]).is_ok());
    }

    #[test]
    fn non_unitary_rejected() {
        let m = Mat2f::identity().scale(num_complex::Complex::new(2.0, 0.0));
        assert_eq!(Gate::new(GateKind::U2(m), vec![0]), Err(IrError::NotUnitary));
    }

    #[test]
    fn adjoints() {
        assert_eq!(GateKind::T.adjoint(), GateKind::Tdg);
        assert_eq!(GateKind::Rz(0.5).adjoint(), GateKind::Rz(-0.5));
        assert_eq!(GateKind::Rccx.adjoint(), GateKind::Rccx);
    }
}
