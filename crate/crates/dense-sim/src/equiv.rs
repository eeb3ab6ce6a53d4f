use crate::matrix::DenseMatrix;
use crate::{Real, SimError};
use num_complex::Complex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivMode {
    Exact,
    GlobalPhase,
    /// `B^dagger A` must be diagonal with unit-modulus entries.
    Diagonal,
    /// Compare on inputs with the listed ancillas at |0>, which must come back to |0>.
    CleanSubspace(Vec<usize>),
    /// `A` must equal `B` up to global phase and act as identity on the listed qubits.
    TensorIdentity(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivReport {
    pub distance: f64,
    pub equivalent: bool,
}

fn phase_of<T: Real>(z: Complex<T>) -> Complex<T> {
    if z.norm() > T::zero() {
        z / z.norm()
    } else {
        Complex::new(T::one(), T::zero())
    }
}

fn largest<T: Real>(m: &DenseMatrix<T>) -> Complex<T> {
    let mut best = Complex::new(T::zero(), T::zero());
    for z in &m.data {
        if z.norm_sqr() > best.norm_sqr() {
            best = *z;
        }
    }
    best
}

fn phase_aligned<T: Real>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> f64 {
    let ph = phase_of(largest(&b.adjoint_mul(a)));
    a.max_abs_diff(&b.scale(ph))
}

fn restrict<T: Real>(m: &DenseMatrix<T>, keep: &[usize]) -> DenseMatrix<T> {
    DenseMatrix::from_fn(keep.len(), |i, j| m.get(keep[i], keep[j]))
}

pub fn equiv<T: Real>(
    a: &DenseMatrix<T>,
    b: &DenseMatrix<T>,
    mode: &EquivMode,
    tol: f64,
) -> Result<EquivReport, SimError> {
    if a.dim != b.dim {
        return Err(SimError::DimensionMismatch { left: a.dim, right: b.dim });
    }
    let n = a.dim;
    let distance = match mode {
        EquivMode::Exact => a.max_abs_diff(b),
        EquivMode::GlobalPhase => phase_aligned(a, b),
        EquivMode::Diagonal => {
            let p = b.adjoint_mul(a);
            let mut d = 0.0f64;
            for i in 0..n {
                for j in 0..n {
                    let z = p.get(i, j).norm().to_f64().unwrap();
                    d = d.max(if i == j { (z - 1.0).abs() } else { z });
                }
            }
            d
        }
        EquivMode::CleanSubspace(anc) => {
            let mask = mask_of(anc, n)?;
            let keep: Vec<usize> = (0..n).filter(|i| i & mask == 0).collect();
            let mut leak = 0.0f64;
            for &j in &keep {
                for i in (0..n).filter(|i| i & mask != 0) {
                    leak = leak.max(a.get(i, j).norm().to_f64().unwrap());
                }
            }
            leak.max(phase_aligned(&restrict(a, &keep), &restrict(b, &keep)))
        }
        EquivMode::TensorIdentity(anc) => {
            let mask = mask_of(anc, n)?;
            let mut defect = 0.0f64;
            for i in 0..n {
                for j in 0..n {
                    let z = a.get(i, j);
                    let v = if i & mask != j & mask {
                        z.norm()
                    } else {
                        // same block seen from the all-zero ancilla sector
                        (z - a.get(i & !mask, j & !mask)).norm()
                    };
                    defect = defect.max(v.to_f64().unwrap());
                }
            }
            defect.max(phase_aligned(a, b))
        }
    };
    Ok(EquivReport { distance, equivalent: distance <= tol })
}

fn mask_of(qubits: &[usize], dim: usize) -> Result<usize, SimError> {
    let mut mask = 0;
    for &q in qubits {
        if (1usize << q) >= dim {
            return Err(SimError::QubitOutOfRange(q));
        }
        mask |= 1 << q;
    }
    Ok(mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unitary_of;
    use circuit_ir::{Circuit, GateKind};

    fn u(c: &Circuit) -> DenseMatrix<f64> {
        unitary_of(c).unwrap()
    }

    #[test]
    fn global_phase_vs_exact() {
        let mut a = Circuit::new(1);
        a.push(GateKind::Rz(0.6), &[0]).unwrap();
        let mut b = Circuit::new(1);
        b.push(GateKind::U2(circuit_ir::Mat2f::phase(0.6)), &[0]).unwrap();
        assert!(!equiv(&u(&a), &u(&b), &EquivMode::Exact, 1e-9).unwrap().equivalent);
        assert!(equiv(&u(&a), &u(&b), &EquivMode::GlobalPhase, 1e-9).unwrap().equivalent);
    }

    #[test]
    fn diagonal_mode_accepts_relative_phase() {
        let mut a = Circuit::new(3);
        a.rccx(0, 1, 2).unwrap();
        let mut b = Circuit::new(3);
        b.ccx(0, 1, 2).unwrap();
        assert!(!equiv(&u(&a), &u(&b), &EquivMode::GlobalPhase, 1e-9).unwrap().equivalent);
        assert!(equiv(&u(&a), &u(&b), &EquivMode::Diagonal, 1e-9).unwrap().equivalent);
    }

    #[test]
    fn clean_subspace_ignores_dirty_inputs() {
        // CX from a clean ancilla does nothing when the ancilla starts at 0
        let mut a = Circuit::new(2);
        a.cx(1, 0).unwrap();
        let b = Circuit::new(2);
        assert!(equiv(&u(&a), &u(&b), &EquivMode::CleanSubspace(vec![1]), 1e-12).unwrap().equivalent);
        assert!(!equiv(&u(&a), &u(&b), &EquivMode::TensorIdentity(vec![1]), 1e-12).unwrap().equivalent);
    }

    #[test]
    fn clean_subspace_catches_leakage() {
        let mut a = Circuit::new(2);
        a.cx(0, 1).unwrap();
        let b = Circuit::new(2);
        let r = equiv(&u(&a), &u(&b), &EquivMode::CleanSubspace(vec![1]), 1e-12).unwrap();
        assert!(!r.equivalent);
    }

    #[test]
    fn dims_must_match() {
        assert!(equiv(&u(&Circuit::new(1)), &u(&Circuit::new(2)), &EquivMode::Exact, 1e-9).is_err());
    }
}
