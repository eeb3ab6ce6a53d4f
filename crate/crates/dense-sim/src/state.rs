use crate::{Real, SimError, STATE_CAP};
use circuit_ir::{Circuit, Gate, GateKind, Mat2};
use num_complex::Complex;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    pub num_qubits: usize,
    pub amps: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self, SimError> {
        if num_qubits > STATE_CAP {
            return Err(SimError::TooManyQubits { n: num_qubits, cap: STATE_CAP });
        }
        let mut amps = vec![Complex::new(T::zero(), T::zero()); 1 << num_qubits];
        amps[index] = Complex::new(T::one(), T::zero());
        Ok(StateVector { num_qubits, amps })
    }

    pub fn from_amps(amps: Vec<Complex<T>>) -> Result<Self, SimError> {
        let dim = amps.len();
        if !dim.is_power_of_two() {
            return Err(SimError::DimensionMismatch { left: dim, right: dim.next_power_of_two() });
        }
        let norm: T = amps.iter().map(|a| a.norm_sqr()).fold(T::zero(), |a, b| a + b);
        if (norm - T::one()).abs() > T::from(1e-9).unwrap() {
            return Err(SimError::NotNormalized);
        }
        Ok(StateVector { num_qubits: dim.trailing_zeros() as usize, amps })
    }

    pub fn apply(&mut self, circuit: &Circuit) -> Result<(), SimError> {
        if circuit.num_qubits() != self.num_qubits {
            return Err(SimError::DimensionMismatch { left: circuit.num_qubits(), right: self.num_qubits });
        }
        apply_circuit(&mut self.amps, circuit);
        Ok(())
    }

    /// Largest entrywise distance to `other` after aligning global phase on the largest overlap term.
    pub fn distance_up_to_phase(&self, other: &Self) -> f64 {
        let overlap = self
            .amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + b.conj() * a);
        let ph = if overlap.norm() > T::zero() { overlap / overlap.norm() } else { Complex::new(T::one(), T::zero()) };
        self.amps.iter().zip(&other.amps).map(|(a, b)| (*a - *b * ph).norm().to_f64().unwrap()).fold(0.0, f64::max)
    }
}

pub(crate) fn apply_circuit<T: Real>(amps: &mut [Complex<T>], circuit: &Circuit) {
    for g in circuit.gates() {
        apply_gate(amps, g);
    }
}

pub(crate) fn apply_gate<T: Real>(amps: &mut [Complex<T>], g: &Gate) {
    let q = &g.qubits;
    match &g.kind {
        GateKind::Cx => controlled_x(amps, 1 << q[0], q[1]),
        GateKind::Ccx => controlled_x(amps, (1 << q[0]) | (1 << q[1]), q[2]),
        GateKind::Rccx => rccx(amps, q[0], q[1], q[2]),
        GateKind::T | GateKind::Tdg => {
            let m: Mat2<T> = g.kind.matrix().unwrap().cast();
            phase_1(amps, q[0], m.m[1][1]);
        }
        GateKind::Cu2(m) => controlled_1q(amps, 1 << q[0], q[1], &m.cast()),
        k => {
            let m: Mat2<T> = k.matrix().unwrap().cast();
            controlled_1q(amps, 0, q[0], &m);
        }
    }
}

/// RCCX is a Toffoli times a diagonal, so each column has a single nonzero entry.
fn rccx_monomial<T: Real>() -> ([usize; 8], [Complex<T>; 8]) {
    let h: Mat2<T> = Mat2::h();
    let tt = Mat2::<T>::t().m[1][1];
    let td = Mat2::<T>::tdg().m[1][1];
    let mut perm = [0; 8];
    let mut ph = [Complex::new(T::zero(), T::zero()); 8];
    for k in 0..8 {
        let mut v = [Complex::new(T::zero(), T::zero()); 8];
        v[k] = Complex::new(T::one(), T::zero());
        controlled_1q(&mut v, 0, 2, &h);
        phase_1(&mut v, 2, tt);
        controlled_x(&mut v, 0b10, 2);
        phase_1(&mut v, 2, td);
        controlled_x(&mut v, 0b01, 2);
        phase_1(&mut v, 2, tt);
        controlled_x(&mut v, 0b10, 2);
        phase_1(&mut v, 2, td);
        controlled_1q(&mut v, 0, 2, &h);
        let j = (0..8).max_by(|&x, &y| v[x].norm_sqr().partial_cmp(&v[y].norm_sqr()).unwrap()).unwrap();
        perm[k] = j;
        ph[k] = v[j];
    }
    (perm, ph)
}

fn rccx<T: Real>(amps: &mut [Complex<T>], a: usize, b: usize, t: usize) {
    let (perm, ph) = rccx_monomial::<T>();
    let bits = [1usize << a, 1 << b, 1 << t];
    let offs: [usize; 8] = std::array::from_fn(|k| (0..3).filter(|&i| k >> i & 1 == 1).map(|i| bits[i]).sum());
    let mask = bits[0] | bits[1] | bits[2];
    let mut buf = [Complex::new(T::zero(), T::zero()); 8];
    for base in 0..amps.len() {
        if base & mask != 0 {
            continue;
        }
        for k in 0..8 {
            buf[k] = amps[base + offs[k]];
        }
        for k in 0..8 {
            amps[base + offs[perm[k]]] = buf[k] * ph[k];
        }
    }
}

fn phase_1<T: Real>(amps: &mut [Complex<T>], t: usize, ph: Complex<T>) {
    let tb = 1usize << t;
    for hi in (0..amps.len()).step_by(2 * tb) {
        for a in &mut amps[hi + tb..hi + 2 * tb] {
            *a = *a * ph;
        }
    }
}

fn controlled_x<T: Real>(amps: &mut [Complex<T>], cmask: usize, t: usize) {
    let tb = 1usize << t;
    for hi in (0..amps.len()).step_by(2 * tb) {
        for i in hi..hi + tb {
            if i & cmask == cmask {
                amps.swap(i, i | tb);
            }
        }
    }
}

fn controlled_1q<T: Real>(amps: &mut [Complex<T>], cmask: usize, t: usize, m: &Mat2<T>) {
    let tb = 1usize << t;
    let [[a, b], [c, d]] = m.m;
    for hi in (0..amps.len()).step_by(2 * tb) {
        for i in hi..hi + tb {
            if i & cmask == cmask {
                let j = i | tb;
                let (x0, x1) = (amps[i], amps[j]);
                amps[i] = a * x0 + b * x1;
                amps[j] = c * x0 + d * x1;
            }
        }
    }
}
