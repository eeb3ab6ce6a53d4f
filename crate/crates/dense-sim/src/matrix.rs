use crate::state::apply_circuit;
use crate::{Real, SimError, UNITARY_CAP};
use circuit_ir::Circuit;
use num_complex::Complex;
use rayon::prelude::*;

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    pub dim: usize,
    pub data: Vec<Complex<T>>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix { dim, data: vec![Complex::new(T::zero(), T::zero()); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.data[i * dim + j] = f(i, j);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex<T>) {
        self.data[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data.iter().zip(&other.data).map(|(a, b)| (*a - *b).norm().to_f64().unwrap()).fold(0.0, f64::max)
    }

    pub fn scale(&self, k: Complex<T>) -> Self {
        DenseMatrix { dim: self.dim, data: self.data.iter().map(|z| *z * k).collect() }
    }

    /// `self^dagger * other`, skipping structural zeros of `self`.
    pub fn adjoint_mul(&self, other: &Self) -> Self {
        let n = self.dim;
        let tiny = T::from(1e-300).unwrap();
        let mut cols: Vec<Vec<(usize, Complex<T>)>> = vec![Vec::new(); n];
        for k in 0..n {
            for (i, v) in self.row(k).iter().enumerate() {
                if v.norm_sqr() > tiny {
                    cols[i].push((k, v.conj()));
                }
            }
        }
        let data: Vec<Complex<T>> = cols
            .par_iter()
            .flat_map_iter(|col| {
                let mut row = vec![Complex::new(T::zero(), T::zero()); n];
                for &(k, w) in col {
                    for (r, a) in row.iter_mut().zip(other.row(k)) {
                        *r = *r + w * *a;
                    }
                }
                row
            })
            .collect();
        DenseMatrix { dim: n, data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.adjoint().adjoint_mul(other)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.adjoint_mul(self).max_abs_diff(&Self::identity(self.dim)) < tol
    }
}

/// Full unitary of `circuit`; column j is the circuit applied to basis state j.
pub fn unitary_of<T: Real>(circuit: &Circuit) -> Result<DenseMatrix<T>, SimError> {
    let n = circuit.num_qubits();
    if n > UNITARY_CAP {
        return Err(SimError::TooManyQubits { n, cap: UNITARY_CAP });
    }
    let dim = 1usize << n;
    let cols: Vec<Vec<Complex<T>>> = (0..dim)
        .into_par_iter()
        .map(|j| {
            let mut amps = vec![Complex::new(T::zero(), T::zero()); dim];
            amps[j] = Complex::new(T::one(), T::zero());
            apply_circuit(&mut amps, circuit);
            amps
        })
        .collect();
    Ok(DenseMatrix::from_fn(dim, |i, j| cols[j][i]))
}

/// `op` on the qubits listed in `qubits` (first listed is the least significant), identity elsewhere.
pub fn embed<T: Real>(op: &DenseMatrix<T>, qubits: &[usize], num_qubits: usize) -> DenseMatrix<T> {
    let dim = 1usize << num_qubits;
    let sub = |i: usize| qubits.iter().enumerate().fold(0, |acc, (k, &q)| acc | (((i >> q) & 1) << k));
    let mask: usize = qubits.iter().map(|q| 1usize << q).sum();
    DenseMatrix::from_fn(dim, |i, j| {
        if i & !mask != j & !mask {
            Complex::new(T::zero(), T::zero())
        } else {
            op.get(sub(i), sub(j))
        }
    })
}

/// Matrix of C^n(G_1 (x) ... (x) G_m): controls, then one 2x2 gate per target qubit.
pub fn controlled_product<T: Real>(
    num_qubits: usize,
    controls: &[usize],
    targets: &[(usize, circuit_ir::Mat2<T>)],
) -> DenseMatrix<T> {
    let dim = 1usize << num_qubits;
    let cmask: usize = controls.iter().map(|q| 1usize << q).sum();
    let tmask: usize = targets.iter().map(|(q, _)| 1usize << q).sum();
    DenseMatrix::from_fn(dim, |i, j| {
        let zero = Complex::new(T::zero(), T::zero());
        if i & !tmask != j & !tmask {
            return zero;
        }
        if j & cmask != cmask {
            return if i == j { Complex::new(T::one(), T::zero()) } else { zero };
        }
        targets.iter().fold(Complex::new(T::one(), T::zero()), |acc, (q, g)| acc * g.m[(i >> q) & 1][(j >> q) & 1])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use circuit_ir::Mat2f;

    #[test]
    fn cx_matrix_is_permutation() {
        let mut c = Circuit::new(2);
        c.cx(0, 1).unwrap();
        let u = unitary_of::<f64>(&c).unwrap();
        let mut want = DenseMatrix::<f64>::zeros(4);
        for (i, j) in [(0, 0), (3, 1), (2, 2), (1, 3)] {
            want.set(i, j, Complex::new(1.0, 0.0));
        }
        assert_eq!(u, want);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(unitary_of::<f64>(&Circuit::new(14)), Err(SimError::TooManyQubits { .. })));
    }

    #[test]
    fn controlled_product_matches_cu2() {
        let g = Mat2f::ry(0.8);
        let mut c = Circuit::new(2);
        c.cu2(g, 1, 0).unwrap();
        let u = unitary_of::<f64>(&c).unwrap();
        let want = controlled_product(2, &[1], &[(0, g)]);
        assert!(u.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn product_associates() {
        let mut c = Circuit::new(2);
        c.h(0).unwrap();
        c.cx(0, 1).unwrap();
        let u = unitary_of::<f64>(&c).unwrap();
        assert!(u.is_unitary(1e-12));
        let uu = u.mul(&u);
        let mut c2 = c.clone();
        c2.append(&c).unwrap();
        assert!(uu.max_abs_diff(&unitary_of(&c2).unwrap()) < 1e-12);
    }
}
