use num_complex::Complex;
use num_traits::Float;
use std::ops::Mul;

/// Dense 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2<T> {
    pub m: [[Complex<T>; 2]; 2],
}

fn c<T: Float>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

fn lit<T: Float>(x: f64) -> T {
    T::from(x).unwrap()
}

impl<T: Float> Mat2<T> {
    pub fn new(a: Complex<T>, b: Complex<T>, cc: Complex<T>, d: Complex<T>) -> Self {
        Self { m: [[a, b], [cc, d]] }
    }

    pub fn identity() -> Self {
        let (o, z) = (T::one(), T::zero());
        Self::new(c(o, z), c(z, z), c(z, z), c(o, z))
    }

    pub fn x() -> Self {
        let (o, z) = (T::one(), T::zero());
        Self::new(c(z, z), c(o, z), c(o, z), c(z, z))
    }

    pub fn y() -> Self {
        let (o, z) = (T::one(), T::zero());
        Self::new(c(z, z), c(z, -o), c(z, o), c(z, z))
    }

    pub fn z() -> Self {
        Self::diag(Complex::new(T::one(), T::zero()), Complex::new(-T::one(), T::zero()))
    }

    pub fn h() -> Self {
        let s = T::one() / lit::<T>(2.0).sqrt();
        let z = T::zero();
        Self::new(c(s, z), c(s, z), c(s, z), c(-s, z))
    }

    pub fn s() -> Self {
        Self::phase(lit::<T>(std::f64::consts::FRAC_PI_2))
    }

    pub fn t() -> Self {
        Self::phase(lit::<T>(std::f64::consts::FRAC_PI_4))
    }

    pub fn tdg() -> Self {
        Self::phase(-lit::<T>(std::f64::consts::FRAC_PI_4))
    }

    pub fn diag(a: Complex<T>, d: Complex<T>) -> Self {
        let z = Complex::new(T::zero(), T::zero());
        Self::new(a, z, z, d)
    }

    /// diag(1, e^{i phi})
    pub fn phase(phi: T) -> Self {
        Self::diag(Complex::new(T::one(), T::zero()), Complex::from_polar(T::one(), phi))
    }

    pub fn rx(theta: T) -> Self {
        let h = theta / lit(2.0);
        let (s, co) = (h.sin(), h.cos());
        let z = T::zero();
        Self::new(c(co, z), c(z, -s), c(z, -s), c(co, z))
    }

    pub fn ry(theta: T) -> Self {
        let h = theta / lit(2.0);
        let (s, co) = (h.sin(), h.cos());
        let z = T::zero();
        Self::new(c(co, z), c(-s, z), c(s, z), c(co, z))
    }

    pub fn rz(theta: T) -> Self {
        let h = theta / lit(2.0);
        Self::diag(Complex::from_polar(T::one(), -h), Complex::from_polar(T::one(), h))
    }

    /// a I - i (b X + c Y + d Z)
    pub fn from_quaternion(a: T, b: T, cy: T, d: T) -> Self {
        Self::new(c(a, -d), c(-cy, -b), c(cy, -b), c(a, d))
    }

    /// Inverse of [`Mat2::from_quaternion`] for matrices in SU(2).
    pub fn quaternion(&self) -> [T; 4] {
        let two = lit::<T>(2.0);
        let [[p, q], [r, s]] = self.m;
        let a = (p.re + s.re) / two;
        let d = (s.im - p.im) / two;
        let b = -(q.im + r.im) / two;
        let cy = (r.re - q.re) / two;
        [a, b, cy, d]
    }

    pub fn adjoint(&self) -> Self {
        let [[a, b], [cc, d]] = self.m;
        Self::new(a.conj(), cc.conj(), b.conj(), d.conj())
    }

    pub fn det(&self) -> Complex<T> {
        let [[a, b], [cc, d]] = self.m;
        a * d - b * cc
    }

    pub fn trace(&self) -> Complex<T> {
        self.m[0][0] + self.m[1][1]
    }

    pub fn scale(&self, k: Complex<T>) -> Self {
        let [[a, b], [cc, d]] = self.m;
        Self::new(a * k, b * k, cc * k, d * k)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_diff(&self, other: &Self) -> T {
        let mut best = T::zero();
        for i in 0..2 {
            for j in 0..2 {
                best = best.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        best
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        (*self * self.adjoint()).max_diff(&Self::identity()) < tol
    }

    pub fn is_special_unitary(&self, tol: T) -> bool {
        self.is_unitary(tol) && (self.det() - Complex::new(T::one(), T::zero())).norm() < tol
    }

    pub fn cast<U: Float>(&self) -> Mat2<U> {
        let f = |z: Complex<T>| Complex::new(U::from(z.re).unwrap(), U::from(z.im).unwrap());
        let [[a, b], [cc, d]] = self.m;
        Mat2::new(f(a), f(b), f(cc), f(d))
    }

    /// Eigen-decomposition of a unitary: returns (eigenvalues, columns of eigenvectors).
    pub fn unitary_eigen(&self) -> ([Complex<T>; 2], Self) {
        let [[a, b], [cc, d]] = self.m;
        let two = lit::<T>(2.0);
        let tr = a + d;
        let disc = ((a - d) * (a - d) + b * cc * two * two).sqrt();
        let l1 = (tr + disc) / two;
        let l2 = (tr - disc) / two;
        let eps = lit::<T>(1e-13);
        let one = Complex::new(T::one(), T::zero());
        let zero = Complex::new(T::zero(), T::zero());
        if b.norm() < eps && cc.norm() < eps {
            return ([a, d], Self::identity());
        }
        let vec_for = |l: Complex<T>| {
            let v = if b.norm() >= cc.norm() { [b, l - a] } else { [l - d, cc] };
            let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
            if n < eps {
                [one, zero]
            } else {
                [v[0] / n, v[1] / n]
            }
        };
        let v1 = vec_for(l1);
        // orthogonal complement keeps the basis unitary even for near-degenerate spectra
        let v2 = [-v1[1].conj(), v1[0].conj()];
        let vecs = Self::new(v1[0], v2[0], v1[1], v2[1]);
        let l2 = {
            let w = *self * vecs;
            let proj = v2[0].conj() * w.m[0][1] + v2[1].conj() * w.m[1][1];
            if proj.norm() > eps {
                proj
            } else {
                l2
            }
        };
        ([l1, l2], vecs)
    }

    /// Applies `f` to the eigenvalues of a unitary.
    pub fn map_eigen(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        let (ls, v) = self.unitary_eigen();
        let d = Self::diag(f(ls[0]), f(ls[1]));
        v * d * v.adjoint()
    }
}

impl<T: Float> Mul for Mat2<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut r = [[Complex::new(T::zero(), T::zero()); 2]; 2];
        for (i, row) in r.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.m[i][0] * o.m[0][j] + self.m[i][1] * o.m[1][j];
            }
        }
        Self { m: r }
    }
}
