use crate::ApproxError;
use circuit_ir::Mat2;
use num_complex::Complex;
use num_traits::{Float, FloatConst};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxParams {
    pub epsilon: f64,
    pub theta: f64,
    pub alpha: f64,
    pub n_b: usize,
    pub n_e: usize,
}

/// `(theta, alpha)` with `U = e^{i alpha} V`, `V` in SU(2) with eigenvalues `e^{-+i theta/2}`.
pub fn su2_angle<T: Float + FloatConst>(u: &Mat2<T>) -> Result<(T, T), ApproxError> {
    if !u.is_unitary(T::from(1e-10).unwrap()) {
        return Err(ApproxError::NotUnitary);
    }
    let two = T::one() + T::one();
    let mut alpha = u.det().arg() / two;
    let v = u.scale(Complex::from_polar(T::one(), -alpha));
    let [a, b, c, d] = v.quaternion();
    let mut theta = two * (b * b + c * c + d * d).sqrt().atan2(a);
    // V = -I: fold the sign into the phase so theta stays below 2 pi
    if theta > two * T::PI() - T::from(1e-12).unwrap() {
        theta = T::zero();
        alpha = alpha + T::PI();
    }
    Ok((theta, alpha))
}

pub fn nb_from_epsilon(theta: f64, epsilon: f64) -> Result<usize, ApproxError> {
    if !(epsilon > 0.0 && epsilon < 2.0) {
        return Err(ApproxError::Epsilon(epsilon));
    }
    if theta.abs() < 1e-15 {
        return Err(ApproxError::ThetaZero);
    }
    let bound = (1.0 - epsilon * epsilon / 2.0).acos();
    let nb = (theta.abs() / bound).log2().ceil();
    Ok(if nb < 1.0 { 1 } else { nb as usize })
}

/// Principal `2^j`-th root: each eigenphase in (-pi, pi] is divided by `2^j`.
pub fn root_gate<T: Float>(u: &Mat2<T>, j: u32) -> Mat2<T> {
    if j == 0 {
        return *u;
    }
    let k = T::from(2f64.powi(j as i32)).unwrap();
    u.map_eigen(|l| Complex::from_polar(T::one(), l.arg() / k))
}
