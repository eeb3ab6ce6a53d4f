use crate::Su2Error;
use circuit_ir::Mat2f;
use num_complex::Complex;

const DET_TOL: f64 = 1e-10;
const RESIDUAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2Gate(Mat2f);

impl Su2Gate {
    pub fn new(m: Mat2f) -> Result<Self, Su2Error> {
        if !m.is_unitary(DET_TOL) {
            return Err(Su2Error::NotUnitary);
        }
        if (m.det() - Complex::new(1.0, 0.0)).norm() >= DET_TOL {
            return Err(Su2Error::NotSpecial(m.det()));
        }
        Ok(Su2Gate(m))
    }

    pub fn identity() -> Self {
        Su2Gate(Mat2f::identity())
    }

    /// Rescales a U(2) matrix into SU(2) by removing half its determinant phase.
    pub fn from_u2(m: Mat2f) -> Result<Self, Su2Error> {
        if !m.is_unitary(DET_TOL) {
            return Err(Su2Error::NotUnitary);
        }
        let alpha = m.det().arg() / 2.0;
        Self::new(m.scale(Complex::from_polar(1.0, -alpha)))
    }

    pub fn matrix(&self) -> Mat2f {
        self.0
    }

    /// (a, b, c, d) with `W = a I - i (b X + c Y + d Z)`.
    pub fn quaternion(&self) -> [f64; 4] {
        self.0.quaternion()
    }
}

/// Principal square root: eigenphases halved within (-pi, pi]; `-I` maps to `diag(i, -i)`.
pub fn principal_sqrt(w: &Su2Gate) -> Su2Gate {
    let m = w.matrix();
    if m.max_diff(&Mat2f::identity().scale(Complex::new(-1.0, 0.0))) < 1e-12 {
        return Su2Gate(Mat2f::diag(Complex::new(0.0, 1.0), Complex::new(0.0, -1.0)));
    }
    Su2Gate(m.map_eigen(|l| Complex::from_polar(1.0, l.arg() / 2.0)))
}

/// `(X A X A^dagger)^2`.
pub fn conjugation_square(a: &Su2Gate) -> Mat2f {
    let x = Mat2f::x();
    let am = a.matrix();
    let v = x * am * x * am.adjoint();
    v * v
}

pub fn residual(w: &Su2Gate, a: &Su2Gate) -> f64 {
    conjugation_square(a).max_diff(&w.matrix())
}

/// A with `(X A X A^dagger)^2 = W`.
///
/// `X A X A^dagger` never has an X component, so a solution exists only when `W` has none.
/// Among the solutions the one closest to the identity is returned.
pub fn find_conjugating_gate(w: &Su2Gate) -> Result<Su2Gate, Su2Error> {
    let v = principal_sqrt(w);
    let mut best: Option<(f64, Su2Gate)> = None;
    for sign in [1.0, -1.0] {
        let [v0, _, v2, v3] = v.quaternion().map(|z| z * sign);
        let a = ((1.0 + v0) / 2.0).max(0.0).sqrt();
        if a < 1e-12 {
            continue;
        }
        for flip in [1.0, -1.0] {
            let c = flip * v2 / (2.0 * a);
            let d = flip * v3 / (2.0 * a);
            let m = Mat2f::from_quaternion(a, 0.0, c, d);
            // renormalize against rounding before the SU(2) check
            let m = m.scale(Complex::new(1.0 / m.det().norm().sqrt(), 0.0));
            let Ok(g) = Su2Gate::new(m) else { continue };
            if residual(w, &g) < RESIDUAL_TOL {
                let dist = g.matrix().max_diff(&Mat2f::identity());
                if best.is_none_or(|(d0, _)| dist < d0) {
                    best = Some((dist, g));
                }
            }
        }
    }
    best.map(|(_, g)| g).ok_or(Su2Error::NoConjugatingGate { x_component: w.quaternion()[1] })
}

/// `Rz(phi)` such that `Rz(phi)^dagger W Rz(phi)` has no X component.
pub fn align_to_yz(w: &Su2Gate) -> (Mat2f, Su2Gate) {
    let [_, b, c, _] = w.quaternion();
    if b.abs() < 1e-14 {
        return (Mat2f::identity(), *w);
    }
    let phi0 = b.atan2(c);
    let mut best = (f64::INFINITY, Mat2f::identity(), *w);
    for phi in [phi0, -phi0, phi0 + std::f64::consts::PI, -phi0 + std::f64::consts::PI] {
        let s = Mat2f::rz(phi);
        let m = s.adjoint() * w.matrix() * s;
        let x = m.quaternion()[1].abs();
        if x < best.0 {
            best = (x, s, Su2Gate(m));
        }
    }
    (best.1, best.2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_gives_identity() {
        let a = find_conjugating_gate(&Su2Gate::identity()).unwrap();
        assert!(a.matrix().max_diff(&Mat2f::identity()) < 1e-12);
    }

    #[test]
    fn rz_gives_quarter_angle() {
        for beta in [0.3, -1.2, 2.9] {
            let a = find_conjugating_gate(&Su2Gate::new(Mat2f::rz(beta)).unwrap()).unwrap();
            assert!(a.matrix().max_diff(&Mat2f::rz(-beta / 4.0)) < 1e-12, "beta {beta}");
        }
    }

    #[test]
    fn x_component_has_no_solution() {
        let w = Su2Gate::new(Mat2f::rx(0.5)).unwrap();
        assert!(matches!(find_conjugating_gate(&w), Err(Su2Error::NoConjugatingGate { .. })));
    }

    #[test]
    fn minus_identity_root() {
        let w = Su2Gate::new(Mat2f::identity().scale(Complex::new(-1.0, 0.0))).unwrap();
        let v = principal_sqrt(&w).matrix();
        assert!(v.max_diff(&Mat2f::diag(Complex::new(0.0, 1.0), Complex::new(0.0, -1.0))) < 1e-15);
        assert!(find_conjugating_gate(&w).is_ok());
    }

    #[test]
    fn alignment_removes_x() {
        let w = Su2Gate::new(Mat2f::rx(0.7) * Mat2f::ry(0.2)).unwrap();
        let (s, wp) = align_to_yz(&w);
        assert!(wp.quaternion()[1].abs() < 1e-12);
        assert!((s * wp.matrix() * s.adjoint()).max_diff(&w.matrix()) < 1e-12);
    }

    #[test]
    fn determinant_checked() {
        assert!(matches!(Su2Gate::new(Mat2f::x()), Err(Su2Error::NotSpecial(_))));
        assert!(Su2Gate::from_u2(Mat2f::x()).is_ok());
    }
}
