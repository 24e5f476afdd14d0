//! Standard single-qubit unitaries.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::Matrix2;

use super::pauli::Axis;
use crate::C64;

pub type Gate2 = Matrix2<C64>;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

pub fn identity() -> Gate2 {
    Gate2::identity()
}

pub fn hadamard() -> Gate2 {
    let s = C64::new(FRAC_1_SQRT_2, 0.0);
    Gate2::new(s, s, s, -s)
}

pub fn pauli(axis: Axis) -> Gate2 {
    match axis {
        Axis::X => Gate2::new(ZERO, ONE, ONE, ZERO),
        Axis::Y => Gate2::new(ZERO, -I, I, ZERO),
        Axis::Z => Gate2::new(ONE, ZERO, ZERO, -ONE),
    }
}

/// `e^{−i(θ/2)σ^axis}`
pub fn rotation(axis: Axis, theta: f64) -> Gate2 {
    let (s, c) = (theta / 2.0).sin_cos();
    identity() * C64::new(c, 0.0) - pauli(axis) * C64::new(0.0, s)
}

/// `‖U†U − I‖_max`
pub fn unitarity_residual(u: &Gate2) -> f64 {
    let d = u.adjoint() * u - identity();
    d.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
