//! Small dense helpers shared by the algebra and dynamics modules.

use nalgebra::{Matrix3, SymmetricEigen, Vector3};
use num_complex::Complex64;

pub type C64 = Complex64;
/// Single-particle operator in the (m = 1, 0, -1) basis.
pub type Mat3 = Matrix3<C64>;
pub type Vec3 = Vector3<C64>;

pub const I: C64 = C64 { re: 0.0, im: 1.0 };

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn commutator(a: &Mat3, b: &Mat3) -> Mat3 {
    a * b - b * a
}

/// Frobenius norm.
pub fn fnorm(m: &Mat3) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn max_abs(m: &Mat3) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn hermiticity_deviation(m: &Mat3) -> f64 {
    max_abs(&(m - m.adjoint()))
}

/// exp(-iθG) for Hermitian G, through its eigendecomposition.
pub fn expm_hermitian(g: &Mat3, theta: f64) -> Mat3 {
    let herm = (g + g.adjoint()).scale(0.5);
    let eig = SymmetricEigen::new(herm);
    let v = eig.eigenvectors;
    let phases = Matrix3::from_diagonal(&Vector3::from_iterator(
        eig.eigenvalues.iter().map(|&l| (-I * theta * l).exp()),
    ));
    v * phases * v.adjoint()
}

/// Largest |eigenvalue| of a Hermitian 3×3 matrix.
pub fn spectral_radius_hermitian(g: &Mat3) -> f64 {
    let herm = (g + g.adjoint()).scale(0.5);
    SymmetricEigen::new(herm)
        .eigenvalues
        .iter()
        .fold(0.0, |acc: f64, l| acc.max(l.abs()))
}
