//! The eight su(3) generators of a spin-1 particle in the magnetic-sublevel
//! basis (m = 1, 0, -1), and real observables expanded over them.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use nalgebra::Matrix3;
use serde::{Deserialize, Serialize};

use crate::linalg::{c, Mat3, I};

/// Generator labels in basis order Λ₁…Λ₈.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Jx,
    Jy,
    Jz,
    Qxy,
    Qyz,
    Qzx,
    Dxy,
    Y,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::Jx,
        Generator::Jy,
        Generator::Jz,
        Generator::Qxy,
        Generator::Qyz,
        Generator::Qzx,
        Generator::Dxy,
        Generator::Y,
    ];

    /// Zero-based position in the basis.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Jx => "Jx",
            Generator::Jy => "Jy",
            Generator::Jz => "Jz",
            Generator::Qxy => "Qxy",
            Generator::Qyz => "Qyz",
            Generator::Qzx => "Qzx",
            Generator::Dxy => "Dxy",
            Generator::Y => "Y",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// A Hermitian, traceless 3×3 generator matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorMatrix(pub Mat3);

impl GeneratorMatrix {
    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }
}

/// Ordered basis Λ₁…Λ₈ = (Jx, Jy, Jz, Qxy, Qyz, Qzx, Dxy, Y), normalized so
/// that tr(ΛᵢΛⱼ) = 2δᵢⱼ.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorBasis {
    generators: [GeneratorMatrix; 8],
}

impl GeneratorBasis {
    pub fn from_matrices(generators: [Mat3; 8]) -> Self {
        Self {
            generators: generators.map(GeneratorMatrix),
        }
    }

    /// Shared instance of the standard basis.
    pub fn standard() -> &'static GeneratorBasis {
        static BASIS: OnceLock<GeneratorBasis> = OnceLock::new();
        BASIS.get_or_init(build_generator_basis)
    }

    /// Λᵢ for a zero-based index.
    pub fn get(&self, i: usize) -> &Mat3 {
        &self.generators[i].0
    }

    pub fn generator(&self, g: Generator) -> &Mat3 {
        self.get(g.index())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Mat3> {
        self.generators.iter().map(|g| &g.0)
    }

    /// Gram matrix tr(ΛᵢΛⱼ).
    pub fn gram(&self) -> [[f64; 8]; 8] {
        let mut g = [[0.0; 8]; 8];
        for (i, row) in g.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (self.get(i) * self.get(j)).trace().re;
            }
        }
        g
    }

    /// Largest entrywise deviation of the Gram matrix from 2δᵢⱼ.
    pub fn orthonormality_deviation(&self) -> f64 {
        let g = self.gram();
        let mut worst = 0.0f64;
        for (i, row) in g.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let target = if i == j { 2.0 } else { 0.0 };
                worst = worst.max((v - target).abs());
            }
        }
        worst
    }

    /// Complex expansion coefficients cᵢ = tr(Λᵢ M)/2 of the traceless part of M.
    pub fn complex_coefficients(&self, m: &Mat3) -> [num_complex::Complex64; 8] {
        std::array::from_fn(|i| (self.get(i) * m).trace() * 0.5)
    }
}

/// Builds Λ₁…Λ₈ from their matrix representations.
pub fn build_generator_basis() -> GeneratorBasis {
    let z = c(0.0, 0.0);
    let r = |x: f64| c(x, 0.0);
    let s2 = std::f64::consts::FRAC_1_SQRT_2;
    let s3 = 1.0 / 3f64.sqrt();

    let jx = Matrix3::new(z, r(s2), z, r(s2), z, r(s2), z, r(s2), z);
    let jy = Matrix3::new(z, r(-1.0), z, r(1.0), z, r(-1.0), z, r(1.0), z) * (I * s2);
    let jz = Matrix3::new(r(1.0), z, z, z, z, z, z, z, r(-1.0));
    let qxy = Matrix3::new(z, z, r(-1.0), z, z, z, r(1.0), z, z) * I;
    let qyz = Matrix3::new(z, r(-1.0), z, r(1.0), z, r(1.0), z, r(-1.0), z) * (I * s2);
    let qzx = Matrix3::new(z, r(s2), z, r(s2), z, r(-s2), z, r(-s2), z);
    let dxy = Matrix3::new(z, z, r(1.0), z, z, z, r(1.0), z, z);
    let y = Matrix3::new(r(s3), z, z, z, r(-2.0 * s3), z, z, z, r(s3));

    GeneratorBasis::from_matrices([jx, jy, jz, qxy, qyz, qzx, dxy, y])
}

/// Spin-1 matrix J_μ.
pub fn spin_matrix(axis: Axis) -> Mat3 {
    let b = GeneratorBasis::standard();
    match axis {
        Axis::X => *b.generator(Generator::Jx),
        Axis::Y => *b.generator(Generator::Jy),
        Axis::Z => *b.generator(Generator::Jz),
    }
}

/// A real observable Σ cᵢΛᵢ + offset·1.
///
/// The identity part commutes with everything; it only matters for
/// expectation values of non-traceless observables such as N_xx.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObservableCombo {
    pub coeffs: [f64; 8],
    pub identity_offset: f64,
}

impl ObservableCombo {
    pub const ZERO: ObservableCombo = ObservableCombo {
        coeffs: [0.0; 8],
        identity_offset: 0.0,
    };

    pub fn new(coeffs: [f64; 8]) -> Self {
        Self {
            coeffs,
            identity_offset: 0.0,
        }
    }

    pub fn generator(g: Generator) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[g.index()] = 1.0;
        Self::new(coeffs)
    }

    /// Hermitian projection of a 3×3 matrix onto the basis plus identity.
    pub fn from_matrix(m: &Mat3) -> Self {
        let b = GeneratorBasis::standard();
        let cs = b.complex_coefficients(m);
        Self {
            coeffs: cs.map(|z| z.re),
            identity_offset: m.trace().re / 3.0,
        }
    }

    pub fn matrix(&self) -> Mat3 {
        let b = GeneratorBasis::standard();
        let mut m = Mat3::identity() * c(self.identity_offset, 0.0);
        for (k, &ck) in self.coeffs.iter().enumerate() {
            if ck != 0.0 {
                m += b.get(k) * c(ck, 0.0);
            }
        }
        m
    }

    /// Euclidean norm of the coefficient vector (identity part excluded).
    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// tr(AB)/2 restricted to the traceless parts.
    pub fn dot(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Scales so that Σcᵢ² = 1; the offset scales along with the coefficients.
    pub fn normalized(&self) -> Self {
        let n = self.norm();
        if n == 0.0 {
            *self
        } else {
            *self * (1.0 / n)
        }
    }

    pub fn traceless(&self) -> Self {
        Self::new(self.coeffs)
    }

    /// Largest coefficient difference, offset included.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(
                (self.identity_offset - other.identity_offset).abs(),
                f64::max,
            )
    }
}

impl Add for ObservableCombo {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| self.coeffs[i] + rhs.coeffs[i]),
            identity_offset: self.identity_offset + rhs.identity_offset,
        }
    }
}

impl Sub for ObservableCombo {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ObservableCombo {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

impl Mul<f64> for ObservableCombo {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self {
            coeffs: self.coeffs.map(|x| x * s),
            identity_offset: self.identity_offset * s,
        }
    }
}

/// Nematic tensor component N_{μν} = (J_μJ_ν + J_νJ_μ)/2 expanded over the basis.
pub fn nematic_tensor(mu: Axis, nu: Axis) -> ObservableCombo {
    let a = spin_matrix(mu);
    let b = spin_matrix(nu);
    ObservableCombo::from_matrix(&((a * b + b * a) * c(0.5, 0.0)))
}
