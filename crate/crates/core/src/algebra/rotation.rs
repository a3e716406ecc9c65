use serde::{Deserialize, Serialize};

use super::generators::ObservableCombo;
use crate::linalg::{expm_hermitian, max_abs, Mat3, Vec3};

/// One factor exp(-iθG) of a rotation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RotationStep {
    pub generator: ObservableCombo,
    pub angle: f64,
}

/// A single-particle unitary together with the ordered exponential factors
/// it was built from: U = exp(-iθ₁G₁) exp(-iθ₂G₂) ⋯
#[derive(Clone, Debug, PartialEq)]
pub struct Su3Rotation {
    single_particle: Mat3,
    generator_log: Vec<RotationStep>,
}

impl Su3Rotation {
    pub fn identity() -> Self {
        Self {
            single_particle: Mat3::identity(),
            generator_log: Vec::new(),
        }
    }

    pub fn from_steps(steps: Vec<RotationStep>) -> Self {
        let single_particle = steps.iter().fold(Mat3::identity(), |acc, s| {
            acc * expm_hermitian(&s.generator.matrix(), s.angle)
        });
        Self {
            single_particle,
            generator_log: steps,
        }
    }

    /// exp(-iθG) for a single generator.
    pub fn about(generator: ObservableCombo, angle: f64) -> Self {
        Self::from_steps(vec![RotationStep { generator, angle }])
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.single_particle
    }

    pub fn steps(&self) -> &[RotationStep] {
        &self.generator_log
    }

    /// self · other (other acts first).
    pub fn then(&self, other: &Su3Rotation) -> Su3Rotation {
        let mut steps = self.generator_log.clone();
        steps.extend_from_slice(&other.generator_log);
        Su3Rotation {
            single_particle: self.single_particle * other.single_particle,
            generator_log: steps,
        }
    }

    pub fn inverse(&self) -> Su3Rotation {
        let steps = self
            .generator_log
            .iter()
            .rev()
            .map(|s| RotationStep {
                generator: s.generator,
                angle: -s.angle,
            })
            .collect();
        Su3Rotation {
            single_particle: self.single_particle.adjoint(),
            generator_log: steps,
        }
    }

    /// U A U† for a single-particle matrix.
    pub fn conjugate_matrix(&self, a: &Mat3) -> Mat3 {
        self.single_particle * a * self.single_particle.adjoint()
    }

    pub fn conjugate(&self, a: &ObservableCombo) -> ObservableCombo {
        ObservableCombo::from_matrix(&self.conjugate_matrix(&a.matrix()))
    }

    pub fn act(&self, v: &Vec3) -> Vec3 {
        self.single_particle * v
    }

    /// max |U†U - 1|.
    pub fn unitarity_residual(&self) -> f64 {
        max_abs(&(self.single_particle.adjoint() * self.single_particle - Mat3::identity()))
    }

    pub fn determinant_modulus(&self) -> f64 {
        self.single_particle.determinant().norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generators::Generator;

    #[test]
    fn test_identity() {
        let u = Su3Rotation::identity();
        assert_eq!(u.unitarity_residual(), 0.0);
        let jx = ObservableCombo::generator(Generator::Jx);
        assert!(u.conjugate(&jx).max_abs_diff(&jx) < 1e-15);
    }

    #[test]
    fn test_product_is_unitary_and_inverse_undoes() {
        let u = Su3Rotation::from_steps(vec![
            RotationStep {
                generator: ObservableCombo::generator(Generator::Jz),
                angle: 0.4,
            },
            RotationStep {
                generator: ObservableCombo::new([0.1, 0.2, -0.3, 0.5, 0.0, 0.7, -0.2, 0.3]),
                angle: -1.3,
            },
        ]);
        assert!(u.unitarity_residual() < 1e-12);
        assert!((u.determinant_modulus() - 1.0).abs() < 1e-12);
        let back = u.then(&u.inverse());
        assert!(max_abs(&(back.matrix() - Mat3::identity())) < 1e-12);
        assert_eq!(back.steps().len(), 4);
    }
}
