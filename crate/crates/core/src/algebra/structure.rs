//! Structure constants f_ij^k of the generator basis and the adjoint
//! representation built from them.

use nalgebra::SMatrix;

use super::generators::{GeneratorBasis, ObservableCombo};
use crate::error::{Error, Result};
use crate::linalg::{commutator, fnorm, I};

pub type AdjointMatrix = SMatrix<f64, 8, 8>;

/// [Λᵢ, Λⱼ] = i Σₖ f_ij^k Λₖ, indices zero-based.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    f: [[[f64; 8]; 8]; 8],
}

impl StructureConstants {
    /// Structure constants of the standard basis, computed once.
    pub fn standard() -> &'static StructureConstants {
        static F: std::sync::OnceLock<StructureConstants> = std::sync::OnceLock::new();
        F.get_or_init(|| {
            structure_constants(GeneratorBasis::standard()).expect("standard basis is orthonormal")
        })
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.f[i][j][k]
    }

    /// Largest violation of total antisymmetry over all 8³ index triples.
    pub fn antisymmetry_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    let v = self.f[i][j][k];
                    worst = worst
                        .max((v + self.f[j][i][k]).abs())
                        .max((v + self.f[i][k][j]).abs())
                        .max((v + self.f[k][j][i]).abs());
                }
            }
        }
        worst
    }

    /// Largest Jacobi-identity residual over all 8⁴ index quadruples.
    pub fn jacobi_residual(&self) -> f64 {
        let f = &self.f;
        let mut worst = 0.0f64;
        for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    for m in 0..8 {
                        let s: f64 = (0..8)
                            .map(|l| {
                                f[i][j][l] * f[l][k][m]
                                    + f[j][k][l] * f[l][i][m]
                                    + f[k][i][l] * f[l][j][m]
                            })
                            .sum();
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    /// max over pairs of ‖[Λᵢ, Λⱼ] - i Σₖ f_ij^k Λₖ‖_F.
    pub fn reconstruction_residual(&self, basis: &GeneratorBasis) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..8 {
            for j in 0..8 {
                let mut rebuilt = commutator(basis.get(i), basis.get(j));
                for k in 0..8 {
                    rebuilt -= basis.get(k) * (I * self.f[i][j][k]);
                }
                worst = worst.max(fnorm(&rebuilt));
            }
        }
        worst
    }

    /// Coefficients C of [A, B] = iC for traceless real combinations A, B.
    pub fn bracket(&self, a: &ObservableCombo, b: &ObservableCombo) -> ObservableCombo {
        let mut out = [0.0; 8];
        for i in 0..8 {
            if a.coeffs[i] == 0.0 {
                continue;
            }
            for j in 0..8 {
                let w = a.coeffs[i] * b.coeffs[j];
                if w == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += w * self.f[i][j][k];
                }
            }
        }
        ObservableCombo::new(out)
    }
}

/// f_ij^k = -(i/2) tr([Λᵢ, Λⱼ] Λₖ), valid for a basis with tr(ΛᵢΛⱼ) = 2δᵢⱼ.
#[allow(clippy::needless_range_loop)]
pub fn structure_constants(basis: &GeneratorBasis) -> Result<StructureConstants> {
    let deviation = basis.orthonormality_deviation();
    if deviation > 1e-8 {
        return Err(Error::NonOrthogonalBasis { deviation });
    }
    let mut f = [[[0.0; 8]; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let comm = commutator(basis.get(i), basis.get(j));
            for k in 0..8 {
                f[i][j][k] = ((comm * basis.get(k)).trace() * (-0.5 * I)).re;
            }
        }
    }
    Ok(StructureConstants { f })
}

/// ad(Λᵢ) with entries {ad(Λᵢ)}ʲₖ = f_ik^j (row j, column k); `i` is zero-based.
///
/// Acting on a coefficient vector c, [Λᵢ, Σ cₖΛₖ] = i Σⱼ (ad c)ⱼ Λⱼ, so the
/// root eigenvalues are those of i·ad.
pub fn adjoint_representation(f: &StructureConstants, i: usize) -> AdjointMatrix {
    AdjointMatrix::from_fn(|j, k| f.get(i, k, j))
}
