//! Root diagram of su(3) with respect to the Cartan pair (Jz, Y).

use std::f64::consts::PI;

use nalgebra::{Complex, SMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use super::generators::{Generator, GeneratorBasis};
use super::structure::{adjoint_representation, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::{commutator, fnorm, Mat3, C64};

/// Mixing weight for the generic Cartan element Jz + w·Y; any value that keeps
/// the six values α₁ + wα₂ distinct works.
const CARTAN_MIX: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootVector {
    pub alpha1: f64,
    pub alpha2: f64,
}

impl RootVector {
    pub fn new(alpha1: f64, alpha2: f64) -> Self {
        Self { alpha1, alpha2 }
    }

    pub fn length(&self) -> f64 {
        self.alpha1.hypot(self.alpha2)
    }

    /// Polar angle in [0, 2π).
    pub fn angle(&self) -> f64 {
        self.alpha2.atan2(self.alpha1).rem_euclid(2.0 * PI)
    }

    pub fn distance(&self, other: &RootVector) -> f64 {
        (self.alpha1 - other.alpha1).hypot(self.alpha2 - other.alpha2)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.length() < tol
    }

    /// The six nonzero su(3) roots in increasing polar angle, starting at (2, 0).
    pub fn exact_roots() -> [RootVector; 6] {
        let s3 = 3f64.sqrt();
        [
            RootVector::new(2.0, 0.0),
            RootVector::new(1.0, s3),
            RootVector::new(-1.0, s3),
            RootVector::new(-2.0, 0.0),
            RootVector::new(-1.0, -s3),
            RootVector::new(1.0, -s3),
        ]
    }
}

impl std::ops::Add for RootVector {
    type Output = RootVector;
    fn add(self, rhs: RootVector) -> RootVector {
        RootVector::new(self.alpha1 + rhs.alpha1, self.alpha2 + rhs.alpha2)
    }
}

/// Ladder operator E_α with [Jz, E] = α₁E and [Y, E] = α₂E.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenOperator {
    pub matrix: Mat3,
    pub root: RootVector,
}

impl EigenOperator {
    /// Max entrywise residual of the two Cartan eigen-equations.
    pub fn eigen_residual(&self) -> f64 {
        let b = GeneratorBasis::standard();
        let jz = b.generator(Generator::Jz);
        let y = b.generator(Generator::Y);
        let r1 = commutator(jz, &self.matrix) - self.matrix * C64::new(self.root.alpha1, 0.0);
        let r2 = commutator(y, &self.matrix) - self.matrix * C64::new(self.root.alpha2, 0.0);
        crate::linalg::max_abs(&r1).max(crate::linalg::max_abs(&r2))
    }
}

/// The six nonzero roots with their eigen-operators, ordered by polar angle.
#[derive(Clone, Debug)]
pub struct RootDiagram {
    pub entries: Vec<EigenOperator>,
}

impl RootDiagram {
    pub fn roots(&self) -> Vec<RootVector> {
        self.entries.iter().map(|e| e.root).collect()
    }

    /// Eigen-operator whose root lies within 1e-6 of `root`.
    pub fn find(&self, root: RootVector) -> Option<&EigenOperator> {
        self.entries.iter().find(|e| e.root.distance(&root) < 1e-6)
    }

    /// Position of `root` in `entries`.
    pub fn position(&self, root: RootVector) -> Option<usize> {
        self.entries
            .iter()
            .position(|e| e.root.distance(&root) < 1e-6)
    }

    pub fn operator(&self, alpha1: f64, alpha2: f64) -> &EigenOperator {
        self.find(RootVector::new(alpha1, alpha2))
            .unwrap_or_else(|| panic!("({alpha1}, {alpha2}) is not a root"))
    }

    /// Whether `r` is one of the diagram's nonzero roots.
    pub fn is_root(&self, r: RootVector) -> bool {
        self.find(r).is_some()
    }
}

/// Simultaneously diagonalizes i·ad(Jz) and i·ad(Y) and returns the six
/// nonzero roots with eigen-operators normalized to tr(E†E) = 2 and phased so
/// that the largest-magnitude entry is real positive.
pub fn root_diagram(f: &StructureConstants) -> Result<RootDiagram> {
    let ad3 = adjoint_representation(f, Generator::Jz.index());
    let ad8 = adjoint_representation(f, Generator::Y.index());
    let h3: SMatrix<C64, 8, 8> = ad3.map(|x| Complex::new(0.0, x));
    let h8: SMatrix<C64, 8, 8> = ad8.map(|x| Complex::new(0.0, x));
    let mixed = h3 + h8 * Complex::new(CARTAN_MIX, 0.0);
    let eig = SymmetricEigen::new(mixed);

    let mut picked: Vec<(f64, usize)> = eig
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, l)| l.abs() > 0.25)
        .map(|(i, &l)| (l, i))
        .collect();
    if picked.len() != 6 {
        return Err(Error::DegenerateCartan);
    }
    picked.sort_by(|a, b| a.0.total_cmp(&b.0));
    if picked.windows(2).any(|w| (w[1].0 - w[0].0).abs() < 1e-3) {
        return Err(Error::DegenerateCartan);
    }

    let basis = GeneratorBasis::standard();
    let mut entries = Vec::with_capacity(6);
    for (_, col) in picked {
        let v = eig.eigenvectors.column(col).into_owned();
        let norm = v.norm();
        let alpha1 = (v.adjoint() * h3 * v)[(0, 0)].re / (norm * norm);
        let alpha2 = (v.adjoint() * h8 * v)[(0, 0)].re / (norm * norm);

        let mut matrix = Mat3::zeros();
        for k in 0..8 {
            matrix += basis.get(k) * v[k];
        }
        // tr(E†E) = 2 Σ|cₖ|²
        matrix *= C64::new(1.0 / norm, 0.0);
        let pivot = matrix
            .iter()
            .copied()
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .expect("3x3");
        matrix *= pivot.conj() / pivot.norm();

        let op = EigenOperator {
            matrix,
            root: RootVector::new(alpha1, alpha2),
        };
        if op.eigen_residual() > 1e-8 {
            return Err(Error::DegenerateCartan);
        }
        entries.push(op);
    }
    entries.sort_by(|a, b| a.root.angle().total_cmp(&b.root.angle()));
    Ok(RootDiagram { entries })
}

/// [E_α, E_β] expanded over {E_γ} ∪ {Jz, Y}.
#[derive(Clone, Debug, PartialEq)]
pub enum LadderCommutator {
    Zero,
    Expansion {
        /// Coefficients on the diagram's eigen-operators, in diagram order.
        ladder: [C64; 6],
        /// Coefficients on (Jz, Y).
        cartan: [C64; 2],
    },
}

impl LadderCommutator {
    pub fn is_zero(&self) -> bool {
        matches!(self, LadderCommutator::Zero)
    }
}

/// Expands [a, b]. The expansion basis is orthogonal under tr(X†Y), so each
/// coefficient is a single projection.
pub fn ladder_commutator(
    diagram: &RootDiagram,
    a: &EigenOperator,
    b: &EigenOperator,
) -> LadderCommutator {
    let comm = commutator(&a.matrix, &b.matrix);
    if fnorm(&comm) < 1e-10 {
        return LadderCommutator::Zero;
    }
    let project = |m: &Mat3| (m.adjoint() * comm).trace() / (m.adjoint() * m).trace();
    let ladder: [C64; 6] = std::array::from_fn(|i| project(&diagram.entries[i].matrix));
    let basis = GeneratorBasis::standard();
    let cartan = [
        project(basis.generator(Generator::Jz)),
        project(basis.generator(Generator::Y)),
    ];
    LadderCommutator::Expansion { ladder, cartan }
}
