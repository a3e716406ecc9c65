//! su(2) subalgebras of su(3): closure test, the canonical triads read off
//! the root diagram, and conjugation by SU(3) rotations.

use serde::{Deserialize, Serialize};

use super::generators::{Generator, ObservableCombo};
use super::roots::RootDiagram;
use super::rotation::Su3Rotation;
use super::structure::StructureConstants;
use crate::error::{Error, Result};
use crate::linalg::{commutator, Mat3, C64, I};

/// Tolerance on a commutator leaving the span of the triad.
const CLOSURE_TOL: f64 = 1e-8;

/// Squeezing class of an su(2) subalgebra: λ = 1 (spin-like) or λ = 2
/// (spin-nematic).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum SqueezeType {
    Type1,
    Type2,
}

impl SqueezeType {
    pub fn from_lambda(lambda: f64) -> Option<Self> {
        if (lambda - 1.0).abs() < 1e-8 {
            Some(SqueezeType::Type1)
        } else if (lambda - 2.0).abs() < 1e-8 {
            Some(SqueezeType::Type2)
        } else {
            None
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(SqueezeType::Type1),
            2 => Some(SqueezeType::Type2),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            SqueezeType::Type1 => 1,
            SqueezeType::Type2 => 2,
        }
    }

    pub fn lambda(self) -> f64 {
        self.number() as f64
    }
}

impl From<SqueezeType> for u8 {
    fn from(t: SqueezeType) -> u8 {
        t.number()
    }
}

impl TryFrom<u8> for SqueezeType {
    type Error = String;
    fn try_from(n: u8) -> std::result::Result<Self, String> {
        SqueezeType::from_number(n).ok_or_else(|| format!("squeeze type must be 1 or 2, got {n}"))
    }
}

/// Orthonormal observables with [X₁, X₂] = i·s·λ X₃ cyclically, where
/// s = `orientation` = ±1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Su2Triad {
    pub members: [ObservableCombo; 3],
    pub lambda: f64,
    pub orientation: f64,
}

impl Su2Triad {
    pub fn squeeze_type(&self) -> Option<SqueezeType> {
        SqueezeType::from_lambda(self.lambda)
    }

    /// Largest coefficient difference between corresponding members.
    pub fn max_member_diff(&self, other: &[ObservableCombo; 3]) -> f64 {
        self.members
            .iter()
            .zip(other)
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(0.0, f64::max)
    }
}

/// Gram-Schmidt under the trace inner product, then checks cyclic closure.
pub fn classify_triad(members: [ObservableCombo; 3], f: &StructureConstants) -> Result<Su2Triad> {
    let mut ortho: Vec<ObservableCombo> = Vec::with_capacity(3);
    for m in members {
        let mut v = m.traceless();
        for q in &ortho {
            v = v - *q * v.dot(q);
        }
        if v.norm() < 1e-10 {
            return Err(Error::DependentTriad);
        }
        ortho.push(v.normalized());
    }
    let x = [ortho[0], ortho[1], ortho[2]];

    let mut values = [0.0; 3];
    let mut residual = 0.0f64;
    for (slot, (a, b, c)) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)].into_iter().enumerate() {
        let br = f.bracket(&x[a], &x[b]);
        let along = br.dot(&x[c]);
        residual = residual.max((br - x[c] * along).norm());
        values[slot] = along;
    }
    if residual > CLOSURE_TOL {
        return Err(Error::NotClosed { residual });
    }
    let lambda = values[0].abs();
    if lambda < CLOSURE_TOL {
        return Err(Error::Abelian);
    }
    Ok(Su2Triad {
        members: x,
        lambda,
        orientation: values[0].signum(),
    })
}

fn hermitian_parts(raising: &Mat3) -> [ObservableCombo; 3] {
    let lowering = raising.adjoint();
    let x1 = raising + lowering;
    let x2 = (raising - lowering) * (-I);
    let x3 = commutator(raising, &lowering);
    [x1, x2, x3].map(|m| ObservableCombo::from_matrix(&m).normalized())
}

/// su(2) triad generated by a raising operator R: {R + R†, -i(R - R†), [R, R†]},
/// each normalized.
pub fn triad_from_raising(raising: &Mat3, f: &StructureConstants) -> Result<Su2Triad> {
    classify_triad(hermitian_parts(raising), f)
}

/// The canonical triads: three type-2 triads from opposite-root pairs and six
/// type-1 triads from raising operators E_α ± E_β with α, β adjacent roots.
pub fn enumerate_canonical_triads(
    diagram: &RootDiagram,
    f: &StructureConstants,
) -> Result<Vec<Su2Triad>> {
    let s3 = 3f64.sqrt();
    let mut out = Vec::with_capacity(9);

    // E_α with α ∈ {(2,0), (1,√3), (1,-√3)} and its conjugate E_{-α} = E_α†.
    for root in [(2.0, 0.0), (1.0, s3), (1.0, -s3)] {
        let e = diagram.operator(root.0, root.1);
        let lowering = e.matrix.adjoint();
        let x1 = ObservableCombo::from_matrix(&(e.matrix + lowering)).normalized();
        let x2 = ObservableCombo::from_matrix(&((e.matrix - lowering) * (-I))).normalized();
        // α·H / |α|
        let cartan = ObservableCombo::generator(Generator::Jz) * e.root.alpha1
            + ObservableCombo::generator(Generator::Y) * e.root.alpha2;
        out.push(classify_triad([x1, x2, cartan.normalized()], f)?);
    }

    // adjacent pairs whose sum is again a root
    let pairs = [
        ((1.0, s3), (1.0, -s3)),
        ((2.0, 0.0), (-1.0, s3)),
        ((1.0, s3), (-2.0, 0.0)),
    ];
    for (a, b) in pairs {
        let ea = diagram.operator(a.0, a.1).matrix;
        let eb = diagram.operator(b.0, b.1).matrix;
        for sign in [1.0, -1.0] {
            out.push(triad_from_raising(&(ea + eb * C64::new(sign, 0.0)), f)?);
        }
    }
    Ok(out)
}

/// Replaces each member X by U X U†.
pub fn conjugate_triad(t: &Su2Triad, u: &Su3Rotation) -> Su2Triad {
    Su2Triad {
        members: t.members.map(|m| u.conjugate(&m)),
        lambda: t.lambda,
        orientation: t.orientation,
    }
}

/// Relabels spatial axes cyclically (x, y, z) → (y, z, x) on the spin and
/// nematic components of an observable.
pub fn relabel_axes_cyclic(a: &ObservableCombo) -> ObservableCombo {
    // the rotation by 2π/3 about (1,1,1) maps x→y→z→x
    let axis = (ObservableCombo::generator(Generator::Jx)
        + ObservableCombo::generator(Generator::Jy)
        + ObservableCombo::generator(Generator::Jz))
        * (1.0 / 3f64.sqrt());
    Su3Rotation::about(axis, 2.0 * std::f64::consts::PI / 3.0).conjugate(a)
}
