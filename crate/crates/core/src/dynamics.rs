//! SU(3) rotations of many-body states, the angle conditions that map a
//! reference spinor onto an arbitrary one, and one-axis twisting.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    classify_triad, conjugate_triad, Generator, ObservableCombo, RotationStep, SqueezeType,
    StructureConstants, Su2Triad, Su3Rotation,
};
use crate::error::{Error, Result};
use crate::fock::{coherent_state, expectation, second_quantize, FockBasis, ManyBodyState, Spinor};
use crate::linalg::{expm_hermitian, spectral_radius_hermitian, Mat3, C64};
use crate::optimize::nelder_mead;

pub const DEFAULT_SEED: u64 = 0x5eed;
const FIDELITY_TARGET: f64 = 1e-10;
const FIDELITY_FLOOR: f64 = 1e-8;
const EXTRA_STARTS: usize = 16;
const TAYLOR_CUTOFF: f64 = 1e-13;

fn wrap(a: f64) -> f64 {
    let mut x = a.rem_euclid(2.0 * PI);
    if x > PI {
        x -= 2.0 * PI;
    }
    if x <= -PI {
        x += 2.0 * PI;
    }
    x
}

/// (α, β, γ, φ), each wrapped into (-π, π].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EulerAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub phi: f64,
}

impl EulerAngles {
    pub fn new(alpha: f64, beta: f64, gamma: f64, phi: f64) -> Self {
        Self {
            alpha: wrap(alpha),
            beta: wrap(beta),
            gamma: wrap(gamma),
            phi: wrap(phi),
        }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0)
    }

    fn from_slice(x: &[f64]) -> Self {
        Self::new(x[0], x[1], x[2], x[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.alpha, self.beta, self.gamma, self.phi]
    }
}

fn euler_rotation(a: EulerAngles, last: Generator) -> Su3Rotation {
    let step = |g, angle| RotationStep {
        generator: ObservableCombo::generator(g),
        angle,
    };
    Su3Rotation::from_steps(vec![
        step(Generator::Jz, a.alpha),
        step(Generator::Jy, a.beta),
        step(Generator::Jz, a.gamma),
        step(last, a.phi),
    ])
}

/// e^{-iαJz} e^{-iβJy} e^{-iγJz} e^{-iφQyz}
pub fn rotation_u1(angles: EulerAngles) -> Su3Rotation {
    euler_rotation(angles, Generator::Qyz)
}

/// e^{-iαJz} e^{-iβJy} e^{-iγJz} e^{-iφQxy}
pub fn rotation_u2(angles: EulerAngles) -> Su3Rotation {
    euler_rotation(angles, Generator::Qxy)
}

pub fn rotation_for(angles: EulerAngles, family: SqueezeType) -> Su3Rotation {
    match family {
        SqueezeType::Type1 => rotation_u1(angles),
        SqueezeType::Type2 => rotation_u2(angles),
    }
}

/// Reference spinor of each family: R_y(π/2)e₁ for type 1 and
/// e^{-i(π/4)Qxy}e₁ for type 2.
pub fn reference_spinor(family: SqueezeType) -> Spinor {
    let (g, theta) = match family {
        SqueezeType::Type1 => (Generator::Jy, FRAC_PI_2),
        SqueezeType::Type2 => (Generator::Qxy, FRAC_PI_4),
    };
    let u = expm_hermitian(&ObservableCombo::generator(g).matrix(), theta);
    Spinor::normalize([u[(0, 0)], u[(1, 0)], u[(2, 0)]]).expect("unitary column")
}

/// {Jx, Jy, Jz} or {Dxy, Qxy, Jz}.
pub fn reference_triad(family: SqueezeType) -> Su2Triad {
    let g = ObservableCombo::generator;
    let members = match family {
        SqueezeType::Type1 => [g(Generator::Jx), g(Generator::Jy), g(Generator::Jz)],
        SqueezeType::Type2 => [g(Generator::Dxy), g(Generator::Qxy), g(Generator::Jz)],
    };
    classify_triad(members, StructureConstants::standard()).expect("reference triads close")
}

/// Spinor reached from the family's reference by the rotation with these
/// angles.
pub fn mapped_reference(angles: EulerAngles, family: SqueezeType) -> Spinor {
    let v = rotation_for(angles, family).act(&reference_spinor(family).as_vec3());
    Spinor::normalize([v[0], v[1], v[2]]).expect("unitary image")
}

pub fn angle_fidelity(s: &Spinor, angles: EulerAngles, family: SqueezeType) -> f64 {
    s.fidelity(&mapped_reference(angles, family))
}

/// Angles mapping the reference spinor onto `s` (up to global phase).
///
/// Multi-start Nelder-Mead on 1 - fidelity: the sixteen corners of the lattice
/// {-π/2, π/2}⁴ plus the origin, then seeded random starts if none of those
/// reached the target.
pub fn solve_angles(s: &Spinor, family: SqueezeType, seed: u64) -> Result<EulerAngles> {
    let target = *s;
    let reference = reference_spinor(family).as_vec3();
    let cost = |x: &[f64]| {
        let v = rotation_for(EulerAngles::from_slice(x), family).act(&reference);
        1.0 - target.as_vec3().dotc(&v).norm_sqr()
    };

    let mut starts: Vec<[f64; 4]> = vec![[0.0; 4]];
    for corner in 0..16u32 {
        starts.push(std::array::from_fn(|d| {
            if corner >> d & 1 == 1 {
                FRAC_PI_2
            } else {
                -FRAC_PI_2
            }
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..EXTRA_STARTS {
        starts.push(std::array::from_fn(|_| rng.random_range(-PI..PI)));
    }

    let mut best: Option<(f64, [f64; 4])> = None;
    for x0 in starts {
        let m = nelder_mead(cost, &x0, 0.4, 1e-18, 4000);
        let x: [f64; 4] = [m.x[0], m.x[1], m.x[2], m.x[3]];
        if best.is_none_or(|(v, _)| m.value < v) {
            best = Some((m.value, x));
        }
        if m.value < FIDELITY_TARGET {
            break;
        }
    }
    let (value, x) = best.expect("at least one start");
    if value > FIDELITY_FLOOR {
        return Err(Error::NoConvergence {
            fidelity: 1.0 - value,
        });
    }
    Ok(EulerAngles::from_slice(&x))
}

/// The family's reference triad conjugated by U₁ or U₂.
pub fn rotated_triad(angles: EulerAngles, family: SqueezeType) -> Su2Triad {
    conjugate_triad(&reference_triad(family), &rotation_for(angles, family))
}

/// Many-body lift of a single-particle rotation. Coherent states are mapped in
/// closed form; anything else goes through [`apply_rotation_generic`].
pub fn apply_rotation(state: &ManyBodyState, u: &Su3Rotation) -> Result<ManyBodyState> {
    match state.coherent_spinor() {
        Some(s) => {
            let v = u.act(&s.as_vec3());
            let rotated = Spinor::normalize([v[0], v[1], v[2]])?;
            Ok(coherent_state(state.basis(), &rotated))
        }
        None => apply_rotation_generic(state, u),
    }
}

/// Applies each factor e^{-iθĜ} of the rotation log by a Taylor series on the
/// vector. Factors act right to left.
pub fn apply_rotation_generic(state: &ManyBodyState, u: &Su3Rotation) -> Result<ManyBodyState> {
    let basis = state.basis();
    let mut psi = state.amplitudes().to_vec();
    for step in u.steps().iter().rev() {
        psi = expm_action(basis, &step.generator.matrix(), step.angle, psi)?;
    }
    ManyBodyState::new(Arc::clone(basis), psi)
}

/// e^{-iθĜ}ψ for the many-body lift Ĝ of a Hermitian kernel g, split into
/// 2^k substeps so that each has |θ|·‖Ĝ‖ ≤ 1.
pub fn expm_action(
    basis: &Arc<FockBasis>,
    g: &Mat3,
    theta: f64,
    mut psi: Vec<C64>,
) -> Result<Vec<C64>> {
    let op = second_quantize(basis, g)?;
    let bound = basis.n_particles() as f64 * spectral_radius_hermitian(g) * theta.abs();
    let mut substeps = 1usize;
    while (substeps as f64) < bound {
        substeps *= 2;
    }
    let h = C64::new(0.0, -theta / substeps as f64);
    let mut term = vec![C64::new(0.0, 0.0); psi.len()];
    let mut next = vec![C64::new(0.0, 0.0); psi.len()];
    for _ in 0..substeps {
        term.copy_from_slice(&psi);
        let scale = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for k in 1..200 {
            op.apply_into(&term, &mut next);
            let f = h / k as f64;
            let mut size = 0.0;
            for (t, n) in term.iter_mut().zip(&next) {
                *t = n * f;
                size += t.norm_sqr();
            }
            for (p, t) in psi.iter_mut().zip(&term) {
                *p += t;
            }
            if size.sqrt() < TAYLOR_CUTOFF * scale {
                break;
            }
        }
    }
    Ok(psi)
}

/// χt grid together with the single-particle kernel whose many-body square is
/// the twisting Hamiltonian.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistingSchedule {
    chi_t_values: Vec<f64>,
    twist_kernel: Mat3,
}

impl TwistingSchedule {
    pub fn new(chi_t_values: Vec<f64>, twist_kernel: Mat3) -> Result<Self> {
        if chi_t_values.is_empty() {
            return Err(Error::InvalidSchedule("no time points".into()));
        }
        if chi_t_values.iter().any(|t| !t.is_finite() || *t < 0.0) {
            return Err(Error::InvalidSchedule(
                "χt values must be finite and non-negative".into(),
            ));
        }
        if chi_t_values.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidSchedule(
                "χt values must be strictly increasing".into(),
            ));
        }
        Ok(Self {
            chi_t_values,
            twist_kernel,
        })
    }

    /// Twisting about Jz, the co-rotated frame used by every squeezing run.
    pub fn jz(chi_t_values: Vec<f64>) -> Result<Self> {
        Self::new(
            chi_t_values,
            ObservableCombo::generator(Generator::Jz).matrix(),
        )
    }

    pub fn chi_t_values(&self) -> &[f64] {
        &self.chi_t_values
    }

    pub fn twist_kernel(&self) -> &Mat3 {
        &self.twist_kernel
    }
}

/// Precomputed e^{-iχt k²} propagator for a diagonal twist.
pub struct DiagonalTwist {
    initial: Vec<C64>,
    eigenvalues: Vec<f64>,
    basis: Arc<FockBasis>,
}

impl DiagonalTwist {
    pub fn new(state: &ManyBodyState, kernel: &Mat3) -> Result<Self> {
        let op = second_quantize(state.basis(), kernel)?;
        if !op.is_diagonal() {
            return Err(Error::KernelNotDiagonal);
        }
        Ok(Self {
            initial: state.amplitudes().to_vec(),
            eigenvalues: op.diagonal().iter().map(|z| z.re).collect(),
            basis: Arc::clone(state.basis()),
        })
    }

    pub fn at(&self, chi_t: f64) -> ManyBodyState {
        let amps = self
            .initial
            .iter()
            .zip(&self.eigenvalues)
            .map(|(a, k)| a * C64::from_polar(1.0, -chi_t * k * k))
            .collect();
        ManyBodyState::new(Arc::clone(&self.basis), amps).expect("same basis")
    }
}

/// State at each χt under H = χĴ², Ĵ the lift of the schedule's kernel.
pub fn one_axis_evolve(
    state: &ManyBodyState,
    schedule: &TwistingSchedule,
) -> Result<Vec<ManyBodyState>> {
    let twist = DiagonalTwist::new(state, schedule.twist_kernel())?;
    Ok(schedule
        .chi_t_values()
        .par_iter()
        .map(|&t| twist.at(t))
        .collect())
}

/// ⟨X₁⟩, ⟨X₂⟩, ⟨X₃⟩ of a triad.
pub fn polarization(state: &ManyBodyState, triad: &Su2Triad) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    for (o, m) in out.iter_mut().zip(&triad.members) {
        *o = expectation(state, &second_quantize(state.basis(), &m.matrix())?)?;
    }
    Ok(out)
}

/// Index of the triad member carrying the largest |expectation|.
pub fn polarized_axis(state: &ManyBodyState, triad: &Su2Triad) -> Result<usize> {
    let p = polarization(state, triad)?;
    Ok((0..3)
        .max_by(|&a, &b| p[a].abs().total_cmp(&p[b].abs()))
        .expect("three members"))
}
