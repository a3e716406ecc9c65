use std::io::{self, Write};
use std::sync::Arc;

use statrs::function::factorial::ln_factorial;

use super::basis::FockBasis;
use crate::error::{Error, Result};
use crate::linalg::{Vec3, C64};

const SPINOR_TOL: f64 = 1e-12;

/// Single-particle state (ζ₁, ζ₀, ζ₋₁).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor {
    zeta: [C64; 3],
}

impl Spinor {
    pub fn new(zeta: [C64; 3]) -> Result<Self> {
        let norm_sq: f64 = zeta.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > SPINOR_TOL {
            return Err(Error::UnnormalizedSpinor { norm_sq });
        }
        Ok(Self { zeta })
    }

    pub fn from_real(zeta: [f64; 3]) -> Result<Self> {
        Self::new(zeta.map(|x| C64::new(x, 0.0)))
    }

    /// Rescales to unit norm. Fails only for the zero vector.
    pub fn normalize(zeta: [C64; 3]) -> Result<Self> {
        let norm_sq: f64 = zeta.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq == 0.0 || !norm_sq.is_finite() {
            return Err(Error::UnnormalizedSpinor { norm_sq });
        }
        let s = 1.0 / norm_sq.sqrt();
        Ok(Self {
            zeta: zeta.map(|z| z * s),
        })
    }

    pub fn from_vec3(v: &Vec3) -> Result<Self> {
        Self::new([v[0], v[1], v[2]])
    }

    /// All particles in m = 0.
    pub fn polar() -> Self {
        Self {
            zeta: [C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
        }
    }

    /// All particles in m = 1.
    pub fn ferro() -> Self {
        Self {
            zeta: [C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
        }
    }

    /// Spin coherent state along +x.
    pub fn x_polarized() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            zeta: [C64::new(0.5, 0.0), C64::new(h, 0.0), C64::new(0.5, 0.0)],
        }
    }

    pub fn zeta(&self) -> [C64; 3] {
        self.zeta
    }

    pub fn as_vec3(&self) -> Vec3 {
        Vec3::new(self.zeta[0], self.zeta[1], self.zeta[2])
    }

    /// |⟨self|other⟩|².
    pub fn fidelity(&self, other: &Spinor) -> f64 {
        self.as_vec3().dotc(&other.as_vec3()).norm_sqr()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ManyBodyState {
    basis: Arc<FockBasis>,
    amplitudes: Vec<C64>,
    /// Set when the state is known to be |ζ⟩^⊗N.
    coherent: Option<Spinor>,
}

impl ManyBodyState {
    pub fn new(basis: Arc<FockBasis>, amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.len() != basis.dim() {
            return Err(Error::BasisMismatch);
        }
        Ok(Self {
            basis,
            amplitudes,
            coherent: None,
        })
    }

    /// Unit vector on one occupation triple.
    pub fn number_state(basis: Arc<FockBasis>, occ: [usize; 3]) -> Result<Self> {
        let idx = basis.index_of(occ).ok_or(Error::BasisMismatch)?;
        let mut amplitudes = vec![C64::new(0.0, 0.0); basis.dim()];
        amplitudes[idx] = C64::new(1.0, 0.0);
        Self::new(basis, amplitudes)
    }

    /// The spinor ζ if this state was built as a coherent state.
    pub fn coherent_spinor(&self) -> Option<&Spinor> {
        self.coherent.as_ref()
    }

    /// Same amplitudes without the coherent-state tag.
    pub fn forget_structure(mut self) -> Self {
        self.coherent = None;
        self
    }

    pub fn basis(&self) -> &Arc<FockBasis> {
        &self.basis
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amplitudes
    }

    pub fn n_particles(&self) -> usize {
        self.basis.n_particles()
    }

    pub fn amplitude(&self, occ: [usize; 3]) -> C64 {
        self.basis
            .index_of(occ)
            .map_or(C64::new(0.0, 0.0), |i| self.amplitudes[i])
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &ManyBodyState) -> Result<C64> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch);
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Largest entrywise difference after removing the relative global phase.
    pub fn distance_mod_phase(&self, other: &ManyBodyState) -> Result<f64> {
        let ov = self.inner(other)?;
        let phase = if ov.norm() > 0.0 {
            ov / ov.norm()
        } else {
            C64::new(1.0, 0.0)
        };
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a * phase - b).norm())
            .fold(0.0, f64::max))
    }

    /// CSV rows `n1,n0,nm1,re,im` with a header line.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "n1,n0,nm1,re,im")?;
        for (occ, a) in self.basis.states().iter().zip(&self.amplitudes) {
            writeln!(w, "{},{},{},{:e},{:e}", occ[0], occ[1], occ[2], a.re, a.im)?;
        }
        Ok(())
    }
}

/// |ζ⟩^⊗N: amplitude √(N!/(n₁!n₀!n₋₁!)) ζ₁^n₁ ζ₀^n₀ ζ₋₁^n₋₁, assembled in log
/// space so that large N does not overflow.
pub fn coherent_state(basis: &Arc<FockBasis>, s: &Spinor) -> ManyBodyState {
    let n = basis.n_particles() as u64;
    let zeta = s.zeta();
    let log_mod = zeta.map(|z| z.norm().ln());
    let arg = zeta.map(|z| z.arg());
    let ln_n = ln_factorial(n);
    let amplitudes = basis
        .states()
        .iter()
        .map(|occ| {
            let mut log_amp = 0.5 * ln_n;
            let mut phase = 0.0;
            for m in 0..3 {
                let k = occ[m];
                if k == 0 {
                    continue;
                }
                if zeta[m].norm() == 0.0 {
                    return C64::new(0.0, 0.0);
                }
                log_amp += k as f64 * log_mod[m] - 0.5 * ln_factorial(k as u64);
                phase += k as f64 * arg[m];
            }
            C64::from_polar(log_amp.exp(), phase)
        })
        .collect();
    ManyBodyState {
        basis: Arc::clone(basis),
        amplitudes,
        coherent: Some(*s),
    }
}
