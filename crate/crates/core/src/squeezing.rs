//! Transverse quadrature variances of twisted states, their optimization over
//! direction and time, and the closed-form asymptotic limits.

use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{ObservableCombo, SqueezeType, Su2Triad};
use crate::dynamics::{
    reference_spinor, reference_triad, solve_angles, DiagonalTwist, EulerAngles, TwistingSchedule,
    DEFAULT_SEED,
};
use crate::error::{Error, Result};
use crate::fock::{
    build_basis, coherent_state, covariance_matrix, expectation, second_quantize, ManyBodyState,
    SecondQuantizedOperator, Spinor,
};
use crate::optimize::golden_section;

pub const DEFAULT_POINTS: usize = 200;
pub const WINDOW_LO: f64 = 1e-3;
pub const WINDOW_HI: f64 = 10.0;
const ISOTROPY_TOL: f64 = 1e-12;

/// Δ = sin ν·X₂ + cos ν·X₃.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub nu: f64,
    pub axis2: ObservableCombo,
    pub axis3: ObservableCombo,
}

impl Quadrature {
    pub fn combo(&self) -> ObservableCombo {
        self.axis2 * self.nu.sin() + self.axis3 * self.nu.cos()
    }
}

/// Variance extrema of the transverse plane at one instant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransverseStats {
    pub min_variance: f64,
    pub max_variance: f64,
    pub nu: f64,
}

/// Minimum of s²a + c²b + 2scd over ν with (s, c) = (sin ν, cos ν), written as
/// (a+b)/2 + R cos(2ν - φ₀).
pub fn minimize_quadratic_form(a: f64, b: f64, d: f64) -> TransverseStats {
    let mean = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let r = half.hypot(d);
    let nu = if r <= ISOTROPY_TOL * mean.abs().max(1.0) {
        0.0
    } else {
        let mut nu = 0.5 * (d.atan2(half) + PI);
        if nu > FRAC_PI_2 {
            nu -= PI;
        }
        if nu <= -FRAC_PI_2 {
            nu += PI;
        }
        nu
    };
    TransverseStats {
        min_variance: mean - r,
        max_variance: mean + r,
        nu,
    }
}

/// Second-quantized triad members on one basis, built once per run.
pub struct TransverseProbe {
    ops: [SecondQuantizedOperator; 3],
    lambda: f64,
}

impl TransverseProbe {
    pub fn new(state: &ManyBodyState, triad: &Su2Triad) -> Result<Self> {
        let b = state.basis();
        Ok(Self {
            ops: [
                second_quantize(b, &triad.members[0].matrix())?,
                second_quantize(b, &triad.members[1].matrix())?,
                second_quantize(b, &triad.members[2].matrix())?,
            ],
            lambda: triad.lambda,
        })
    }

    pub fn stats(&self, state: &ManyBodyState) -> Result<TransverseStats> {
        let c = covariance_matrix(state, &[&self.ops[1], &self.ops[2]])?;
        Ok(minimize_quadratic_form(c[(0, 0)], c[(1, 1)], c[(0, 1)]))
    }

    pub fn longitudinal(&self, state: &ManyBodyState) -> Result<f64> {
        expectation(state, &self.ops[0])
    }

    /// (λ⟨X₁⟩/2)², the lower bound on the product of conjugate variances.
    pub fn uncertainty_floor(&self, state: &ManyBodyState) -> Result<f64> {
        Ok((0.5 * self.lambda * self.longitudinal(state)?).powi(2))
    }
}

/// Smallest variance over quadratures sin ν·X₂ + cos ν·X₃ and the ν reaching it.
pub fn transverse_min_variance(state: &ManyBodyState, triad: &Su2Triad) -> Result<(f64, f64)> {
    let s = TransverseProbe::new(state, triad)?.stats(state)?;
    Ok((s.min_variance, s.nu))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SqueezeResult {
    #[serde(rename = "N")]
    pub n_particles: usize,
    #[serde(rename = "type")]
    pub squeeze_type: SqueezeType,
    pub chi_t_opt: f64,
    pub min_variance: f64,
    pub nu_opt: f64,
    /// (χt, minimal variance, ν) per schedule point.
    #[serde(rename = "series")]
    pub variance_series: Vec<[f64; 3]>,
    pub initial_variance: f64,
    pub squeezing_db: f64,
    /// Variance of the quadrature orthogonal to the optimum.
    pub conjugate_variance: f64,
    /// (λ⟨X₁⟩/2)² at the optimum.
    pub uncertainty_floor: f64,
    pub angles: EulerAngles,
}

impl SqueezeResult {
    pub fn write_series_csv<W: std::io::Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "chi_t,min_variance,nu")?;
        for [t, v, nu] in &self.variance_series {
            writeln!(w, "{t:e},{v:e},{nu:e}")?;
        }
        Ok(())
    }
}

/// 200 log-spaced points on [10⁻³, 10]·N^{-2/3}.
pub fn default_schedule(n: usize) -> Vec<f64> {
    let scale = (n.max(1) as f64).powf(-2.0 / 3.0);
    log_schedule(WINDOW_LO * scale, WINDOW_HI * scale, DEFAULT_POINTS)
}

pub fn log_schedule(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if points < 2 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..points)
        .map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp())
        .collect()
}

pub fn run_squeezing(
    n: usize,
    s: &Spinor,
    squeeze_type: SqueezeType,
    schedule: &TwistingSchedule,
) -> Result<SqueezeResult> {
    run_squeezing_seeded(n, s, squeeze_type, schedule, DEFAULT_SEED)
}

/// Twisting run in the co-rotated frame: the angles mapping the reference
/// spinor onto `s` are solved for, then the reference coherent state is
/// evolved about Jz and probed with the reference triad.
pub fn run_squeezing_seeded(
    n: usize,
    s: &Spinor,
    squeeze_type: SqueezeType,
    schedule: &TwistingSchedule,
    seed: u64,
) -> Result<SqueezeResult> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "need at least 2 particles, got {n}"
        )));
    }
    let angles = solve_angles(s, squeeze_type, seed)?;
    let basis = build_basis(n)?;
    let psi0 = coherent_state(&basis, &reference_spinor(squeeze_type));
    let triad = reference_triad(squeeze_type);
    let probe = TransverseProbe::new(&psi0, &triad)?;
    let twist = DiagonalTwist::new(&psi0, schedule.twist_kernel())?;
    let at = |t: f64| probe.stats(&twist.at(t));

    let times = schedule.chi_t_values();
    let stats: Vec<TransverseStats> = times.par_iter().map(|&t| at(t)).collect::<Result<_>>()?;
    let series: Vec<[f64; 3]> = times
        .iter()
        .zip(&stats)
        .map(|(&t, st)| [t, st.min_variance, st.nu])
        .collect();

    let imin = (0..stats.len())
        .min_by(|&a, &b| stats[a].min_variance.total_cmp(&stats[b].min_variance))
        .expect("non-empty schedule");
    if imin == 0 || imin + 1 == stats.len() {
        return Err(Error::ScheduleMiss { chi_t: times[imin] });
    }
    let (t_ref, _) = golden_section(
        |t| at(t).map_or(f64::INFINITY, |st| st.min_variance),
        times[imin - 1],
        times[imin + 1],
        1e-6,
    );
    let (chi_t_opt, best) = {
        let refined = at(t_ref)?;
        if refined.min_variance <= stats[imin].min_variance {
            (t_ref, refined)
        } else {
            (times[imin], stats[imin])
        }
    };

    let initial_variance = at(0.0)?.min_variance;
    let psi_opt = twist.at(chi_t_opt);
    Ok(SqueezeResult {
        n_particles: n,
        squeeze_type,
        chi_t_opt,
        min_variance: best.min_variance,
        nu_opt: best.nu,
        variance_series: series,
        initial_variance,
        squeezing_db: 10.0 * (best.min_variance / initial_variance).log10(),
        conjugate_variance: best.max_variance,
        uncertainty_floor: probe.uncertainty_floor(&psi_opt)?,
        angles,
    })
}

/// Closed-form large-N limits.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticPrediction {
    pub min_variance: f64,
    pub chi_t_opt: f64,
    pub nu: f64,
}

/// Type 1: ⟨Δ²⟩ = (1/4)(9N/4)^{1/3} at χt = (3/(8N⁴))^{1/6}, ν = ½[arctan(Nχt) - χt].
/// Type 2: ⟨Δ²⟩ = (1/2)(9N)^{1/3} at χt = (6/N⁴)^{1/6}, ν = ½[arctan(Nχt) - 2χt].
pub fn asymptotic_prediction(n: usize, squeeze_type: SqueezeType) -> Result<AsymptoticPrediction> {
    if n < 10 {
        return Err(Error::Precondition(format!(
            "asymptotic formulas need N ≥ 10, got {n}"
        )));
    }
    let nf = n as f64;
    let (min_variance, chi_t_opt, shift) = match squeeze_type {
        SqueezeType::Type1 => (
            0.25 * (9.0 * nf / 4.0).cbrt(),
            (3.0 / (8.0 * nf.powi(4))).powf(1.0 / 6.0),
            1.0,
        ),
        SqueezeType::Type2 => (
            0.5 * (9.0 * nf).cbrt(),
            (6.0 / nf.powi(4)).powf(1.0 / 6.0),
            2.0,
        ),
    };
    Ok(AsymptoticPrediction {
        min_variance,
        chi_t_opt,
        nu: 0.5 * ((nf * chi_t_opt).atan() - shift * chi_t_opt),
    })
}

/// |ν_opt - ν_formula| modulo π, for N ≥ 100; `None` below that.
pub fn nu_discrepancy(result: &SqueezeResult) -> Option<f64> {
    if result.n_particles < 100 {
        return None;
    }
    let formula = asymptotic_prediction(result.n_particles, result.squeeze_type).ok()?;
    let d = (result.nu_opt - formula.nu).rem_euclid(PI);
    Some(d.min(PI - d))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingSweep {
    pub results: Vec<SqueezeResult>,
    /// Least-squares slope of ln(min_variance) against ln(N).
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square deviation of the log-log fit.
    pub residual: f64,
}

pub fn sweep_scaling(
    n_list: &[usize],
    squeeze_type: SqueezeType,
    s: &Spinor,
) -> Result<ScalingSweep> {
    sweep_scaling_seeded(n_list, squeeze_type, s, DEFAULT_SEED)
}

pub fn sweep_scaling_seeded(
    n_list: &[usize],
    squeeze_type: SqueezeType,
    s: &Spinor,
    seed: u64,
) -> Result<ScalingSweep> {
    if n_list.len() < 4 {
        return Err(Error::Precondition(format!(
            "sweep needs at least 4 particle numbers, got {}",
            n_list.len()
        )));
    }
    if n_list.iter().any(|&n| n < 20) {
        return Err(Error::Precondition(
            "every particle number must be at least 20".into(),
        ));
    }
    if n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Precondition(
            "particle numbers must be strictly ascending".into(),
        ));
    }
    let results: Vec<SqueezeResult> = n_list
        .par_iter()
        .map(|&n| {
            let schedule = TwistingSchedule::jz(default_schedule(n))?;
            run_squeezing_seeded(n, s, squeeze_type, &schedule, seed)
        })
        .collect::<Result<_>>()?;

    let xs: Vec<f64> = n_list.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = results.iter().map(|r| r.min_variance.ln()).collect();
    let (slope, intercept, residual) = linear_fit(&xs, &ys);
    Ok(ScalingSweep {
        results,
        slope,
        intercept,
        residual,
    })
}

fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum();
    (slope, intercept, (rss / n).sqrt())
}
