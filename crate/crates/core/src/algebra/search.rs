//! Grid-and-refine search over raising operators
//! E₊ = E_{1,√3} + c₁E_{1,-√3} + c₂E_{-2,0} with real c₁, c₂, testing
//! whether [[E₊, E₊†], E₊] is proportional to E₊.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::roots::RootDiagram;
use super::structure::StructureConstants;
use super::triads::triad_from_raising;
use crate::error::{Error, Result};
use crate::linalg::{commutator, fnorm, Mat3, C64};
use crate::optimize::nelder_mead;

pub const SEARCH_BOUND: f64 = 2.0;
pub const ACCEPT_RESIDUAL: f64 = 1e-8;
const ABELIAN_NORM: f64 = 1e-6;
const DEDUP: f64 = 1e-6;

/// Real coefficient pairs at which E₊ generates an su(2).
pub const KNOWN_SOLUTIONS: [(f64, f64); 5] =
    [(0.0, 0.0), (1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)];

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RaisingSolution {
    pub c1: f64,
    pub c2: f64,
    pub lambda: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub solutions: Vec<RaisingSolution>,
    /// Zero-residual points where [E₊, E₊†] = 0, so no su(2) is generated.
    pub abelian_points: Vec<(f64, f64)>,
    pub grid_points: usize,
    pub candidates_refined: usize,
}

impl SearchOutcome {
    pub fn distinct_lambdas(&self) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::new();
        for s in &self.solutions {
            if !out.iter().any(|l| (l - s.lambda).abs() < 1e-8) {
                out.push(s.lambda);
            }
        }
        out.sort_by(f64::total_cmp);
        out
    }
}

struct RaisingFamily {
    base: Mat3,
    e1: Mat3,
    e2: Mat3,
}

impl RaisingFamily {
    fn new(diagram: &RootDiagram) -> Self {
        let s3 = 3f64.sqrt();
        Self {
            base: diagram.operator(1.0, s3).matrix,
            e1: diagram.operator(1.0, -s3).matrix,
            e2: diagram.operator(-2.0, 0.0).matrix,
        }
    }

    fn raising(&self, c1: f64, c2: f64) -> Mat3 {
        self.base + self.e1 * C64::new(c1, 0.0) + self.e2 * C64::new(c2, 0.0)
    }

    /// (‖C - μE₊‖, ‖K‖) with K = [E₊, E₊†], C = [K, E₊], μ the best fit.
    fn residual(&self, c1: f64, c2: f64) -> (f64, f64) {
        let e = self.raising(c1, c2);
        let k = commutator(&e, &e.adjoint());
        let cc = commutator(&k, &e);
        let mu = (e.adjoint() * cc).trace() / (e.adjoint() * e).trace();
        (fnorm(&(cc - e * mu)), fnorm(&k))
    }
}

/// Proportionality residual at one coefficient pair.
pub fn raising_residual(diagram: &RootDiagram, c1: f64, c2: f64) -> f64 {
    RaisingFamily::new(diagram).residual(c1, c2).0
}

/// Scans [-2, 2]² with spacing `grid_resolution`, refines every discrete local
/// minimum by Nelder-Mead and keeps those below 1e-8.
pub fn search_raising_operators(
    diagram: &RootDiagram,
    f: &StructureConstants,
    grid_resolution: f64,
) -> Result<SearchOutcome> {
    if !(grid_resolution > 0.0 && grid_resolution <= 0.01) {
        return Err(Error::Precondition(format!(
            "grid resolution must lie in (0, 0.01], got {grid_resolution}"
        )));
    }
    let family = RaisingFamily::new(diagram);
    let steps = (2.0 * SEARCH_BOUND / grid_resolution).round() as usize;
    let m = steps + 1;
    let coord = |i: usize| -SEARCH_BOUND + 2.0 * SEARCH_BOUND * i as f64 / steps as f64;

    let grid: Vec<f64> = (0..m * m)
        .into_par_iter()
        .map(|idx| family.residual(coord(idx / m), coord(idx % m)).0)
        .collect();

    let mut seeds = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let v = grid[i * m + j];
            let mut is_min = true;
            'nb: for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    let (a, b) = (i as i64 + di, j as i64 + dj);
                    if (di, dj) == (0, 0) || a < 0 || b < 0 || a >= m as i64 || b >= m as i64 {
                        continue;
                    }
                    if grid[a as usize * m + b as usize] < v {
                        is_min = false;
                        break 'nb;
                    }
                }
            }
            if is_min {
                seeds.push((coord(i), coord(j)));
            }
        }
    }

    let refined: Vec<(f64, f64, f64, f64)> = seeds
        .par_iter()
        .map(|&(c1, c2)| {
            let sq = |x: &[f64]| family.residual(x[0], x[1]).0.powi(2);
            let best = nelder_mead(sq, &[c1, c2], 0.5 * grid_resolution, 0.0, 4000);
            let (r, k) = family.residual(best.x[0], best.x[1]);
            (best.x[0], best.x[1], r, k)
        })
        .collect();

    let mut solutions: Vec<RaisingSolution> = Vec::new();
    let mut abelian_points: Vec<(f64, f64)> = Vec::new();
    for (c1, c2, r, k) in refined {
        if r >= ACCEPT_RESIDUAL {
            continue;
        }
        if c1.abs() > SEARCH_BOUND + DEDUP || c2.abs() > SEARCH_BOUND + DEDUP {
            continue;
        }
        let near = |p: (f64, f64)| (p.0 - c1).hypot(p.1 - c2) < DEDUP;
        if k < ABELIAN_NORM {
            if !abelian_points.iter().any(|&p| near(p)) {
                abelian_points.push((c1, c2));
            }
            continue;
        }
        if solutions.iter().any(|s| near((s.c1, s.c2))) {
            continue;
        }
        if !KNOWN_SOLUTIONS.iter().any(|&p| near(p)) {
            return Err(Error::UnexpectedSolution { c1, c2 });
        }
        let triad = triad_from_raising(&family.raising(c1, c2), f)?;
        solutions.push(RaisingSolution {
            c1,
            c2,
            lambda: triad.lambda,
            residual: r,
        });
    }
    let order = |a: &(f64, f64), b: &(f64, f64)| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1));
    solutions.sort_by(|a, b| order(&(a.c1, a.c2), &(b.c1, b.c2)));
    abelian_points.sort_by(order);

    Ok(SearchOutcome {
        solutions,
        abelian_points,
        grid_points: m * m,
        candidates_refined: seeds.len(),
    })
}
