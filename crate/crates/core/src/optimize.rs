//! Derivative-free minimizers: Nelder-Mead for the angle and coefficient
//! refinements, golden-section search for the one-dimensional χt refinement.

pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
}

/// Nelder-Mead with the standard coefficients (1, 2, 1/2, 1/2). Stops when the
/// spread of simplex values drops below `ftol` or after `max_iter` iterations.
pub fn nelder_mead<F>(f: F, x0: &[f64], step: f64, ftol: f64, max_iter: usize) -> Minimum
where
    F: Fn(&[f64]) -> f64,
{
    let n = x0.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] += step;
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex.iter().map(|v| f(v)).collect();

    for _ in 0..max_iter {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();

        if (values[n] - values[0]).abs() <= ftol {
            break;
        }

        let centroid: Vec<f64> = (0..n)
            .map(|d| simplex[..n].iter().map(|v| v[d]).sum::<f64>() / n as f64)
            .collect();
        let along = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[n])
                .map(|(c, w)| c + t * (c - w))
                .collect()
        };

        let reflected = along(1.0);
        let fr = f(&reflected);
        if fr < values[0] {
            let expanded = along(2.0);
            let fe = f(&expanded);
            if fe < fr {
                simplex[n] = expanded;
                values[n] = fe;
            } else {
                simplex[n] = reflected;
                values[n] = fr;
            }
            continue;
        }
        if fr < values[n - 1] {
            simplex[n] = reflected;
            values[n] = fr;
            continue;
        }
        let (contracted, fc) = if fr < values[n] {
            let p = along(0.5);
            let fp = f(&p);
            (p, fp)
        } else {
            let p = along(-0.5);
            let fp = f(&p);
            (p, fp)
        };
        if fc < values[n].min(fr) {
            simplex[n] = contracted;
            values[n] = fc;
            continue;
        }
        // shrink toward the best vertex
        let best = simplex[0].clone();
        for i in 1..=n {
            for d in 0..n {
                simplex[i][d] = best[d] + 0.5 * (simplex[i][d] - best[d]);
            }
            values[i] = f(&simplex[i]);
        }
    }

    let (imin, &vmin) = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty simplex");
    Minimum {
        x: simplex[imin].clone(),
        value: vmin,
    }
}

/// Golden-section search on `[lo, hi]` until the bracket is narrower than
/// `rel_tol` times its midpoint. Returns the best point seen.
pub fn golden_section<F>(f: F, lo: f64, hi: f64, rel_tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - ratio * (b - a);
    let mut x2 = a + ratio * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a) > rel_tol * 0.5 * (a + b).abs().max(f64::MIN_POSITIVE) {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - ratio * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + ratio * (b - a);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_nelder_mead_rosenbrock() {
        let rosen = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let m = nelder_mead(rosen, &[-1.2, 1.0], 0.5, 1e-20, 10_000);
        assert!((m.x[0] - 1.0).abs() < 1e-6 && (m.x[1] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn test_golden_section_parabola() {
        let (x, fx) = golden_section(|t| (t - 0.3).powi(2), 0.1, 1.0, 1e-9);
        assert!((x - 0.3).abs() < 1e-8);
        assert!(fx < 1e-16);
    }
}
