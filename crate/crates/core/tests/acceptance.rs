//! One line per acceptance criterion; exits non-zero if any criterion fails.

mod common;

use std::f64::consts::FRAC_PI_4;
use std::time::Instant;

use nalgebra::DMatrix;
use su3squeeze::algebra::{
    build_generator_basis, conjugate_triad, nematic_tensor, root_diagram, search_raising_operators,
    structure_constants, Axis, Generator, RootVector, StructureConstants, Su3Rotation,
};
use su3squeeze::dynamics::{
    one_axis_evolve, reference_spinor, rotated_triad, EulerAngles, TwistingSchedule,
};
use su3squeeze::fock::{build_basis, coherent_state, covariance_matrix, second_quantize};
use su3squeeze::squeezing::{run_squeezing, sweep_scaling, SqueezeResult};
use su3squeeze::{classify_triad, default_schedule, ObservableCombo, Spinor, SqueezeType};

const JACOBI_TOL: f64 = 1e-9;
const ROOT_TOL: f64 = 1e-10;
const TRIAD_TOL: f64 = 1e-10;
const ORACLE_TOL: f64 = 1e-10;
const VARIANCE_REL: f64 = 0.25;
const CHI_T_REL: f64 = 0.50;
const SLOPE_TOL: f64 = 0.05;
const SATURATION_REL: f64 = 1e-6;

struct Outcome {
    pass: bool,
    detail: String,
}

fn g(x: Generator) -> ObservableCombo {
    ObservableCombo::generator(x)
}

fn dyz() -> ObservableCombo {
    nematic_tensor(Axis::Y, Axis::Y) - nematic_tensor(Axis::Z, Axis::Z)
}

fn within(x: f64, target: f64, rel: f64) -> bool {
    (x - target).abs() <= rel * target.abs()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let f = structure_constants(&build_generator_basis()).expect("orthonormal basis");
    let anti = f.antisymmetry_residual();
    let jacobi = f.jacobi_residual();
    let roots = root_diagram(&f).expect("six roots");
    let elapsed = start.elapsed().as_secs_f64();
    let got = roots.roots();
    let root_dev = RootVector::exact_roots()
        .iter()
        .map(|want| {
            got.iter()
                .map(|r| r.distance(want))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);
    Outcome {
        pass: got.len() == 6
            && anti <= JACOBI_TOL
            && jacobi <= JACOBI_TOL
            && root_dev <= ROOT_TOL
            && elapsed < 1.0,
        detail: format!(
            "antisymmetry {anti:.1e}, jacobi {jacobi:.1e}, root deviation {root_dev:.1e}, {elapsed:.3}s"
        ),
    }
}

fn criterion_2() -> Outcome {
    let f = StructureConstants::standard();
    let d = root_diagram(f).expect("six roots");
    let start = Instant::now();
    let out = search_raising_operators(&d, f, 0.01);
    let elapsed = start.elapsed().as_secs_f64();
    let out = match out {
        Ok(o) => o,
        Err(e) => {
            return Outcome {
                pass: false,
                detail: format!("search failed: {e}"),
            }
        }
    };
    let expected = [(0.0, 0.0, 2.0), (1.0, 0.0, 1.0), (-1.0, 0.0, 1.0)];
    let matches_expected = out.solutions.len() == expected.len()
        && expected.iter().all(|&(c1, c2, l)| {
            out.solutions
                .iter()
                .any(|s| (s.c1 - c1).hypot(s.c2 - c2) < 1e-6 && (s.lambda - l).abs() < 1e-10)
        });
    let found: Vec<String> = out
        .solutions
        .iter()
        .map(|s| format!("({:.6}, {:.6}) λ={:.6}", s.c1, s.c2, s.lambda))
        .collect();
    Outcome {
        pass: matches_expected && elapsed < 30.0,
        detail: format!(
            "found [{}] over {} grid points, {elapsed:.2}s",
            found.join(", "),
            out.grid_points
        ),
    }
}

fn criterion_3() -> Outcome {
    let s2 = 2f64.sqrt();
    let start = classify_triad(
        [
            (g(Generator::Jx) + g(Generator::Qzx)) * (1.0 / s2),
            (g(Generator::Jy) + g(Generator::Qyz)) * (1.0 / s2),
            (g(Generator::Jz) + g(Generator::Y) * 3f64.sqrt()) * 0.5,
        ],
        StructureConstants::standard(),
    )
    .expect("closed triad");
    let out = conjugate_triad(&start, &Su3Rotation::about(g(Generator::Qxy), FRAC_PI_4));
    let want = [g(Generator::Jx), g(Generator::Qyz), dyz()];
    let devs: Vec<f64> = out
        .members
        .iter()
        .zip(&want)
        .map(|(a, b)| a.max_abs_diff(b))
        .collect();
    Outcome {
        pass: devs.iter().all(|&d| d <= TRIAD_TOL),
        detail: format!(
            "member deviations from {{Jx, Qyz, Dyz}}: [{:.1e}, {:.1e}, {:.1e}]",
            devs[0], devs[1], devs[2]
        ),
    }
}

fn criterion_4() -> Outcome {
    let s2 = 2f64.sqrt();
    let polar = rotated_triad(
        EulerAngles::new(0.0, 0.0, 0.0, -3.0 * FRAC_PI_4),
        SqueezeType::Type1,
    );
    let polar_dev = polar.max_member_diff(&[
        dyz(),
        (g(Generator::Qxy) - g(Generator::Jy)) * (1.0 / s2),
        -(g(Generator::Jz) + g(Generator::Qzx)) * (1.0 / s2),
    ]);
    let ferro = rotated_triad(
        EulerAngles::new(0.0, 0.0, 0.0, -FRAC_PI_4),
        SqueezeType::Type2,
    );
    let ferro_dev =
        ferro.max_member_diff(&[g(Generator::Jz), g(Generator::Qxy), -g(Generator::Dxy)]);
    Outcome {
        pass: polar_dev <= TRIAD_TOL && ferro_dev <= TRIAD_TOL,
        detail: format!("polar deviation {polar_dev:.1e}, ferro deviation {ferro_dev:.1e}"),
    }
}

fn criterion_5() -> Outcome {
    let mut rng = common::rng(5);
    let mut coherent_dev = 0.0f64;
    for _ in 0..50 {
        let s = common::random_spinor(&mut rng);
        for n in 0..=8 {
            let basis = build_basis(n).expect("small basis");
            let psi = coherent_state(&basis, &s);
            let oracle = common::symbolic_coherent(n, s.zeta());
            for (occ, amp) in &oracle {
                coherent_dev = coherent_dev.max((psi.amplitude(*occ) - amp).norm());
            }
        }
    }

    let basis = build_basis(2).expect("small basis");
    let psi = coherent_state(&basis, &reference_spinor(SqueezeType::Type1));
    let jz = second_quantize(&basis, &g(Generator::Jz).matrix())
        .expect("hermitian")
        .to_dense();
    let h = &jz * &jz;
    let times = vec![0.0, 0.01, 0.1, 0.5, 1.0, 3.0];
    let traj = one_axis_evolve(
        &psi,
        &TwistingSchedule::jz(times.clone()).expect("schedule"),
    )
    .expect("diagonal kernel");
    let v0 = DMatrix::from_column_slice(6, 1, psi.amplitudes());
    let mut evolve_dev = 0.0f64;
    for (t, state) in times.iter().zip(&traj) {
        let want = common::dense_expm(&h, *t) * &v0;
        for (a, w) in state.amplitudes().iter().zip(want.iter()) {
            evolve_dev = evolve_dev.max((a - w).norm());
        }
    }
    Outcome {
        pass: coherent_dev <= ORACLE_TOL && evolve_dev <= ORACLE_TOL,
        detail: format!(
            "coherent vs expansion {coherent_dev:.1e} (50 spinors, N ≤ 8), evolution vs dense exponential {evolve_dev:.1e}"
        ),
    }
}

fn squeeze(n: usize, s: Spinor, t: SqueezeType) -> (Result<SqueezeResult, String>, f64) {
    let start = Instant::now();
    let schedule = TwistingSchedule::jz(default_schedule(n)).expect("schedule");
    let r = run_squeezing(n, &s, t, &schedule).map_err(|e| e.to_string());
    (r, start.elapsed().as_secs_f64())
}

fn criterion_6(r: &Result<SqueezeResult, String>, elapsed: f64) -> Outcome {
    match r {
        Ok(r) => Outcome {
            pass: within(r.min_variance, 1.5206, VARIANCE_REL)
                && within(r.chi_t_opt, 0.0394, CHI_T_REL)
                && elapsed < 60.0,
            detail: format!(
                "min variance {:.4} (target 1.5206), χt {:.4} (target 0.0394), {elapsed:.2}s",
                r.min_variance, r.chi_t_opt
            ),
        },
        Err(e) => Outcome {
            pass: false,
            detail: e.clone(),
        },
    }
}

fn criterion_7(
    type2: &Result<SqueezeResult, String>,
    type1: &Result<SqueezeResult, String>,
) -> Outcome {
    match (type2, type1) {
        (Ok(r2), Ok(r1)) => {
            let ratio = r2.min_variance / r1.min_variance;
            let var_ok = within(r2.min_variance, 4.8275, VARIANCE_REL);
            let time_ok = within(r2.chi_t_opt, 0.0626, CHI_T_REL);
            let ratio_ok = (2.5..=4.5).contains(&ratio);
            Outcome {
                pass: var_ok && time_ok && ratio_ok,
                detail: format!(
                    "min variance {:.4} (target 4.8275) {}, χt {:.4} (target 0.0626) {}, ratio {ratio:.3} {}",
                    r2.min_variance,
                    if var_ok { "ok" } else { "off" },
                    r2.chi_t_opt,
                    if time_ok { "ok" } else { "off" },
                    if ratio_ok { "ok" } else { "off" },
                ),
            }
        }
        (Err(e), _) | (_, Err(e)) => Outcome {
            pass: false,
            detail: e.clone(),
        },
    }
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let ns = [50, 75, 100, 150, 200];
    let a = sweep_scaling(&ns, SqueezeType::Type1, &Spinor::polar());
    let b = sweep_scaling(&ns, SqueezeType::Type2, &Spinor::ferro());
    let elapsed = start.elapsed().as_secs_f64();
    match (a, b) {
        (Ok(a), Ok(b)) => Outcome {
            pass: (a.slope - 1.0 / 3.0).abs() <= SLOPE_TOL
                && (b.slope - 1.0 / 3.0).abs() <= SLOPE_TOL
                && elapsed < 600.0,
            detail: format!(
                "slopes type 1 {:.4}, type 2 {:.4}, {elapsed:.1}s",
                a.slope, b.slope
            ),
        },
        (Err(e), _) | (_, Err(e)) => Outcome {
            pass: false,
            detail: e.to_string(),
        },
    }
}

fn criterion_9(
    type1: &Result<SqueezeResult, String>,
    type2: &Result<SqueezeResult, String>,
) -> Outcome {
    match (type1, type2) {
        (Ok(a), Ok(b)) => Outcome {
            pass: a.squeezing_db < -10.0 && b.squeezing_db < -10.0,
            detail: format!(
                "polar type 1 {:.2} dB, ferro type 2 {:.2} dB",
                a.squeezing_db, b.squeezing_db
            ),
        },
        (Err(e), _) | (_, Err(e)) => Outcome {
            pass: false,
            detail: e.clone(),
        },
    }
}

fn criterion_10() -> Outcome {
    let mut worst = 0.0f64;
    for n in [10, 50, 100] {
        let basis = build_basis(n).expect("basis");
        let psi = coherent_state(&basis, &reference_spinor(SqueezeType::Type2));
        let qxy = second_quantize(&basis, &g(Generator::Qxy).matrix()).expect("hermitian");
        let jz = second_quantize(&basis, &g(Generator::Jz).matrix()).expect("hermitian");
        let c = covariance_matrix(&psi, &[&qxy, &jz]).expect("same basis");
        let nsq = (n * n) as f64;
        worst = worst.max((c[(0, 0)] * c[(1, 1)] - nsq).abs() / nsq);
    }
    Outcome {
        pass: worst <= SATURATION_REL,
        detail: format!("max relative deviation of Var(Qxy)Var(Jz) from N² is {worst:.1e}"),
    }
}

fn main() {
    let (type1, t1_elapsed) = squeeze(100, Spinor::polar(), SqueezeType::Type1);
    let (type2, _) = squeeze(100, Spinor::ferro(), SqueezeType::Type2);

    let outcomes = [
        ("structure constants and roots", criterion_1()),
        ("raising-operator solution set", criterion_2()),
        ("conjugation by exp(-iπ/4 Qxy)", criterion_3()),
        ("worked-example triads", criterion_4()),
        ("oracle equivalence", criterion_5()),
        ("type-1 squeezing limit", criterion_6(&type1, t1_elapsed)),
        ("type-2 squeezing limit", criterion_7(&type2, &type1)),
        ("N^(1/3) scaling", criterion_8()),
        ("cross-generation below -10 dB", criterion_9(&type1, &type2)),
        ("uncertainty saturation", criterion_10()),
    ];

    let mut failed = 0;
    for (i, (name, o)) in outcomes.iter().enumerate() {
        println!(
            "criterion {:>2} {}: {} ({})",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            name,
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        outcomes.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
