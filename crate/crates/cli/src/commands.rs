use std::fs::File;
use std::io::{self, BufWriter, Write};

use su3squeeze::algebra::algebra_report as build_report;
use su3squeeze::dynamics::TwistingSchedule;
use su3squeeze::fock::MAX_PARTICLES;
use su3squeeze::squeezing::{
    default_schedule, log_schedule, run_squeezing_seeded, sweep_scaling_seeded, ScalingSweep,
    SqueezeResult, WINDOW_HI, WINDOW_LO,
};
use su3squeeze::{Error, SqueezeType};

use crate::args::{validate_spinor, Format, Output, ReportArgs, SqueezeArgs, SweepArgs};
use crate::{EXIT_INVARIANT, EXIT_OK, EXIT_RUNTIME, EXIT_USAGE};

const SEARCH_RESOLUTION: f64 = 0.01;

/// Rounds away floating-point dust for human-readable output.
fn tidy(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        0.0
    } else {
        x
    }
}

fn usage(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn runtime(e: Error) -> u8 {
    eprintln!("error: {e}");
    EXIT_RUNTIME
}

fn with_sink(output: &Output, body: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> u8 {
    let result = match &output.out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            body(&mut w)?;
            w.flush()
        }),
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            body(&mut lock).and_then(|_| lock.flush())
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            EXIT_RUNTIME
        }
    }
}

fn write_json<T: serde::Serialize>(w: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)
}

pub fn algebra_report(args: ReportArgs) -> u8 {
    let report = match build_report(SEARCH_RESOLUTION) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("invariant failed: {e}");
            return EXIT_INVARIANT;
        }
    };
    let format = args.output.format.unwrap_or(Format::Text);
    let code = with_sink(&args.output, |w| match format {
        Format::Json => write_json(w, &report),
        Format::Csv => {
            writeln!(w, "alpha1,alpha2")?;
            for [a, b] in &report.roots {
                writeln!(w, "{a},{b}")?;
            }
            Ok(())
        }
        Format::Text => {
            writeln!(w, "checks:")?;
            for c in &report.checks {
                let status = if c.passed { "ok" } else { "FAILED" };
                writeln!(
                    w,
                    "  {:<22} {:>10.3e} (tol {:.0e}) {status}",
                    c.name, c.value, c.tolerance
                )?;
            }
            writeln!(w, "roots:")?;
            for [a, b] in &report.roots {
                writeln!(w, "  ({:+.6}, {:+.6})", tidy(*a), tidy(*b))?;
            }
            writeln!(w, "canonical triads:")?;
            for t in &report.triads {
                let members: Vec<String> = t
                    .members
                    .iter()
                    .map(|m| {
                        let cs: Vec<String> =
                            m.iter().map(|&x| format!("{:.4}", tidy(x))).collect();
                        format!("[{}]", cs.join(" "))
                    })
                    .collect();
                writeln!(w, "  lambda={:.6} {}", t.lambda, members.join(" "))?;
            }
            writeln!(
                w,
                "raising-operator search ({} grid points):",
                report.search.grid_points
            )?;
            for s in &report.search.solutions {
                writeln!(
                    w,
                    "  (c1, c2) = ({:+.6}, {:+.6}) lambda={:.6} residual={:.1e}",
                    tidy(s.c1),
                    tidy(s.c2),
                    s.lambda,
                    s.residual
                )?;
            }
            for (c1, c2) in &report.search.abelian_points {
                writeln!(
                    w,
                    "  (c1, c2) = ({:+.6}, {:+.6}) abelian",
                    tidy(*c1),
                    tidy(*c2)
                )?;
            }
            writeln!(w, "distinct lambdas: {:?}", report.distinct_lambdas)
        }
    });
    if code != EXIT_OK {
        return code;
    }
    let failed = report.failed_checks();
    for c in &failed {
        eprintln!(
            "invariant failed: {} ({:e} > {:e})",
            c.name, c.value, c.tolerance
        );
    }
    if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    }
}

fn squeeze_type(n: u8) -> SqueezeType {
    SqueezeType::from_number(n).expect("clap restricts the range")
}

fn summary(r: &SqueezeResult) -> String {
    format!(
        "N={} type={} min_var={} chi_t_opt={} db={}",
        r.n_particles,
        r.squeeze_type.number(),
        r.min_variance,
        r.chi_t_opt,
        r.squeezing_db
    )
}

pub fn squeeze(args: SqueezeArgs) -> u8 {
    let (spinor, warning) = match validate_spinor(args.spinor) {
        Ok(v) => v,
        Err(msg) => return usage(msg),
    };
    if let Some(w) = warning {
        eprintln!("{w}");
    }
    if args.n < 2 || args.n > MAX_PARTICLES {
        return usage(format!(
            "--n must lie in 2..={MAX_PARTICLES}, got {}",
            args.n
        ));
    }
    if args.points < 3 {
        return usage("--points must be at least 3");
    }
    let times = match (args.chi_t_min, args.chi_t_max) {
        (None, None) if args.points == su3squeeze::squeezing::DEFAULT_POINTS => {
            default_schedule(args.n)
        }
        (lo, hi) => {
            let scale = (args.n as f64).powf(-2.0 / 3.0);
            let lo = lo.unwrap_or(WINDOW_LO * scale);
            let hi = hi.unwrap_or(WINDOW_HI * scale);
            if !(lo > 0.0 && hi > lo && hi.is_finite()) {
                return usage(format!("invalid χt window [{lo}, {hi}]"));
            }
            log_schedule(lo, hi, args.points)
        }
    };
    let schedule = match TwistingSchedule::jz(times) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let result = match run_squeezing_seeded(
        args.n,
        &spinor,
        squeeze_type(args.squeeze_type),
        &schedule,
        args.seed,
    ) {
        Ok(r) => r,
        Err(e) => return runtime(e),
    };
    println!("{}", summary(&result));
    let format = args.output.format.unwrap_or(Format::Json);
    with_sink(&args.output, |w| match format {
        Format::Json => write_json(w, &result),
        Format::Csv => {
            writeln!(w, "chi_t,min_variance,nu")?;
            for [t, v, nu] in &result.variance_series {
                writeln!(w, "{t},{v},{nu}")?;
            }
            Ok(())
        }
        Format::Text => {
            writeln!(w, "{}", summary(&result))?;
            writeln!(
                w,
                "nu_opt={} initial_variance={}",
                result.nu_opt, result.initial_variance
            )
        }
    })
}

fn write_sweep_csv(w: &mut dyn Write, s: &ScalingSweep) -> io::Result<()> {
    writeln!(w, "N,min_variance,chi_t_opt")?;
    for r in &s.results {
        writeln!(w, "{},{},{}", r.n_particles, r.min_variance, r.chi_t_opt)?;
    }
    writeln!(w, "# slope={} residual={}", s.slope, s.residual)
}

pub fn sweep(args: SweepArgs) -> u8 {
    let (spinor, warning) = match validate_spinor(args.spinor) {
        Ok(v) => v,
        Err(msg) => return usage(msg),
    };
    if let Some(w) = warning {
        eprintln!("{w}");
    }
    let ns = &args.n_list;
    if ns.len() < 4 {
        return usage(format!(
            "--n-list needs at least 4 entries, got {}",
            ns.len()
        ));
    }
    if ns.windows(2).any(|w| w[1] <= w[0]) {
        return usage("--n-list must be strictly ascending");
    }
    if let Some(bad) = ns.iter().find(|&&n| !(20..=MAX_PARTICLES).contains(&n)) {
        return usage(format!(
            "--n-list entries must lie in 20..={MAX_PARTICLES}, got {bad}"
        ));
    }
    let sweep = match sweep_scaling_seeded(ns, squeeze_type(args.squeeze_type), &spinor, args.seed)
    {
        Ok(s) => s,
        Err(e) => return runtime(e),
    };
    let format = args.output.format.unwrap_or(Format::Csv);
    with_sink(&args.output, |w| match format {
        Format::Json => write_json(w, &sweep),
        Format::Csv | Format::Text => write_sweep_csv(w, &sweep),
    })
}
