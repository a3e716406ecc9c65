use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use su3squeeze::algebra::{root_diagram, search_raising_operators, StructureConstants};
use su3squeeze::dynamics::{apply_rotation_generic, DiagonalTwist};
use su3squeeze::fock::{coherent_state, second_quantize};
use su3squeeze::squeezing::{run_squeezing, TransverseProbe};
use su3squeeze::{
    default_schedule, ObservableCombo, Spinor, SqueezeType, Su3Rotation, TwistingSchedule,
};
use su3squeeze_bench::{Fixture, SIZES};

fn algebra(c: &mut Criterion) {
    let f = StructureConstants::standard();
    let d = root_diagram(f).unwrap();
    c.bench_function("root_diagram", |b| {
        b.iter(|| root_diagram(black_box(f)).unwrap())
    });
    let mut g = c.benchmark_group("raising_search");
    g.sample_size(10);
    g.bench_function("grid_0.01", |b| {
        b.iter(|| search_raising_operators(&d, f, black_box(0.01)).unwrap())
    });
    g.finish();
}

fn fock(c: &mut Criterion) {
    let mut g = c.benchmark_group("fock");
    for n in SIZES {
        let fx = Fixture::new(n, SqueezeType::Type1);
        let s = Spinor::x_polarized();
        g.bench_with_input(BenchmarkId::new("coherent_state", n), &n, |b, _| {
            b.iter(|| coherent_state(&fx.basis, black_box(&s)))
        });
        let kernel = fx.triad.members[0].matrix();
        g.bench_with_input(BenchmarkId::new("second_quantize", n), &n, |b, _| {
            b.iter(|| second_quantize(&fx.basis, black_box(&kernel)).unwrap())
        });
    }
    g.finish();
}

fn dynamics(c: &mut Criterion) {
    let mut g = c.benchmark_group("dynamics");
    for n in SIZES {
        let fx = Fixture::new(n, SqueezeType::Type1);
        let probe = TransverseProbe::new(&fx.state, &fx.triad).unwrap();
        let twist = DiagonalTwist::new(&fx.state, &fx.triad.members[2].matrix()).unwrap();
        g.bench_with_input(BenchmarkId::new("twist_and_probe", n), &n, |b, _| {
            b.iter(|| probe.stats(&twist.at(black_box(0.03))).unwrap())
        });
        let u = Su3Rotation::about(
            ObservableCombo::new([0.3, -0.2, 0.5, 0.1, 0.9, -0.4, 0.2, 0.6]),
            0.8,
        );
        let generic = twist.at(0.03);
        g.bench_with_input(BenchmarkId::new("taylor_rotation", n), &n, |b, _| {
            b.iter(|| apply_rotation_generic(black_box(&generic), &u).unwrap())
        });
    }
    g.finish();
}

fn squeezing(c: &mut Criterion) {
    let mut g = c.benchmark_group("run_squeezing");
    g.sample_size(10);
    for (family, s) in [
        (SqueezeType::Type1, Spinor::polar()),
        (SqueezeType::Type2, Spinor::ferro()),
    ] {
        let sched = TwistingSchedule::jz(default_schedule(100)).unwrap();
        g.bench_function(format!("N100_type{}", family.number()), |b| {
            b.iter(|| run_squeezing(100, &s, family, &sched).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, algebra, fock, dynamics, squeezing);
criterion_main!(benches);
