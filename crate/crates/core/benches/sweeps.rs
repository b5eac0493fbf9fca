use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use csrbf::experiments::{diagnostic_table, slope_table, sweep, standard_kernels, SweepAxis};
use csrbf::gas::{solve, GasProblem};
use csrbf::reference::DIAGNOSTIC_RADII;
use csrbf::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn bench_single_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    for k in standard_kernels() {
        let p = GasProblem::new(k);
        group.bench_with_input(BenchmarkId::from_parameter(k.family()), &p, |b, p| {
            b.iter(|| solve(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn bench_support_sweep(c: &mut Criterion) {
    let base = GasProblem::new(standard_kernels()[0]);
    let mut group = c.benchmark_group("sweep_rw");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| sweep(&base, SweepAxis::Rw, black_box(&DIAGNOSTIC_RADII), exec))
        });
    }
    group.finish();
}

fn bench_slope_table(c: &mut Criterion) {
    let base = GasProblem::new(standard_kernels()[0]);
    let mut group = c.benchmark_group("slope_table");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| slope_table(black_box(&base), exec)));
    }
    group.finish();
}

fn bench_diagnostics(c: &mut Criterion) {
    let base = GasProblem::new(standard_kernels()[0]);
    let mut group = c.benchmark_group("diagnostic_table");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| diagnostic_table(black_box(&base), &DIAGNOSTIC_RADII, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_single_solve,
    bench_support_sweep,
    bench_slope_table,
    bench_diagnostics
);
criterion_main!(benches);
