use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use eulerkern::kernel::PiecewiseKernel;
use eulerkern::{euler_poly, identities};

fn closed_form(c: &mut Criterion) {
    let mut g = c.benchmark_group("closed_form");
    for n in [4u32, 8, 12] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| PiecewiseKernel::closed_form(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn recurrence_step(c: &mut Criterion) {
    let mut g = c.benchmark_group("recurrence_step");
    for n in [4u32, 8, 12] {
        let k = PiecewiseKernel::closed_form(n).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &k, |b, k| b.iter(|| k.recurrence_step()));
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let _ = euler_poly(24);
    c.bench_function("identity_suite", |b| b.iter(|| identities::identity_suite().unwrap()));
}

criterion_group!(benches, closed_form, recurrence_step, suite);
criterion_main!(benches);
