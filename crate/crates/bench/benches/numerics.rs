use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use eulerkern::mc::{mc_volume, McConfig};
use eulerkern::zeta::{series_zeta, zeta_odd_logtan, zeta_odd_quadrature, QuadratureConfig, SeriesConfig};

fn quadrature(c: &mut Criterion) {
    let cfg = QuadratureConfig::default();
    let mut g = c.benchmark_group("zeta_odd");
    for n in [1u32, 3, 5] {
        let _ = zeta_odd_quadrature(n, &cfg);
        g.bench_with_input(BenchmarkId::new("quadrature", n), &n, |b, &n| {
            b.iter(|| zeta_odd_quadrature(black_box(n), &cfg).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("logtan", n), &n, |b, &n| {
            b.iter(|| zeta_odd_logtan(black_box(n), &cfg).unwrap())
        });
    }
    g.finish();
}

fn series(c: &mut Criterion) {
    let cfg = SeriesConfig::default();
    let mut g = c.benchmark_group("series_zeta");
    for s in [3u32, 5, 11] {
        g.bench_with_input(BenchmarkId::from_parameter(s), &s, |b, &s| {
            b.iter(|| series_zeta(black_box(s), &cfg).unwrap())
        });
    }
    g.finish();
}

fn monte_carlo(c: &mut Criterion) {
    let mut g = c.benchmark_group("mc_volume");
    g.sample_size(10);
    for n in [3usize, 6] {
        let cfg = McConfig::new(n, 1_000_000, 1);
        g.bench_with_input(BenchmarkId::from_parameter(n), &cfg, |b, cfg| b.iter(|| mc_volume(cfg).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, quadrature, series, monte_carlo);
criterion_main!(benches);
