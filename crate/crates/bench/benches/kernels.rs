use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use sumrad_core::circumball::min_enclosing_circle;
use sumrad_core::optimizer::{estimate_c, OptimizerSettings};
use sumrad_core::sample;

fn bench_signed_sum(c: &mut Criterion) {
    let mut group = c.benchmark_group("signed_sum");
    for n in [8usize, 14, 20] {
        let g = sample::generator_set(&mut sample::rng(1), n);
        group.bench_with_input(BenchmarkId::new("sweep", n), &g, |b, g| {
            b.iter(|| black_box(g.max_signed_sum_sweep().value))
        });
        if n <= 20 {
            group.bench_with_input(BenchmarkId::new("brute", n), &g, |b, g| {
                b.iter(|| black_box(g.max_signed_sum_brute().unwrap().value))
            });
        }
    }
    group.finish();
}

fn bench_geometry(c: &mut Criterion) {
    let mut group = c.benchmark_group("geometry");
    let mut rng = sample::rng(2);
    let p = sample::convex_polygon(&mut rng, 64, 1.0);
    let q = sample::convex_polygon(&mut rng, 64, 1.0);
    group.bench_function("minkowski_sum_64", |b| {
        b.iter(|| black_box(p.minkowski_sum(&q).vertex_count()))
    });

    let points: Vec<_> = (0..1000)
        .map(|_| sample::convex_polygon(&mut rng, 1, 1.0).vertices()[0])
        .collect();
    group.bench_function("min_enclosing_circle_1000", |b| {
        b.iter(|| black_box(min_enclosing_circle(&points).unwrap().radius))
    });

    let z = sample::generator_set(&mut sample::rng(3), 24);
    group.bench_function("zonotope_24", |b| {
        b.iter(|| black_box(z.zonotope().vertex_count()))
    });
    group.finish();
}

fn bench_optimizer(c: &mut Criterion) {
    let mut group = c.benchmark_group("optimizer");
    group.sample_size(10);
    let settings = OptimizerSettings { restarts: 10, seed: 5, ..Default::default() };
    group.bench_function("estimate_c_2_5_5", |b| {
        b.iter(|| black_box(estimate_c(2, 5, 5, &settings).unwrap().best_value))
    });
    group.finish();
}

criterion_group!(benches, bench_signed_sum, bench_geometry, bench_optimizer);
criterion_main!(benches);
