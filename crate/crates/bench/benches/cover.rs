use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use steiner_cover::{
    build_cover, convex_hull_2d, optimal_omega_numeric, steiner_point_directional, union_area_exact,
    union_measure_mc, NMConfig, Point,
};
use steiner_cover_bench::{off_center, polygon, tetrahedron};

fn hull(c: &mut Criterion) {
    let mut g = c.benchmark_group("convex_hull_2d");
    for n in [16, 256, 4096] {
        let ps = polygon(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &ps, |b, ps| b.iter(|| convex_hull_2d(black_box(ps))));
    }
    g.finish();
}

fn exact_area(c: &mut Criterion) {
    let mut g = c.benchmark_group("union_area_exact");
    for n in [8, 32, 128] {
        let cover = build_cover(&polygon(n), &off_center()).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &cover, |b, cv| b.iter(|| union_area_exact(black_box(cv))));
    }
    g.finish();
}

fn monte_carlo(c: &mut Criterion) {
    let mut g = c.benchmark_group("union_measure_mc");
    g.sample_size(10);
    let planar = build_cover(&polygon(32), &off_center()).unwrap();
    g.bench_function("2d_1e5", |b| b.iter(|| union_measure_mc(black_box(&planar), 100_000, 1)));
    let spatial = build_cover(&tetrahedron(), &Point::xyz(0.25, 0.25, 0.25)).unwrap();
    g.bench_function("3d_1e5", |b| b.iter(|| union_measure_mc(black_box(&spatial), 100_000, 1)));
    g.finish();
}

fn directional(c: &mut Criterion) {
    let mut g = c.benchmark_group("steiner_point_directional");
    g.sample_size(10);
    let ps = tetrahedron();
    g.bench_function("tetra_1e5", |b| b.iter(|| steiner_point_directional(black_box(&ps), 100_000, 1)));
    g.finish();
}

fn nelder_mead(c: &mut Criterion) {
    let mut g = c.benchmark_group("optimal_omega_numeric");
    g.sample_size(10);
    let ps = polygon(16);
    g.bench_function("planar_16", |b| b.iter(|| optimal_omega_numeric(black_box(&ps), &NMConfig::planar())));
    g.finish();
}

criterion_group!(benches, hull, exact_area, monte_carlo, directional, nelder_mead);
criterion_main!(benches);
