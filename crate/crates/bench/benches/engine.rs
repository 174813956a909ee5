use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pmf_core::constructions::{build_extremal, ExtremalKind};
use pmf_core::forcing::{forcing_number, forcing_polynomial, is_forcing_set, SweepBudget};
use pmf_core::graph::build_generalized_petersen;
use pmf_core::matchings::enumerate_perfect_matchings;
use std::hint::black_box;

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_perfect_matchings");
    for n in [12usize, 16, 20] {
        let g = build_generalized_petersen(n, 2).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| enumerate_perfect_matchings(black_box(g)).count())
        });
    }
    group.finish();
}

fn bench_kotzig_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_forcing_set_kotzig");
    for n in [50usize, 100, 400] {
        let g = build_generalized_petersen(n, 2).unwrap();
        let recipe = build_extremal(&g, ExtremalKind::Type1Max).unwrap();
        let set = recipe.textual_set.clone().unwrap();
        let s = pmf_core::ForcingSet::from_edges(&g, &recipe.matching, &set).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| is_forcing_set(black_box(&g), &recipe.matching, &s).unwrap())
        });
    }
    group.finish();
}

fn bench_forcing_number(c: &mut Criterion) {
    let mut group = c.benchmark_group("forcing_number");
    group.sample_size(20);
    for n in [16usize, 20, 25] {
        let g = build_generalized_petersen(n, 2).unwrap();
        let m = build_extremal(&g, ExtremalKind::Type1Max).unwrap().matching;
        group.bench_with_input(BenchmarkId::new("all_spokes", n), &n, |b, _| {
            b.iter(|| forcing_number(black_box(&g), &m).unwrap())
        });
    }
    let g = build_generalized_petersen(34, 2).unwrap();
    let m = build_extremal(&g, ExtremalKind::Type2Max).unwrap().matching;
    group.bench_function("type2_max_n34", |b| {
        b.iter(|| forcing_number(black_box(&g), &m).unwrap())
    });
    group.finish();
}

fn bench_polynomial_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("forcing_polynomial");
    group.sample_size(10);
    for n in [12usize, 16] {
        let g = build_generalized_petersen(n, 2).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| forcing_polynomial(black_box(g), SweepBudget::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_kotzig_check,
    bench_forcing_number,
    bench_polynomial_sweep
);
criterion_main!(benches);
