use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use leibniz_bench::{extension_algebras, irreps, reducible_example};
use leibniz_core::decompose::decompose;
use leibniz_core::sl2::extension_rep_solve;

fn structure(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure_report");
    for (n, alg) in extension_algebras() {
        group.bench_with_input(BenchmarkId::from_parameter(n), &alg, |b, alg| {
            b.iter(|| black_box(alg.structure_report().unwrap()))
        });
    }
    group.finish();
}

fn levi(c: &mut Criterion) {
    let mut group = c.benchmark_group("levi_subalgebra");
    for (n, alg) in extension_algebras() {
        group.bench_with_input(BenchmarkId::from_parameter(n), &alg, |b, alg| {
            b.iter(|| black_box(alg.levi_subalgebra().unwrap()))
        });
    }
    group.finish();
}

fn irreducibility(c: &mut Criterion) {
    let mut group = c.benchmark_group("irreducibility");
    for (m, rep) in irreps(6) {
        group.bench_with_input(BenchmarkId::from_parameter(m), &rep, |b, rep| {
            b.iter(|| black_box(rep.irreducibility()))
        });
    }
    group.finish();
}

fn extension(c: &mut Criterion) {
    let mut group = c.benchmark_group("extension_rep_solve");
    group.sample_size(10);
    for (n, m) in [(5, 1), (6, 2), (7, 2), (8, 3)] {
        group.bench_with_input(
            BenchmarkId::new(format!("n{n}"), m),
            &(n, m),
            |b, &(n, m)| b.iter(|| black_box(extension_rep_solve(n, m).unwrap())),
        );
    }
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    let rep = reducible_example();
    c.bench_function("decompose_example", |b| {
        b.iter(|| black_box(decompose(&rep).unwrap()))
    });
}

criterion_group!(
    benches,
    structure,
    levi,
    irreducibility,
    extension,
    decomposition
);
criterion_main!(benches);
