use std::hint::black_box;

use coxdet::partition::Partition;
use coxdet::tower::build_tower;
use coxdet::typeb::{closed_counts, enumerated_counts, n_ab, MultCharB};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn closed(c: &mut Criterion) {
    let mut g = c.benchmark_group("closed_counts");
    for n in [16usize, 64, 256, 1024] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| closed_counts(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn enumerated(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerated_counts");
    g.sample_size(10);
    for n in [8usize, 12, 16] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerated_counts(black_box(n)))
        });
    }
    g.finish();
}

fn per_size(c: &mut Criterion) {
    c.bench_function("n_ab eps (300, 212)", |b| {
        b.iter(|| n_ab(MultCharB::Eps, black_box(300), black_box(212)))
    });
}

fn towers(c: &mut Criterion) {
    let lambda = Partition::new((1..=40).rev().collect()).unwrap();
    c.bench_function("build_tower staircase 40", |b| b.iter(|| build_tower(black_box(&lambda))));
}

criterion_group!(benches, closed, enumerated, per_size, towers);
criterion_main!(benches);
