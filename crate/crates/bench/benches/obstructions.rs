use std::hint::black_box;

use ccobstruct::chern::{kernel_membership, kernel_relation};
use ccobstruct::numtheory::{binom_exact, binom_mod_lucas};
use ccobstruct::search::search;
use ccobstruct::spaces::divisor_complement;
use ccobstruct::{classify, CoefficientRing};
use ccobstruct_bench::acceptance_grid;
use criterion::{criterion_group, criterion_main, Criterion};

fn bench_binomials(c: &mut Criterion) {
    c.bench_function("binom_exact 10000 choose 500", |b| b.iter(|| binom_exact(black_box(10_000), 500)));
    c.bench_function("binom_mod_lucas large", |b| {
        b.iter(|| binom_mod_lucas(black_box(987_654_321), black_box(123_456_789), 97))
    });
}

fn bench_classify(c: &mut Criterion) {
    let x = divisor_complement(40, 41, CoefficientRing::Integers).unwrap();
    c.bench_function("classify X_{40,41}", |b| b.iter(|| classify(black_box(&x), &[3, 5, 7, 11, 13])));
}

fn bench_kernel(c: &mut Criterion) {
    let rel = kernel_relation(12, 64).unwrap();
    c.bench_function("kernel_membership k=12", |b| b.iter(|| kernel_membership(black_box(&rel), 64)));
}

fn bench_search(c: &mut Criterion) {
    let spec = acceptance_grid();
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    for workers in [1, 4] {
        group.bench_function(format!("grid workers={workers}"), |b| b.iter(|| search(&spec, workers).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_binomials, bench_classify, bench_kernel, bench_search);
criterion_main!(benches);
