use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use defeasor_bench::{random_framework, random_theory};
use defeasor_core::abmodels::minimal_models;
use defeasor_core::af::{grounded_extension, preferred_extensions, stable_extensions};
use defeasor_core::corpus::Corpus;
use defeasor_core::diff::diff;
use defeasor_core::structured::parse_rule_base;

fn semantics(c: &mut Criterion) {
    let mut group = c.benchmark_group("semantics");
    for n in [8, 16, 24] {
        let f = random_framework(n, 0.15, n as u64);
        group.bench_with_input(BenchmarkId::new("grounded", n), &f, |b, f| {
            b.iter(|| grounded_extension(black_box(f)))
        });
        group.bench_with_input(BenchmarkId::new("preferred", n), &f, |b, f| {
            b.iter(|| preferred_extensions(black_box(f)))
        });
        group.bench_with_input(BenchmarkId::new("stable", n), &f, |b, f| {
            b.iter(|| stable_extensions(black_box(f)))
        });
    }
    group.finish();
}

fn minimal(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal_models");
    for n in [8, 12, 16] {
        let t = random_theory(n, n, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &t, |b, t| {
            b.iter(|| minimal_models(black_box(t)).unwrap())
        });
    }
    group.finish();
}

fn corpus(c: &mut Criterion) {
    let corpus = Corpus::bundled();
    c.bench_function("corpus/run_all", |b| b.iter(|| corpus.run_all(None)));

    let dixon = std::fs::read_to_string(corpus.root().join("dixon_zombie/rulebase.rb")).unwrap();
    let rb = parse_rule_base(&dixon).unwrap();
    c.bench_function("diff/dixon_zombie", |b| b.iter(|| diff(black_box(&rb)).unwrap()));
}

criterion_group!(benches, semantics, minimal, corpus);
criterion_main!(benches);
