use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use palword_bench::{fibonacci, sierpinski, thue_morse};
use palword_core::palcore::{length_series, pal_length_series, reference_pal_length_series};
use palword_core::runs::{coverage_profile, find_runs, measure_profile, CoverageSemantics};
use palword_core::UnitKind;

fn pal_series(c: &mut Criterion) {
    let mut g = c.benchmark_group("pal_length_series");
    g.sample_size(10);
    for n in [1 << 14, 1 << 16, 1 << 18] {
        let w = thue_morse(n);
        g.throughput(Throughput::Elements(n as u64));
        g.bench_with_input(BenchmarkId::new("thue_morse", n), &w, |b, w| b.iter(|| pal_length_series(black_box(w))));
    }
    let w = thue_morse(1 << 12);
    g.bench_function("reference/4096", |b| b.iter(|| reference_pal_length_series(black_box(&w))));
    g.finish();
}

fn priv_series(c: &mut Criterion) {
    let mut g = c.benchmark_group("priv_length_series");
    g.sample_size(10);
    for n in [1 << 10, 1 << 12] {
        let w = fibonacci(n);
        g.bench_with_input(BenchmarkId::new("fibonacci", n), &w, |b, w| {
            b.iter(|| length_series(black_box(w), UnitKind::Privileged))
        });
    }
    g.finish();
}

fn runs(c: &mut Criterion) {
    let mut g = c.benchmark_group("runs");
    g.sample_size(10);
    for n in [1 << 14, 1 << 16, 1 << 18] {
        let w = fibonacci(n);
        g.throughput(Throughput::Elements(n as u64));
        g.bench_with_input(BenchmarkId::new("find_runs/fibonacci", n), &w, |b, w| b.iter(|| find_runs(black_box(w), 2)));
    }
    let w = sierpinski(1 << 16);
    g.bench_function("coverage/sierpinski/65536", |b| {
        b.iter(|| coverage_profile(black_box(&w), 3, CoverageSemantics::Inclusive))
    });
    g.bench_function("measure/sierpinski/65536", |b| b.iter(|| measure_profile(black_box(&w), 3)));
    g.finish();
}

criterion_group!(benches, pal_series, priv_series, runs);
criterion_main!(benches);
