use criterion::{black_box, criterion_group, criterion_main, Criterion};

use chyp_bench::BENCH_RANGE;
use chyp_core::numerics::{Backend, Interval, DEFAULT_ZERO_TOL};
use chyp_core::verification::{
    certify_conditions, condition_enclosures, scan, verify, VerifyOptions, DEFAULT_MAX_DEPTH,
};
use chyp_core::{build_configuration, TriangleConfiguration};

fn construction(c: &mut Criterion) {
    c.bench_function("build_configuration", |b| {
        b.iter(|| build_configuration(black_box(2.22)).unwrap())
    });
    c.bench_function("build_enclosure", |b| {
        b.iter(|| TriangleConfiguration::build(black_box(Interval::point(2.22))).unwrap())
    });
    c.bench_function("condition_enclosures_centred", |b| {
        b.iter(|| condition_enclosures(black_box(Interval::new(2.22, 2.2201))).unwrap())
    });
}

fn pipeline(c: &mut Criterion) {
    c.bench_function("verify_default", |b| {
        b.iter(|| verify(black_box(&VerifyOptions::default())).unwrap())
    });
    c.bench_function("scan_22_fast", |b| {
        b.iter(|| scan(BENCH_RANGE.0, BENCH_RANGE.1, 22, Backend::Fast, DEFAULT_ZERO_TOL).unwrap())
    });
    let mut slow = c.benchmark_group("certify");
    slow.sample_size(10);
    slow.bench_function("certify_full_range", |b| {
        b.iter(|| certify_conditions(BENCH_RANGE.0, BENCH_RANGE.1, DEFAULT_MAX_DEPTH).unwrap())
    });
    slow.finish();
}

criterion_group!(benches, construction, pipeline);
criterion_main!(benches);
