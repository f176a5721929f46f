use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use exponacci::continuation::sample_curve;
use exponacci::identities::{fuzz_identity, FuzzConfig, IdentityKind};
use exponacci::spiral::{arc_points_outwinding, corner_points};
use exponacci::{Params, Sequence};

const OUT: Params = Params::new(0.5, 0.8, 1.0, 0.9, 3.0, 4.0);

fn spiral(c: &mut Criterion) {
    let seq = Sequence::new(OUT).unwrap();
    c.bench_function("corner_points 100", |b| {
        b.iter(|| corner_points(&seq, black_box(100)))
    });
    c.bench_function("arc 60 samples", |b| {
        b.iter(|| arc_points_outwinding(&seq, black_box(12), 60))
    });
}

fn curve(c: &mut Criterion) {
    let seq = Sequence::new(Params::FIBONACCI).unwrap();
    c.bench_function("sample_curve 1000", |b| {
        b.iter(|| sample_curve(&seq, black_box(10.0), 1000))
    });
}

fn fuzz(c: &mut Criterion) {
    let cfg = FuzzConfig {
        samples: 100,
        ..FuzzConfig::default()
    };
    c.bench_function("fuzz shannon 100", |b| {
        b.iter(|| fuzz_identity(IdentityKind::Shannon, black_box(&cfg)))
    });
}

criterion_group!(benches, spiral, curve, fuzz);
criterion_main!(benches);
