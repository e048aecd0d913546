use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use finring_bench::{order_sixteen, reversed};
use finring_core::morphisms::are_isomorphic;
use finring_core::search::{audit_theorem, enumerate_rings, AuditOptions, EnumerationOptions};
use finring_core::structure::all_ideals;
use finring_core::build_cyclic;

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_rings");
    g.sample_size(10);
    let opts = EnumerationOptions {
        allow_large: true,
        jobs: 1,
    };
    for n in [8usize, 12, 16] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_rings(n, true, &opts).unwrap())
        });
    }
    g.finish();
}

fn isomorphism(c: &mut Criterion) {
    let mut g = c.benchmark_group("are_isomorphic");
    for r in order_sixteen() {
        let s = reversed(&r);
        g.bench_function(r.label(), |b| b.iter(|| are_isomorphic(&r, &s).unwrap()));
    }
    g.finish();
}

fn ideals(c: &mut Criterion) {
    let mut g = c.benchmark_group("all_ideals");
    for r in order_sixteen() {
        g.bench_function(r.label(), |b| b.iter(|| all_ideals(&r).unwrap()));
    }
    g.finish();
}

fn audit(c: &mut Criterion) {
    let z4 = build_cyclic(4).unwrap();
    let opts = AuditOptions {
        embed_bound: Some(8),
        boolean_factor_bound: 2,
    };
    c.bench_function("audit_theorem/Z4", |b| b.iter(|| audit_theorem(&z4, &opts).unwrap()));
}

criterion_group!(benches, enumeration, isomorphism, ideals, audit);
criterion_main!(benches);
