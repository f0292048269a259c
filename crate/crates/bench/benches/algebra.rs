use std::hint::black_box;
use std::sync::Arc;

use contentalg_bench::{lab, trunc3};
use contentalg_core::contentlab::{dm_exponent, gaussian_check};
use contentalg_core::ideals::{enumerate_ideals, spectrum};
use contentalg_core::{FiniteRing, Monoid, DEFAULT_GEN_CAP};
use criterion::{BenchmarkId, Criterion};

fn rings(c: &mut Criterion) {
    let mut group = c.benchmark_group("ring");
    group.bench_function("build_trunc3", |b| b.iter(trunc3));
    let r = trunc3();
    group.bench_function("spectrum_trunc3", |b| b.iter(|| spectrum(black_box(&r)).unwrap()));
    group.bench_function("ideals_trunc3", |b| b.iter(|| enumerate_ideals(black_box(&r), DEFAULT_GEN_CAP).unwrap()));
    let z = Arc::new(FiniteRing::zmod(720).unwrap());
    group.bench_function("spectrum_z720", |b| b.iter(|| spectrum(black_box(&z)).unwrap()));
    group.finish();
}

fn pair_scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("pair_scan");
    group.sample_size(10);
    for (name, ring) in [("Z/8", Arc::new(FiniteRing::zmod(8).unwrap())), ("trunc3", trunc3())] {
        // A fresh lab each time, so the pair table is rebuilt.
        group.bench_function(BenchmarkId::new("pair_table", name), |b| {
            b.iter(|| lab(ring.clone(), Monoid::free(1)).pairs().content.len())
        });
        let l = lab(ring.clone(), Monoid::free(1));
        l.pairs();
        group.bench_function(BenchmarkId::new("gaussian", name), |b| b.iter(|| gaussian_check(&l)));
    }
    group.finish();
}

fn products(c: &mut Criterion) {
    let l = lab(trunc3(), Monoid::free(1));
    let f = l.b.parse("a + b*X^1 + a^2*X^2").unwrap();
    let g = l.b.parse("b + a*X^1 + ab*X^3").unwrap();
    let mut group = c.benchmark_group("monoid_ring");
    group.bench_function("mul", |b| b.iter(|| l.b.mul(black_box(&f), black_box(&g))));
    group.bench_function("dm_exponent", |b| b.iter(|| dm_exponent(&l.b, &f, &g).unwrap()));
    group.finish();
}

fn annihilators(c: &mut Criterion) {
    // Over a torsion monoid the scalar route does not apply, so this is the
    // bounded search over the universe.
    let l = lab(Arc::new(FiniteRing::zmod(4).unwrap()), Monoid::group(0, vec![3]).unwrap());
    let f = l.b.parse("1 + X^1 + X^2").unwrap();
    let g = l.b.parse("1 + 2*X^1").unwrap();
    let mut group = c.benchmark_group("annihilator_search");
    group.bench_function("zero_divisor", |b| b.iter(|| l.bounded_killer(black_box(&f))));
    group.bench_function("regular", |b| b.iter(|| l.bounded_killer(black_box(&g))));
    group.finish();
}

criterion::criterion_group!(benches, rings, pair_scans, products, annihilators);
criterion::criterion_main!(benches);
