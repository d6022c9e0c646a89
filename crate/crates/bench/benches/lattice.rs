use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ltvcl_bench::{context_from_indices, table2};
use ltvcl_core::context::ExtensionConfig;
use ltvcl_core::galois::{enumerate_concepts, Domain, Engine, ScanOptions};
use ltvcl_core::lia::{check_axioms, Algebra};
use ltvcl_core::tacit::mine;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn enumeration(c: &mut Criterion) {
    let k = table2();
    let mut group = c.benchmark_group("enumerate_table2");
    for (name, engine, domain) in [
        ("extent_generated", Engine::ExtentScan, Domain::Generated),
        ("extent_full", Engine::ExtentScan, Domain::Full),
        ("intent_full", Engine::IntentScan, Domain::Full),
    ] {
        let opts = ScanOptions::new(engine, domain);
        group.bench_function(name, |b| {
            b.iter(|| enumerate_concepts(black_box(&k), &opts).unwrap())
        });
    }
    group.finish();

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cells: Vec<usize> = (0..64).map(|_| rng.gen_range(0..6)).collect();
    let mut group = c.benchmark_group("enumerate_full_by_objects");
    for n_obj in [2, 3, 4, 5] {
        let k = context_from_indices(n_obj, 4, &cells);
        let opts = ScanOptions::new(Engine::ExtentScan, Domain::Full);
        group.bench_with_input(BenchmarkId::from_parameter(n_obj), &k, |b, k| {
            b.iter(|| enumerate_concepts(k, &opts).unwrap())
        });
    }
    group.finish();
}

fn axioms(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_axioms");
    for sizes in [[3u16, 2], [5, 2], [4, 4]] {
        let alg = Algebra::product(&sizes).unwrap();
        group.bench_function(format!("{}x{}", sizes[0], sizes[1]), |b| {
            b.iter(|| check_axioms(black_box(&alg)).unwrap())
        });
    }
    group.finish();
}

fn mining(c: &mut Criterion) {
    let k = table2();
    let opts = ScanOptions::default();
    c.bench_function("mine_table2_paper", |b| {
        b.iter(|| mine(black_box(&k), &ExtensionConfig::paper(), &opts).unwrap())
    });
    let k = context_from_indices(3, 3, &[0, 1, 2, 3, 4, 5, 1, 3, 5]);
    let full = ScanOptions::new(Engine::ExtentScan, Domain::Full);
    let cfg = ExtensionConfig {
        max_meet_arity: 3,
        ..ExtensionConfig::default()
    };
    c.bench_function("mine_3x3_full", |b| {
        b.iter(|| mine(black_box(&k), &cfg, &full).unwrap())
    });
}

criterion_group!(benches, enumeration, axioms, mining);
criterion_main!(benches);
