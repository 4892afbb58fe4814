use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use dsc2::bench::{run_bench, BenchGrid, BenchOptions};
use dsc2::{dsc2, dsc_classic, generate_family, Algorithm, Execution, Family};

fn mignotte(c: &mut Criterion) {
    let mut group = c.benchmark_group("mignotte_n16");
    group.sample_size(20);
    for tau in [16u64, 32, 64, 128] {
        let f = generate_family(Family::Mignotte, 16, tau, 0).unwrap();
        group.bench_with_input(BenchmarkId::new("dsc2", tau), &f, |b, f| {
            b.iter(|| dsc2(black_box(f), None).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("dsc", tau), &f, |b, f| {
            b.iter(|| dsc_classic(black_box(f), None).unwrap())
        });
    }
    group.finish();
}

fn wilkinson(c: &mut Criterion) {
    let mut group = c.benchmark_group("wilkinson");
    group.sample_size(20);
    for n in [10usize, 20] {
        let f = generate_family(Family::Wilkinson, n, 0, 0).unwrap();
        group.bench_with_input(BenchmarkId::new("dsc2", n), &f, |b, f| {
            b.iter(|| dsc2(black_box(f), None).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("dsc", n), &f, |b, f| {
            b.iter(|| dsc_classic(black_box(f), None).unwrap())
        });
    }
    group.finish();
}

// Batch of random instances, mapped sequentially and over the thread pool.
fn batch(c: &mut Criterion) {
    let grid = BenchGrid {
        families: vec![Family::Random, Family::Mignotte],
        degrees: vec![16, 24],
        taus: vec![16, 64],
        seeds: (1..=8).collect(),
        algorithms: vec![Algorithm::Dsc2, Algorithm::Classic],
    };
    let mut group = c.benchmark_group("batch");
    group.sample_size(10);
    for (name, execution) in [
        ("sequential", Execution::Sequential),
        ("parallel", Execution::Parallel),
    ] {
        let opts = BenchOptions {
            execution,
            timing: false,
        };
        group.bench_function(name, |b| {
            b.iter(|| run_bench(black_box(&grid), opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, mignotte, wilkinson, batch);
criterion_main!(benches);
