use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use zdg_bench::{composite_moduli, sample_vertex};
use zdg_core::{arith, oracle, theorems, verify, CheckKind, Modulus, ZdGraph};

fn factorization(c: &mut Criterion) {
    let inputs = composite_moduli(1_000_000_000_000, 64, 7_919_113);
    c.bench_function("factorize/12-digit", |b| {
        b.iter(|| {
            for &n in &inputs {
                black_box(arith::factorize(black_box(n)).unwrap());
            }
        })
    });
    let semiprime = 4_294_967_291u64 * 2_147_483_647;
    c.bench_function("factorize/semiprime-62-bit", |b| {
        b.iter(|| arith::factorize(black_box(semiprime)).unwrap())
    });
}

fn theorem_queries(c: &mut Criterion) {
    let moduli: Vec<(Modulus, u64)> = composite_moduli(1_000_000_000_000, 64, 7_919_113)
        .into_iter()
        .map(|n| (Modulus::new(n).unwrap(), sample_vertex(n)))
        .collect();
    let mut group = c.benchmark_group("theorem");
    group.bench_function("degree", |b| {
        b.iter(|| {
            for (m, a) in &moduli {
                black_box(theorems::degree_theorem(m, *a).unwrap());
            }
        })
    });
    group.bench_function("center-membership", |b| {
        b.iter(|| {
            for (m, a) in &moduli {
                black_box(theorems::is_center_member(m, *a));
            }
        })
    });
    group.bench_function("cut-edge", |b| {
        b.iter(|| {
            for (m, a) in &moduli {
                let p = m.primes().next().unwrap();
                if p != *a {
                    black_box(theorems::is_cut_edge_theorem(m, *a, p).unwrap());
                }
            }
        })
    });
    group.finish();
}

fn oracle_engine(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for n in [720u64, 5_040, 30_030] {
        let g = ZdGraph::new(n).unwrap();
        group.bench_with_input(BenchmarkId::new("center", n), &g, |b, g| {
            b.iter(|| oracle::center_oracle(g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("bridges", n), &g, |b, g| {
            b.iter(|| oracle::bridges_oracle(g).unwrap())
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for jobs in [1usize, 4] {
        group.bench_with_input(
            BenchmarkId::new("all-checks-2..300", jobs),
            &jobs,
            |b, &jobs| b.iter(|| verify::run_suite(2, 300, &CheckKind::ALL, jobs, 50_000).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(
    benches,
    factorization,
    theorem_queries,
    oracle_engine,
    sweep
);
criterion_main!(benches);
