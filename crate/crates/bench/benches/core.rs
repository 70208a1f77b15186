use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kpieri_bench::{leg_family, weight_grid, SHAPES};
use kpieri_core::{
    decompose, dim_conformal_blocks, dim_invariants, enumerate_x, gorenstein_check, markov_check, pieri_dim,
    swap_relations, Limits,
};

fn pieri(c: &mut Criterion) {
    let ws = weight_grid(4, 4);
    c.bench_function("pieri_dim grid m=4", |bench| {
        bench.iter(|| {
            let mut n = 0u32;
            for l in &ws {
                for e in &ws {
                    n += u32::from(pieri_dim(l, 3, e).unwrap());
                }
            }
            black_box(n)
        })
    });
    let p = kpieri_core::InterlacingPattern::new(
        kpieri_core::Orientation::Normal,
        vec![20, 17, 11, 6, 2, 0],
        vec![19, 12, 9, 3, 1],
    )
    .unwrap();
    c.bench_function("decompose m=6", |bench| bench.iter(|| black_box(decompose(black_box(&p)))));
}

fn dimensions(c: &mut Criterion) {
    let mut group = c.benchmark_group("labellings");
    for (m, r, s) in leg_family() {
        let id = format!("m={m} r={r:?} s={s:?}");
        group.bench_with_input(BenchmarkId::new("invariants", &id), &(m, &r, &s), |bench, (m, r, s)| {
            bench.iter(|| black_box(dim_invariants(*m, r, s).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("level 3", &id), &(m, &r, &s), |bench, (m, r, s)| {
            bench.iter(|| black_box(dim_conformal_blocks(*m, r, s, 3).unwrap()))
        });
    }
    group.finish();
}

fn chains(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("chains");
    for (m, a, b) in SHAPES {
        let id = format!("m={m} a={a} b={b}");
        group.bench_function(BenchmarkId::new("enumerate_x", &id), |bench| {
            bench.iter(|| black_box(enumerate_x(m, a, b, &limits).unwrap()))
        });
        group.bench_function(BenchmarkId::new("swap_relations", &id), |bench| {
            bench.iter(|| black_box(swap_relations(m, a, b, true, &limits).unwrap()))
        });
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("markov m=3 a=3 b=2 degree 3", |bench| {
        bench.iter(|| black_box(markov_check(3, 3, 2, true, 3, &limits).unwrap()))
    });
    group.bench_function("gorenstein m=3 a=3 b=2", |bench| {
        bench.iter(|| black_box(gorenstein_check(3, 3, 2, true, 4, 100, 42, &limits).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, pieri, dimensions, chains, verification);
criterion_main!(benches);
