//! Embedding and minor extraction on one thread versus the full rayon pool.
//! Build with `--no-default-features` to measure the plain-iterator fallback.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use planar_core::graph::Graph;
use planar_core::oracle::gen_triangulation;
use planar_core::{embed, find_kuratowski};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let all = rayon::ThreadPoolBuilder::new().build().unwrap();
    vec![("one-thread", one), ("pool", all)]
}

fn triangulation_plus_edge(n: usize) -> Graph {
    let (t, _) = gen_triangulation(n, 5).unwrap();
    let mut pairs = t.edges().to_vec();
    let extra = (1..n).find(|&v| !t.has_edge(0, v)).unwrap();
    pairs.push((0, extra));
    Graph::new(n, &pairs).unwrap()
}

fn bench_embed(c: &mut Criterion) {
    let mut group = c.benchmark_group("embed");
    group.sample_size(10);
    for n in [500, 2000] {
        let (g, _) = gen_triangulation(n, 1).unwrap();
        for (name, pool) in pools() {
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| pool.install(|| embed(g).unwrap()))
            });
        }
    }
    group.finish();
}

fn bench_kuratowski(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_kuratowski");
    group.sample_size(10);
    let g = triangulation_plus_edge(300);
    for (name, pool) in pools() {
        group.bench_with_input(BenchmarkId::new(name, 300), &g, |b, g| {
            b.iter(|| pool.install(|| find_kuratowski(g).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_embed, bench_kuratowski);
criterion_main!(benches);
