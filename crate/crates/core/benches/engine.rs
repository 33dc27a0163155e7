use std::hint::black_box;

use cover_algebra::complex::independence_complex;
use cover_algebra::covers::{enumerate_basic_covers, hilbert_function};
use cover_algebra::gdim::graphical_dimension;
use cover_algebra::{fixtures, Budget, Graph};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn grid(w: usize, h: usize) -> Graph {
    let id = |x: usize, y: usize| y * w + x;
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < h {
                edges.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    Graph::new(w * h, edges).unwrap()
}

fn workloads() -> Vec<(&'static str, Graph)> {
    vec![
        ("E8", fixtures::load("E8").unwrap()),
        ("C6", fixtures::load("C6").unwrap()),
        ("grid3x4", grid(3, 4)),
    ]
}

/// Runs `f` once on the global pool and once on a single-thread pool.
fn compare(c: &mut Criterion, group: &str, f: impl Fn(&Graph) + Sync) {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let mut g = c.benchmark_group(group);
    g.sample_size(20);
    for (name, graph) in workloads() {
        g.bench_with_input(BenchmarkId::new("parallel", name), &graph, |b, graph| {
            b.iter(|| f(graph))
        });
        g.bench_with_input(BenchmarkId::new("sequential", name), &graph, |b, graph| {
            b.iter(|| single.install(|| f(graph)))
        });
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let budget = Budget::default();
    compare(c, "enumerate k=6", |g| {
        black_box(enumerate_basic_covers(g, 6, &budget).unwrap());
    });
    compare(c, "hilbert k=12", |g| {
        black_box(hilbert_function(g, 12, &budget).unwrap());
    });
}

fn search(c: &mut Criterion) {
    let budget = Budget::default();
    compare(c, "gdim", |g| {
        black_box(graphical_dimension(g, &budget).unwrap());
    });
    compare(c, "independence shelling", |g| {
        let delta = independence_complex(g, &budget).unwrap();
        if delta.is_pure() {
            black_box(delta.find_shelling(&budget).unwrap());
        }
    });
}

criterion_group!(benches, enumeration, search);
criterion_main!(benches);
