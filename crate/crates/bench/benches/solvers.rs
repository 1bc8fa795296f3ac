use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use mstcover::cover::greedy_cover_with;
use mstcover::oracle::{exact_min_cover, Objective};
use mstcover::{perfect_cover, progress, SolveOptions};
use mstcover_bench::{exact_fixtures, random_fixtures};

fn bench_progress(c: &mut Criterion) {
    let mut group = c.benchmark_group("progress");
    for (label, inst) in random_fixtures() {
        let half: Vec<usize> = (0..inst.graph.edge_count()).step_by(2).collect();
        group.bench_function(BenchmarkId::from_parameter(&label), |b| {
            b.iter(|| progress(&inst.graph, inst.profile.agent(0), black_box(&half)))
        });
    }
    group.finish();
}

fn bench_greedy(c: &mut Criterion) {
    let mut group = c.benchmark_group("greedy_cover");
    group.sample_size(20);
    for (label, inst) in random_fixtures() {
        for parallel in [false, true] {
            let id = BenchmarkId::new(if parallel { "parallel" } else { "serial" }, &label);
            group.bench_function(id, |b| {
                b.iter(|| {
                    greedy_cover_with(&inst.graph, &inst.profile, SolveOptions { parallel })
                        .unwrap()
                })
            });
        }
    }
    group.finish();
}

fn bench_perfect(c: &mut Criterion) {
    let mut group = c.benchmark_group("perfect_cover");
    for (label, inst) in random_fixtures() {
        group.bench_function(BenchmarkId::from_parameter(&label), |b| {
            b.iter(|| perfect_cover(&inst.graph, &inst.profile))
        });
    }
    group.finish();
}

fn bench_exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_min_cover");
    group.sample_size(10);
    for (label, inst) in exact_fixtures() {
        group.bench_function(BenchmarkId::from_parameter(&label), |b| {
            b.iter(|| exact_min_cover(&inst.graph, &inst.profile, Objective::Cardinality).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_progress,
    bench_greedy,
    bench_perfect,
    bench_exact
);
criterion_main!(benches);
