use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cubictsp::construct::FamilyKind;
use cubictsp::random::random_cubic_graph;
use cubictsp::verify::{theorem_table, TableConfig};
use cubictsp::tsp::held_karp_tsp_with;
use cubictsp::{min_excess, Execution, SolverConfig, Strategy};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive_min_excess");
    group.sample_size(10);
    for order in [28, 36] {
        let g = random_cubic_graph(order, 7, 10_000).unwrap();
        for (name, execution) in MODES {
            let cfg = SolverConfig { execution, ..SolverConfig::default().with_strategy(Strategy::Exhaustive) };
            group.bench_with_input(BenchmarkId::new(name, order), &g, |b, g| {
                b.iter(|| min_excess(black_box(g), &cfg).unwrap().excess)
            });
        }
    }
    group.finish();
}

fn held_karp(c: &mut Criterion) {
    let mut group = c.benchmark_group("held_karp");
    group.sample_size(10);
    for order in [14, 16] {
        let g = random_cubic_graph(order, 11, 10_000).unwrap();
        for (name, execution) in MODES {
            group.bench_with_input(BenchmarkId::new(name, order), &g, |b, g| {
                b.iter(|| held_karp_tsp_with(black_box(g), 18, execution).unwrap())
            });
        }
    }
    group.finish();
}

fn family_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem_table");
    group.sample_size(10);
    for (name, execution) in MODES {
        let mut cfg = TableConfig::default();
        cfg.solver.execution = execution;
        group.bench_function(BenchmarkId::new(name, "planar_k5"), |b| {
            b.iter(|| theorem_table(FamilyKind::Planar, black_box(5), &cfg).unwrap().len())
        });
    }
    group.finish();
}

criterion_group!(benches, exhaustive, held_karp, family_table);
criterion_main!(benches);
