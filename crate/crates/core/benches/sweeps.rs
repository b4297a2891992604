use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use alon_tarsi::color::is_f_choosable_with;
use alon_tarsi::euler::{eulerian_counts_dp, eulerian_counts_subsets};
use alon_tarsi::exec::Exec;
use alon_tarsi::patterns::moser_spindle;
use alon_tarsi::sweep::{run_sweep, search_two_marked, Constraints, Mode, Scope, SweepConfig};
use alon_tarsi::{Graph, LabeledPair, Orientation};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("main_lemma_n6", name), &exec, |b, &exec| {
            b.iter(|| {
                run_sweep(&SweepConfig {
                    n_max: 6,
                    scope: Scope::MainLemma,
                    exec,
                    checkpoint: None,
                })
                .unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("catalog_at_n6", name), &exec, |b, &exec| {
            let constraints = Constraints {
                two_connected: true,
                unstretched: true,
            };
            b.iter(|| search_two_marked(6, Mode::At, constraints, exec).unwrap())
        });
    }
    group.finish();
}

fn choosability(c: &mut Criterion) {
    let g = Graph::complete(5);
    let f = LabeledPair::marked(g.clone(), 0).unwrap().degree_bound();
    let mut group = c.benchmark_group("choosability_k5_hx");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| is_f_choosable_with(&g, &f, exec).unwrap())
        });
    }
    group.finish();
}

fn euler_routes(c: &mut Criterion) {
    let (g, _) = moser_spindle();
    let reversed: Vec<bool> = (0..g.m()).map(|i| i % 3 == 0).collect();
    let d = Orientation::new(g, reversed).unwrap();
    let mut group = c.benchmark_group("euler_counts_spindle");
    group.bench_function("subsets", |b| b.iter(|| eulerian_counts_subsets(&d).unwrap()));
    group.bench_function("dp", |b| b.iter(|| eulerian_counts_dp(&d).unwrap()));
    group.finish();
}

criterion_group!(benches, sweeps, choosability, euler_routes);
criterion_main!(benches);
