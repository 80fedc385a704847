use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qtcat::labelled::fold_connected_graphs;
use qtcat::{family_with, identity_check, Config, PolynomialFamily, Strategy};

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn families(c: &mut Criterion) {
    let mut group = c.benchmark_group("family");
    group.sample_size(10);
    for n in [9usize, 11] {
        for (label, strategy) in STRATEGIES {
            let config = Config::default().with_strategy(strategy);
            group.bench_with_input(BenchmarkId::new(format!("F/{label}"), n), &n, |b, &n| {
                b.iter(|| family_with(PolynomialFamily::F, black_box(n), &config).unwrap())
            });
        }
    }
    group.finish();
}

fn graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("connected_graphs");
    group.sample_size(10);
    for (label, strategy) in STRATEGIES {
        let config = Config::default().with_strategy(strategy);
        group.bench_function(BenchmarkId::new(label, 6), |b| {
            b.iter(|| {
                fold_connected_graphs(black_box(6), &config, || 0u64, |acc, g| acc + g.edge_count() as u64, |a, b| a + b)
                    .unwrap()
            })
        });
    }
    group.finish();
}

fn identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("identity");
    group.sample_size(10);
    for (label, strategy) in STRATEGIES {
        let config = Config::default().with_strategy(strategy);
        group.bench_function(BenchmarkId::new(format!("omega_involution/{label}"), 10), |b| {
            b.iter(|| identity_check("omega_involution", black_box(10), &config).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, families, graphs, identities);
criterion_main!(benches);
