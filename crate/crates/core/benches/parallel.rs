use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use poincare::oracle::{mc_coherency_with, Amplitudes, JitterModel};
use poincare::sphere::sweep_chi;
use poincare::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn monte_carlo(c: &mut Criterion) {
    let amps = Amplitudes {
        a: 1.0,
        b: 1.0,
        delta: 0.0,
    };
    let mut group = c.benchmark_group("mc_coherency");
    group.sample_size(20);
    for samples in [100_000u64, 1_000_000] {
        let model = JitterModel::for_sigma(std::f64::consts::LN_2, samples, 7).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, samples), &model, |b, model| {
                b.iter(|| mc_coherency_with(black_box(&amps), model, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn chi_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep_chi");
    for points in [1_000usize, 100_000] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, points), &points, |b, &points| {
                b.iter(|| sweep_chi(black_box(2.0), 1.0, 0.3, points, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, monte_carlo, chi_sweep);
criterion_main!(benches);
