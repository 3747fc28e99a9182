use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tsvf_core::bidirectional::born_emergence_experiment;
use tsvf_core::decision_tree::enumerate_histories;
use tsvf_core::gedanken::{ellipsoid_experiment, DarkArc, EllipsoidConfig};
use tsvf_core::{MeasurementEvent, Schedule, SeededRng, Step, TwoBoundaryProcess};

fn random_unitary(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_unitary");
    for dim in [4, 16, 64] {
        group.bench_with_input(BenchmarkId::from_parameter(dim), &dim, |b, &dim| {
            let mut rng = SeededRng::new(1);
            b.iter(|| rng.random_unitary(black_box(dim)).unwrap());
        });
    }
    group.finish();
}

fn histories(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_histories");
    for n_events in [4, 8, 12] {
        let mut rng = SeededRng::new(2);
        let mut steps = Vec::new();
        for _ in 0..n_events {
            steps.push(Step::Evolve(rng.random_unitary(2).unwrap()));
            steps.push(Step::Measure(MeasurementEvent::computational(2).unwrap()));
        }
        let schedule = Schedule::from_steps(2, steps).unwrap();
        let proc = TwoBoundaryProcess::new(
            rng.random_state(2).unwrap(),
            rng.random_state(2).unwrap(),
            schedule,
        )
        .unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n_events), &proc, |b, proc| {
            b.iter(|| enumerate_histories(proc).unwrap());
        });
    }
    group.finish();
}

fn born_emergence(c: &mut Criterion) {
    c.bench_function("born_emergence/10000", |b| {
        b.iter(|| born_emergence_experiment(black_box(1.0), 10_000, 3).unwrap());
    });
}

fn ellipsoid(c: &mut Criterion) {
    let cfg = EllipsoidConfig {
        semi_major: 2.0,
        semi_minor: 1.2,
        wavenumber: 31.4,
        n_surface: 4096,
        dark_spots: vec![DarkArc::centered(0.25)],
        relative_phase: 0.0,
        inverse_distance_weighting: false,
    };
    c.bench_function("ellipsoid/4096", |b| {
        b.iter(|| ellipsoid_experiment(black_box(&cfg)).unwrap())
    });
}

criterion_group!(
    benches,
    random_unitary,
    histories,
    born_emergence,
    ellipsoid
);
criterion_main!(benches);
