use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use leibniz::checker::{run_instances, suite_instances, SuiteConfig};
use leibniz::constructions::catalogue;
use leibniz::constructions::generate::generate;
use leibniz::{Bimodule, FieldSpec, SpinConfig, Strategy};

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn validate(c: &mut Criterion) {
    let mut group = c.benchmark_group("validate");
    let alg = generate(3, FieldSpec::prime(3).unwrap(), 12, 40)
        .max_by_key(|i| i.algebra.dim())
        .unwrap()
        .algebra;
    for (name, s) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new(name, alg.dim()), &s, |b, &s| {
            b.iter(|| alg.validate_with(s))
        });
    }
    group.finish();
}

fn minimal_submodule(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal_submodule");
    let f = FieldSpec::prime(3).unwrap();
    let alg = Arc::new(catalogue::hsd_sl2_natural(f).unwrap());
    let adjoint = Bimodule::adjoint(alg);
    for (name, strategy) in STRATEGIES {
        let cfg = SpinConfig {
            strategy,
            ..SpinConfig::default()
        };
        group.bench_function(BenchmarkId::new(name, adjoint.dim()), |b| {
            b.iter(|| adjoint.minimal_submodule(&cfg).unwrap())
        });
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    let base = SuiteConfig {
        fields: vec![FieldSpec::prime(2).unwrap(), FieldSpec::prime(3).unwrap()],
        max_dim: 5,
        budget: 40,
        ..SuiteConfig::default()
    };
    let instances = suite_instances(&base);
    for (name, strategy) in STRATEGIES {
        let cfg = SuiteConfig {
            spin: SpinConfig {
                strategy,
                ..SpinConfig::default()
            },
            ..base.clone()
        };
        group.bench_function(BenchmarkId::new(name, instances.len()), |b| {
            b.iter(|| run_instances(&cfg, &instances))
        });
    }
    group.finish();
}

criterion_group!(benches, validate, minimal_submodule, suite);
criterion_main!(benches);
