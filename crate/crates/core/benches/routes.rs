use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use simsek_kit::exec::Exec;
use simsek_kit::harness::{run_suite, GridSpec, SuiteConfig};
use simsek_kit::simsek::{Route, SimsekTriangle};

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn triangle(c: &mut Criterion) {
    let mut group = c.benchmark_group("triangle_10x10");
    group.sample_size(10);
    for route in Route::ALL {
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, route), &route, |b, &route| {
                b.iter(|| SimsekTriangle::compute(black_box(route), 10, 10, exec))
            });
        }
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite_fixed_grid");
    group.sample_size(10);
    let grid = GridSpec::fixed_only();
    let config = SuiteConfig::default();
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |b| b.iter(|| run_suite(None, &grid, &config, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, triangle, suite);
criterion_main!(benches);
