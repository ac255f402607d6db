use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use elastic_mds::solve;
use elastic_mds_bench::cells;

fn full_solves(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    group.sample_size(20);
    for (label, data, opts) in cells() {
        group.bench_function(&label, |b| {
            b.iter(|| solve(black_box(&data), black_box(&opts)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, full_solves);
criterion_main!(benches);
