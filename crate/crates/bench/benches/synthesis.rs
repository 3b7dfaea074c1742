use std::hint::black_box;

use apt_bench::synthesis_inputs;
use apt_core::synthesis::synthesize;
use criterion::{criterion_group, criterion_main, Criterion};

fn synthesis(c: &mut Criterion) {
    let mut group = c.benchmark_group("synthesize");
    group.sample_size(10);
    for (id, lts, props) in synthesis_inputs() {
        group.bench_function(id, |b| b.iter(|| black_box(synthesize(&lts, &props).unwrap().success)));
    }
    group.finish();
}

criterion_group!(benches, synthesis);
criterion_main!(benches);
