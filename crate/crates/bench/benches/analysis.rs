use std::hint::black_box;

use apt_core::generators::{bitnet, philnet_bistate};
use apt_core::structure::{invariants, minimal_siphons, InvariantKind};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn reachability(c: &mut Criterion) {
    let mut group = c.benchmark_group("reachability_graph");
    for n in [4usize, 6, 8] {
        let net = bitnet(n);
        group.bench_with_input(BenchmarkId::new("bitnet", n), &net, |b, net| {
            b.iter(|| black_box(net.reachability_graph().unwrap().num_states()))
        });
    }
    group.finish();
}

fn coverability(c: &mut Criterion) {
    let net = bitnet(10);
    c.bench_function("coverability_graph/bitnet/10", |b| {
        b.iter(|| black_box(net.coverability_graph().num_states()))
    });
}

fn structure(c: &mut Criterion) {
    let net = philnet_bistate(5);
    c.bench_function("s_invariants/philnet/5", |b| {
        b.iter(|| black_box(invariants(&net, InvariantKind::S).len()))
    });
    c.bench_function("siphons/philnet/5", |b| {
        b.iter(|| black_box(minimal_siphons(&net).unwrap().len()))
    });
}

criterion_group!(benches, reachability, coverability, structure);
criterion_main!(benches);
