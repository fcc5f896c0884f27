use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hcube_core::*;

fn random_graph(n: usize, max_degree: usize) -> Graph {
    generate(GraphKind::RandomBoundedDegree {
        n,
        m: n * max_degree / 3,
        max_degree,
        seed: 7,
    })
    .unwrap()
}

fn labelling(c: &mut Criterion) {
    let mut group = c.benchmark_group("labelling");
    group.sample_size(10);
    for n in [100, 1000, 10_000] {
        let g = random_graph(n, 6);
        group.bench_with_input(BenchmarkId::new("greedy", n), &g, |b, g| {
            b.iter(|| greedy_degen_label(g).unwrap())
        });
        let order = VertexOrdering::identity(n);
        let band = generate(GraphKind::PathPower { n, k: 4 }).unwrap();
        group.bench_with_input(BenchmarkId::new("bandwidth", n), &band, |b, g| {
            b.iter(|| bandwidth_label(g, &order).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("verify", n), &g, |b, g| {
            let f = greedy_degen_label(g).unwrap();
            b.iter(|| verify_antimagic(g, &f).unwrap())
        });
    }
    group.finish();
}

fn drawing(c: &mut Criterion) {
    let mut group = c.benchmark_group("drawing");
    group.sample_size(20);
    for n in [50, 500] {
        let g = random_graph(n, 4);
        group.bench_with_input(BenchmarkId::new("lll_draw", n), &g, |b, g| {
            b.iter(|| lll_draw(g, 1).unwrap())
        });
        let f = greedy_degen_label(&g).unwrap();
        group.bench_with_input(BenchmarkId::new("from_antimagic", n), &g, |b, g| {
            b.iter(|| from_antimagic(g, &f).unwrap())
        });
        let d = from_antimagic(&g, &f).unwrap();
        group.bench_with_input(BenchmarkId::new("verify_drawing", n), &g, |b, g| {
            b.iter(|| verify_drawing(g, &d).unwrap())
        });
    }
    group.finish();
}

fn crossing(c: &mut Criterion) {
    let p = |bits: u64| BitPoint::new(bits, 40).unwrap();
    let (a, b, x, y) = (
        p(0x12_3456_789a),
        p(0xfe_dcba_9876),
        p(0x55_5555_5555),
        p(0xbb_bbbb_bbbb),
    );
    c.bench_function("edges_cross", |bench| {
        bench.iter(|| edges_cross(black_box(&a), black_box(&b), black_box(&x), black_box(&y)).unwrap())
    });
    let s = |bits: u64| BitPoint::new(bits, 8).unwrap();
    let (a, b, x, y) = (s(0x1f), s(0xe3), s(0x5a), s(0xa6));
    c.bench_function("segment_cross_exact", |bench| {
        bench.iter(|| segment_cross_exact(black_box(&a), black_box(&b), black_box(&x), black_box(&y)).unwrap())
    });
}

fn sidon(c: &mut Criterion) {
    let mut group = c.benchmark_group("sidon");
    for q in [31, 101] {
        group.bench_with_input(BenchmarkId::new("singer", q), &q, |b, &q| {
            b.iter(|| singer_sidon(q).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("erdos_turan", q), &q, |b, &q| {
            b.iter(|| erdos_turan_sidon(q).unwrap())
        });
    }
    group.finish();
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    for n in [5, 6] {
        let g = generate(GraphKind::Complete { n }).unwrap();
        group.bench_with_input(BenchmarkId::new("mag_complete", n), &g, |b, g| {
            b.iter(|| exact_mag(g, 64))
        });
        group.bench_with_input(BenchmarkId::new("vol_complete", n), &g, |b, g| {
            b.iter(|| exact_vol(g, 6).unwrap())
        });
    }
    let g = generate(GraphKind::Cycle { n: 9 }).unwrap();
    group.bench_function("one_queue_cycle_9", |b| {
        b.iter(|| find_one_queue_layout(&g, 12).unwrap())
    });
    group.finish();
}

criterion_group!(benches, labelling, drawing, crossing, sidon, exact);
criterion_main!(benches);
