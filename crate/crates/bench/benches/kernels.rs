use criterion::{black_box, criterion_group, criterion_main, Criterion};
use discharge_core::configs;
use discharge_core::discharge;
use discharge_core::embed::{generate_planar, EmbeddedGraph};
use discharge_core::listcolor::enumerate::choosable_exhaustive;
use discharge_core::reduce::build_gadget;

fn bench_face_tracing(c: &mut Criterion) {
    let g = generate_planar(7, 64, 8).unwrap();
    let text = g.serialize();
    c.bench_function("face_tracing_n64", |b| {
        b.iter(|| {
            let g = EmbeddedGraph::parse(black_box(&text)).unwrap();
            black_box(g.face_count())
        })
    });
}

fn bench_config_matching(c: &mut Criterion) {
    let g = generate_planar(7, 64, 8).unwrap();
    c.bench_function("match_all_n64", |b| {
        b.iter(|| black_box(configs::match_all(black_box(&g)).unwrap().len()))
    });
}

fn bench_charge_audit(c: &mut Criterion) {
    let g = generate_planar(7, 64, 8).unwrap();
    c.bench_function("charge_audit_n64", |b| {
        b.iter(|| black_box(discharge::audit(black_box(&g)).unwrap()))
    });
}

fn bench_list_coloring(c: &mut Criterion) {
    let gadget = build_gadget("C1".parse().unwrap(), "").unwrap();
    let inst = gadget.instance();
    let sizes: Vec<u32> = gadget.profile.iter().map(|&s| s as u32).collect();
    c.bench_function("choosable_exhaustive_c1", |b| {
        b.iter(|| black_box(choosable_exhaustive(black_box(&inst), &sizes, 8, 20)))
    });
}

criterion_group!(
    kernels,
    bench_face_tracing,
    bench_config_matching,
    bench_charge_audit,
    bench_list_coloring
);
criterion_main!(kernels);
