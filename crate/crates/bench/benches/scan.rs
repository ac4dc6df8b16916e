use criterion::{black_box, criterion_group, criterion_main, Criterion};

use octo_bench::survivor_fixture;
use octo_core::surface::search::{search_orientations, ScanTables};
use octo_core::surface::{canonical_mask, oriented_triangulation_test};

fn bench_scan(c: &mut Criterion) {
    let tables = ScanTables::new();
    let mask = survivor_fixture().mask();

    c.bench_function("is_survivor fast path", |b| {
        b.iter(|| tables.is_survivor(black_box(mask)))
    });

    c.bench_function("oriented_triangulation_test slow path", |b| {
        let t = survivor_fixture();
        b.iter(|| oriented_triangulation_test(black_box(&t)))
    });

    c.bench_function("canonical_mask 5040 relabelings", |b| {
        let t = survivor_fixture();
        b.iter(|| canonical_mask(black_box(&t)))
    });

    let mut slow = c.benchmark_group("full-space");
    slow.sample_size(10);
    slow.bench_function("search_orientations 2^21", |b| {
        b.iter(search_orientations)
    });
    slow.finish();
}

criterion_group!(benches, bench_scan);
criterion_main!(benches);
