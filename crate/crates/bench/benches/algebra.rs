use criterion::{black_box, criterion_group, criterion_main, Criterion};

use octo_core::fano::standard_fano;
use octo_core::octonion::{
    random_octonion, seeded_rng, tables_isomorphic, verify_alternative, StructureConstants,
};

fn bench_algebra(c: &mut Criterion) {
    let sc = StructureConstants::from_index_rules();

    c.bench_function("table from oriented plane", |b| {
        let plane = standard_fano();
        b.iter(|| StructureConstants::from_oriented_plane(black_box(&plane)))
    });

    c.bench_function("octonion multiply rational", |b| {
        let mut rng = seeded_rng(7);
        let x = random_octonion(&mut rng);
        let y = random_octonion(&mut rng);
        b.iter(|| black_box(&x).multiply(black_box(&y), &sc))
    });

    c.bench_function("verify_alternative 343 triples", |b| {
        b.iter(|| verify_alternative(black_box(&sc)))
    });

    let mut slow = c.benchmark_group("search");
    slow.sample_size(10);
    slow.bench_function("tables_isomorphic identity", |b| {
        let other = StructureConstants::from_oriented_plane(&standard_fano());
        b.iter(|| tables_isomorphic(black_box(&sc), black_box(&other)).expect("isomorphic"))
    });
    slow.finish();
}

criterion_group!(benches, bench_algebra);
criterion_main!(benches);
