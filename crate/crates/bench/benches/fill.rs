use criterion::{black_box, criterion_group, criterion_main, Criterion};
use magic_fill::census::{load_census, verify_row};
use magic_fill::farey::{lst_tet_count, slope, BoundaryClass};
use magic_fill::filling::{fill, plan_filling};
use magic_fill::triangulation::{first_homology, iso_signature};

fn planning(c: &mut Criterion) {
    let census = load_census().unwrap();
    c.bench_function("plan 229 census pairs", |b| {
        b.iter(|| census.iter().map(|r| plan_filling(black_box(r.rs), black_box(r.tu)).unwrap().total()).sum::<u64>())
    });
    c.bench_function("lst count 233/144", |b| b.iter(|| lst_tet_count(BoundaryClass::P, black_box(slope(-233, 144)))));
}

fn building(c: &mut Criterion) {
    let (rs, tu) = (slope(-10, 3), slope(-27, 10));
    c.bench_function("fill K9_67", |b| b.iter(|| fill(black_box(rs), black_box(tu)).unwrap()));
    let t = fill(rs, tu).unwrap().triangulation;
    c.bench_function("homology K9_67", |b| b.iter(|| first_homology(black_box(&t)).unwrap()));
    c.bench_function("isosig K9_67", |b| b.iter(|| iso_signature(black_box(&t)).unwrap()));
}

fn verification(c: &mut Criterion) {
    let census = load_census().unwrap();
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("verify all rows", |b| b.iter(|| census.iter().filter(|r| verify_row(r).passed()).count()));
    group.finish();
}

criterion_group!(benches, planning, building, verification);
criterion_main!(benches);
