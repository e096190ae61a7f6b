use criterion::{black_box, criterion_group, criterion_main, Criterion};

use realgr_core::characters::{irreducible_character, kostant_multiplicity};
use realgr_core::dualgroup::{associated_subgroup, classify_table1};
use realgr_core::grcomb::{branch_with, orbit_poset};
use realgr_core::realform::{catalog, Catalog};
use realgr_core::{BasedRootDatum, CartanType};

const CATALOG: &str = include_str!("../../core/data/catalog.toml");

fn adjoint(t: &str) -> BasedRootDatum {
    BasedRootDatum::adjoint(&t.parse::<CartanType>().unwrap()).unwrap()
}

fn bench_catalog(c: &mut Criterion) {
    c.bench_function("catalog load", |b| {
        b.iter(|| Catalog::from_toml_str(black_box(CATALOG)).unwrap())
    });
    c.bench_function("table1 rank <= 8", |b| {
        b.iter(|| classify_table1(catalog(), 8).unwrap())
    });
    let e6 = catalog().lookup("e6(-14)").unwrap();
    c.bench_function("associated subgroup e6(-14)", |b| {
        b.iter(|| associated_subgroup(black_box(&e6)).unwrap())
    });
}

fn bench_characters(c: &mut Criterion) {
    let b3 = adjoint("B3");
    let lambda = b3.dominant_coweights(6).unwrap().pop().unwrap();
    c.bench_function("freudenthal B3 height 6", |b| {
        b.iter(|| irreducible_character(&b3, black_box(&lambda)).unwrap())
    });
    let zero = vec![0; b3.rank()];
    c.bench_function("kostant B3 height 6 at zero", |b| {
        b.iter(|| kostant_multiplicity(&b3, black_box(&lambda), &zero))
    });
}

fn bench_grcomb(c: &mut Criterion) {
    let g2 = adjoint("G2");
    c.bench_function("orbit poset G2 height 8", |b| {
        b.iter(|| orbit_poset(&g2, black_box(8)).unwrap())
    });
    let f = catalog().lookup("so(2,5)").unwrap();
    let h = associated_subgroup(&f).unwrap();
    let lambda = f.datum().dominant_coweights(4).unwrap().pop().unwrap();
    c.bench_function("branch so(2,5) height 4", |b| {
        b.iter(|| branch_with(&f, &h, black_box(&lambda)).unwrap())
    });
}

criterion_group!(benches, bench_catalog, bench_characters, bench_grcomb);
criterion_main!(benches);
