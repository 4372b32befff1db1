use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qflag_core::flagext::{build_relations, derive_relations_via_omega};
use qflag_core::geometry::{enumerate_foacs, kahler_cube};
use qflag_core::qpair::{flag_generator, omega};
use qflag_core::Letter::*;

fn rewriting(c: &mut Criterion) {
    let a = build_relations();
    let top = a.monomial(&[E1, E2, E12, F1, F2, F12]);
    c.bench_function("normal_form top product", |b| b.iter(|| a.normal_form(black_box(&top))));
    c.bench_function("confluence check", |b| b.iter(|| a.system().confluence_check()));
    c.bench_function("hilbert series", |b| b.iter(|| a.hilbert_series()));
}

fn pairing(c: &mut Criterion) {
    let a = build_relations();
    let y = flag_generator(1, 2, 2).plus();
    c.bench_function("omega z1_22", |b| b.iter(|| omega(black_box(&y)).unwrap()));
    let mut g = c.benchmark_group("suites");
    g.sample_size(10);
    g.bench_function("omega derivation", |b| b.iter(|| derive_relations_via_omega(&a).unwrap()));
    g.bench_function("nakayama degree 1", |b| b.iter(|| a.nakayama(1).unwrap()));
    g.bench_function("foacs census", |b| b.iter(enumerate_foacs));
    g.bench_function("kahler cube", |b| b.iter(|| kahler_cube(&a, true)));
    g.finish();
}

criterion_group!(benches, rewriting, pairing);
criterion_main!(benches);
