use criterion::{criterion_group, criterion_main, Criterion};
use nlie::constructions::{build_simple, direct_sum, extract_with_search};
use nlie::rng::SeededRng;
use nlie::samples::{conjugated, lorentzian5};
use nlie::structure::decompose;

fn decomposition(c: &mut Criterion) {
    let s = build_simple(3, &[1, 1, -1, 1]).unwrap();
    let sum = direct_sum(&direct_sum(&s, &s).unwrap(), &lorentzian5()).unwrap();
    let mixed = conjugated(&sum, 6, &mut SeededRng::new(2)).unwrap();
    c.bench_function("decompose_s_s_lorentzian", |b| b.iter(|| decompose(&mixed, 0).unwrap()));
}

fn extraction(c: &mut Criterion) {
    let l = conjugated(&lorentzian5(), 3, &mut SeededRng::new(3)).unwrap();
    c.bench_function("extract_lorentzian", |b| b.iter(|| extract_with_search(&l, 0).unwrap()));
}

criterion_group!(benches, decomposition, extraction);
criterion_main!(benches);
