use atl_core::canon::{coordinates, enumerate_basis};
use atl_core::diagram::{gen_d, gen_u};
use atl_core::projectors::{extremal, jones_wenzl};
use atl_core::rep::{factorize, phi};
use atl_core::{Mode, Morphism};
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn compose(c: &mut Criterion) {
    let mut g = c.benchmark_group("compose");
    for m in [3, 4, 5] {
        let t = extremal(m);
        g.bench_with_input(BenchmarkId::new("T_m squared", m), &t, |b, t| b.iter(|| (&**t * &**t).reduce()));
    }
    for m in [4, 6] {
        let p = jones_wenzl(m).unwrap();
        g.bench_with_input(BenchmarkId::new("P_m squared", m), &p, |b, p| b.iter(|| &**p * &**p));
    }
    g.finish();
}

fn weight_map(c: &mut Criterion) {
    let mut g = c.benchmark_group("phi");
    for m in [4, 6] {
        let t = extremal(m);
        g.bench_with_input(BenchmarkId::new("T_m", m), &t, |b, t| b.iter(|| phi(t).unwrap()));
    }
    g.finish();
}

fn tensor(c: &mut Criterion) {
    let (a, b) = (extremal(3), extremal(2));
    c.bench_function("tensor T_3 T_2", |bch| bch.iter(|| a.tensor(black_box(&b)).unwrap()));
}

fn words(c: &mut Criterion) {
    let x = &(&gen_d(4, 1).unwrap() * &gen_u(4, 2).unwrap()) * &gen_d(4, 1).unwrap();
    let d = x.terms().keys().next().unwrap().clone();
    c.bench_function("factorize wound U", |b| b.iter(|| factorize(black_box(&d)).unwrap()));
    let basis = enumerate_basis(8).unwrap();
    let y = basis.iter().fold(Morphism::zero(0, 8, Mode::Quotient), |acc, d| &acc + &Morphism::from_diagram(d.clone(), Mode::Quotient));
    c.bench_function("coordinates hom(0,8)", |b| b.iter(|| coordinates(black_box(&y)).unwrap()));
}

criterion_group!(benches, compose, weight_map, tensor, words);
criterion_main!(benches);
