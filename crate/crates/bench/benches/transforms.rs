use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use schurkit::fourier::{qft_permmod, qft_sn_real};
use schurkit::schur::DualSchur;
use schurkit::Composition;

fn qft(c: &mut Criterion) {
    let mut group = c.benchmark_group("qft_sn");
    for n in 3..=6 {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| qft_sn_real(black_box(n))));
    }
    group.finish();
}

fn permmod(c: &mut Criterion) {
    let mut group = c.benchmark_group("qft_permmod");
    for counts in [vec![2, 2], vec![2, 2, 1], vec![2, 2, 2], vec![3, 2, 1, 1]] {
        let ty = Composition::new(counts);
        let n = ty.size();
        group.bench_with_input(BenchmarkId::from_parameter(format!("{:?}", ty.counts())), &ty, |b, ty| {
            b.iter(|| qft_permmod(black_box(ty), n).unwrap())
        });
    }
    group.finish();
}

fn dual_schur(c: &mut Criterion) {
    let mut group = c.benchmark_group("dual_schur");
    group.sample_size(10);
    for (n, d) in [(3, 3), (4, 3), (5, 2), (6, 2), (4, 4)] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("n{n}_d{d}")), &(n, d), |b, &(n, d)| {
            b.iter(|| DualSchur::new(black_box(n), d, 1 << 20).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, qft, permmod, dual_schur);
criterion_main!(benches);
