use criterion::{black_box, criterion_group, criterion_main, Criterion};

use gyw::gk;
use gyw::kostant::wall_to_kostant;
use gyw::young_wall::enumerate_reduced_proper;
use gyw_bench::ranks;

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_reduced_proper");
    for cartan in ranks() {
        group.bench_function(format!("n{}_boxes8", cartan.n()), |b| {
            b.iter(|| enumerate_reduced_proper(black_box(cartan), 8).len())
        });
    }
    group.finish();
}

fn bench_product_side(c: &mut Criterion) {
    let mut group = c.benchmark_group("gk_product");
    for cartan in ranks() {
        group.bench_function(format!("n{}_d8", cartan.n()), |b| {
            b.iter(|| gk::gk_product(black_box(cartan), 8))
        });
    }
    group.finish();
}

fn bench_sum_side(c: &mut Criterion) {
    let mut group = c.benchmark_group("gk_sum");
    for cartan in ranks() {
        group.bench_function(format!("n{}_d8", cartan.n()), |b| {
            b.iter(|| gk::gk_sum(black_box(cartan), 8))
        });
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(20);
    for cartan in ranks() {
        group.bench_function(format!("main_n{}_d8", cartan.n()), |b| {
            b.iter(|| gk::verify_main(black_box(cartan), 8).equal)
        });
    }
    for cartan in ranks().into_iter().take(2) {
        group.bench_function(format!("ig_n{}_d8", cartan.n()), |b| {
            b.iter(|| gk::verify_ig(black_box(cartan), 8).equal)
        });
    }
    group.finish();
}

fn bench_fold_unfold(c: &mut Criterion) {
    let cartan = gyw::CartanData::new(2).unwrap();
    let exprs: Vec<_> = enumerate_reduced_proper(cartan, 8)
        .iter()
        .map(|w| wall_to_kostant(w).unwrap())
        .collect();
    c.bench_function("unfold_fold_roundtrip_n2_boxes8", |b| {
        b.iter(|| {
            for expr in &exprs {
                let unfolded = expr.unfold();
                black_box(unfolded.fold());
            }
        })
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_product_side,
    bench_sum_side,
    bench_verify,
    bench_fold_unfold
);
criterion_main!(benches);
