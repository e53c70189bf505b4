use criterion::{black_box, criterion_group, criterion_main, Criterion};

use symthick_core::exactla::ExactMatrix;
use symthick_core::specht::SpechtModule;
use symthick_core::symcomb::{Partition, Permutation, Tableau};
use symthick_core::thickness::{cert_two_row_n22, verify_certificate};

fn bench_straighten(c: &mut Criterion) {
    let shape: Partition = "3,3,3".parse().unwrap();
    let module = SpechtModule::new(&shape).unwrap();
    let worst: Tableau = "[[9,8,7],[6,5,4],[3,2,1]]".parse().unwrap();
    c.bench_function("straighten (3,3,3) reversed filling", |b| {
        b.iter(|| module.straighten(black_box(&worst)).unwrap())
    });
}

fn bench_action(c: &mut Criterion) {
    let shape: Partition = "3,3,2".parse().unwrap();
    let module = SpechtModule::new(&shape).unwrap();
    let sigma = Permutation::new(vec![2, 3, 4, 5, 6, 7, 8, 1]).unwrap();
    c.bench_function("action column (3,3,2) 8-cycle", |b| {
        b.iter(|| module.action_column(black_box(&sigma), 0).unwrap())
    });
    c.bench_function("action matrix (3,3,2) 8-cycle", |b| {
        b.iter(|| module.action_matrix(black_box(&sigma)).unwrap())
    });
}

fn bench_rank(c: &mut Criterion) {
    let rows: Vec<Vec<i64>> = (0..20)
        .map(|r| (0..20).map(|cix| ((r * cix) % 7) as i64 - 3).collect())
        .collect();
    let mat = ExactMatrix::from_int_rows(rows).unwrap();
    c.bench_function("exact rank 20x20", |b| b.iter(|| black_box(&mat).rank()));
}

fn bench_verify(c: &mut Criterion) {
    let cert = cert_two_row_n22(6).unwrap();
    c.bench_function("verify (4,2) certificate over S6", |b| {
        b.iter(|| verify_certificate(black_box(&cert)).unwrap())
    });
}

criterion_group!(benches, bench_straighten, bench_action, bench_rank, bench_verify);
criterion_main!(benches);
