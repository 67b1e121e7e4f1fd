//! Exact-algebra cost: full relation-table verification (the dual family
//! is the largest, with the auxiliary generator and symbolic μ) and a
//! single symbolic commutator.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use metaconf::liealg::{
    make_generator, verify_algebra, FamilyKind, GenLabel, GeneratorFamily,
};

fn bench_algebra(c: &mut Criterion) {
    let dual = GeneratorFamily::generic_symbolic(FamilyKind::Meta1DDual);
    c.bench_function("verify-algebra meta-1d-dual window [-1,2]", |b| {
        b.iter(|| {
            let report = verify_algebra(black_box(&dual), -1, 2).unwrap();
            assert!(report.all_pass);
            black_box(report.cases.len())
        })
    });

    let meta2 = GeneratorFamily::generic(FamilyKind::Meta2D);
    let bp = make_generator(&meta2, GenLabel::BPlus, 2).unwrap();
    let bm = make_generator(&meta2, GenLabel::BMinus, 1).unwrap();
    c.bench_function("commutator meta-2d [B+_2, B-_1]", |b| {
        b.iter(|| black_box(bp.commutator(black_box(&bm))))
    });
}

criterion_group!(benches, bench_algebra);
criterion_main!(benches);
