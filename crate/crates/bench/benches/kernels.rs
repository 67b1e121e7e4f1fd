//! Correlator-kernel evaluation throughput: the closed forms are the inner
//! loop of every scan, figure and verification suite.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use metaconf_bench::{line_separations, plane_separations, reg_kernel_1d, reg_kernel_2d};

fn bench_kernels(c: &mut Criterion) {
    let k1 = reg_kernel_1d();
    let line = line_separations(10_000);
    c.bench_function("meta1d-reg section 10k points", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for &r in &line {
                acc += k1.eval_sep1(black_box(1.0), black_box(r)).unwrap().value.re;
            }
            black_box(acc)
        })
    });

    let k2 = reg_kernel_2d();
    let plane = plane_separations(10_000);
    c.bench_function("meta2d-reg plane 10k points", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for &(rp, rq) in &plane {
                acc += k2
                    .eval_sep2(black_box(1.0), black_box(rp), black_box(rq))
                    .unwrap()
                    .value
                    .re;
            }
            black_box(acc)
        })
    });
}

criterion_group!(benches, bench_kernels);
criterion_main!(benches);
