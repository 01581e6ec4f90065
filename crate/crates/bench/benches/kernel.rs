use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use startrans::corpus::{complete_intersection_squares, example_a, hilbert_burch, random_instances};
use startrans::groebner::{colon, hilbert_data};
use startrans::transform::star_transform;
use startrans::verify::verify_star;

fn kernel(c: &mut Criterion) {
    let ci = complete_intersection_squares();
    let m = ci.complex.image(1).unwrap();
    c.bench_function("colon ci-squares-3", |b| {
        b.iter(|| colon(black_box(&m), ci.sop.elements()).unwrap())
    });
    c.bench_function("hilbert ci-squares-3", |b| b.iter(|| hilbert_data(black_box(&m))));
}

fn transform(c: &mut Criterion) {
    for inst in [example_a(), hilbert_burch(), complete_intersection_squares()] {
        c.bench_function(&format!("star {}", inst.name), |b| {
            b.iter(|| star_transform(black_box(&inst.complex), &inst.sop).unwrap())
        });
    }
    let a = example_a();
    let t = star_transform(&a.complex, &a.sop).unwrap();
    c.bench_function("verify ex-a", |b| {
        b.iter(|| verify_star(&a.complex, &a.sop, black_box(&t.star)))
    });
    let random = random_instances(11, 8);
    c.bench_function("star 8 random instances", |b| {
        b.iter(|| {
            for inst in &random {
                star_transform(&inst.complex, &inst.sop).unwrap();
            }
        })
    });
}

criterion_group!(benches, kernel, transform);
criterion_main!(benches);
