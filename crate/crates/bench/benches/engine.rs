use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use gtspace::explorer::{canonical_form, count_spaces, sample_spaces, verify_theorems};
use gtspace::fixtures::e1;
use gtspace::realfn::urysohn_construct;
use gtspace::{classify, enumerate_spaces, GtSpace};
use gtspace_bench::{chain, overlapping_pairs};

fn derived_families(c: &mut Criterion) {
    let mut group = c.benchmark_group("derived");
    for n in [4, 8, 12] {
        group.bench_with_input(BenchmarkId::new("lambda-closed/pairs", n), &n, |b, &n| {
            b.iter_batched(
                || overlapping_pairs(n),
                |s: GtSpace| black_box(s.s_lambda_closed().len()),
                criterion::BatchSize::SmallInput,
            )
        });
    }
    group.bench_function("lambda-closed/definition/e1", |b| {
        b.iter(|| black_box(e1().s_lambda_closed_by_definition()))
    });
    group.finish();
}

fn axioms(c: &mut Criterion) {
    c.bench_function("classify/e1", |b| b.iter(|| black_box(classify(&e1()))));
    c.bench_function("classify/chain6", |b| b.iter(|| black_box(classify(&chain(6)))));
    c.bench_function("verify/e1", |b| b.iter(|| black_box(verify_theorems(&e1()))));
}

fn explorer(c: &mut Criterion) {
    c.bench_function("count/4", |b| b.iter(|| black_box(count_spaces(4).unwrap())));
    c.bench_function("enumerate/3/dedup", |b| b.iter(|| black_box(enumerate_spaces(3, true).unwrap())));
    c.bench_function("sample/5/1000", |b| b.iter(|| black_box(sample_spaces(5, 1000, 0).unwrap())));
    let s = overlapping_pairs(6);
    c.bench_function("canonical/pairs6", |b| b.iter(|| black_box(canonical_form(&s).unwrap())));
}

fn construction(c: &mut Criterion) {
    let s = gtspace::fixtures::discrete(6);
    let a = s.subset(["a", "b"]).unwrap();
    let b = s.subset(["e", "f"]).unwrap();
    for depth in [3, 8] {
        c.bench_function(&format!("urysohn/discrete6/depth{depth}"), |bch| {
            bch.iter(|| black_box(urysohn_construct(&s, a, b, depth).unwrap()))
        });
    }
}

criterion_group!(benches, derived_families, axioms, explorer, construction);
criterion_main!(benches);
