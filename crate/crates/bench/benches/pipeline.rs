use absolute_bench::{presentation, SIX_AND_MINUS_ONE, TRIPOD, Z2, Z3};
use absolute_core::absolute::{describe_absolute, DescribeOptions};
use absolute_core::harness::{simulate, verify_central};
use absolute_core::latgeo::{birch_lift, DistributionPoint};
use absolute_core::rational::rat;
use absolute_core::wordcalc::{central_pairs_exact, complete, MonomialOrder};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn rewriting(c: &mut Criterion) {
    let p = presentation(Z3);
    c.bench_function("complete z3", |b| b.iter(|| complete(black_box(&p), MonomialOrder::DegRevLex)));
    c.bench_function("central pairs z3", |b| b.iter(|| central_pairs_exact(black_box(&p)).unwrap()));
}

fn describe(c: &mut Criterion) {
    let opts = DescribeOptions::default();
    for (name, text) in [("z2", Z2), ("z3", Z3), ("z_0_6_m1", SIX_AND_MINUS_ONE), ("tripod", TRIPOD)] {
        let p = presentation(text);
        c.bench_function(&format!("describe {name}"), |b| b.iter(|| describe_absolute(black_box(&p), &opts).unwrap()));
    }
}

fn numerics(c: &mut Criterion) {
    let d = describe_absolute(&presentation(Z2), &DescribeOptions::default()).unwrap();
    let nu = DistributionPoint::exact(vec![rat(1, 2), rat(1, 8), rat(1, 4), rat(1, 8)]).unwrap();
    let target = d.polytope.project(&nu);
    c.bench_function("birch lift z2", |b| {
        b.iter(|| birch_lift(&d.polytope, &d.central_lattice, black_box(&target), 1e-10).unwrap())
    });
    let mu = DistributionPoint::exact(vec![rat(4, 9), rat(1, 9), rat(2, 9), rat(2, 9)]).unwrap();
    c.bench_function("verify z2 depth 6", |b| b.iter(|| verify_central(&d.rewrite_system, black_box(&mu), 6).unwrap()));
    c.bench_function("simulate z2 10k x 10", |b| {
        b.iter(|| simulate(&d.rewrite_system, black_box(&mu), 10, 10_000, 1).unwrap())
    });
}

criterion_group!(benches, rewriting, describe, numerics);
criterion_main!(benches);
