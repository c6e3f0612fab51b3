use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use pointgb::bma::{buchberger_moller, PointSet};
use pointgb::essbm::essbm;
use pointgb::field::PrimeField;
use pointgb::order::TermOrder;
use pointgb::random::random_variety;

/// Both algorithms on the same random varieties, sweeping the variable
/// count with the point count fixed. The variable-by-variable construction
/// should scale close to linearly in n, the full-ring one quadratically.
fn bench_variable_sweep(c: &mut Criterion) {
    let field = PrimeField::new(3).unwrap();
    let m = 5;
    for order_spec in ["lex", "grevlex"] {
        let mut group = c.benchmark_group(format!("scaling/{order_spec}/m{m}"));
        group.sample_size(20);
        for n in [100usize, 200, 300] {
            let order = TermOrder::parse(order_spec, None, n).unwrap();
            let variety = random_variety(field, n, m, 42).unwrap();
            group.bench_with_input(BenchmarkId::new("essbm", n), &n, |b, _| {
                b.iter(|| black_box(essbm(&variety, &order).unwrap()))
            });
            group.bench_with_input(BenchmarkId::new("bma", n), &n, |b, _| {
                b.iter(|| {
                    let full = PointSet::new(
                        field,
                        n,
                        (0..n).collect(),
                        variety.points().to_vec(),
                        order.clone(),
                    )
                    .unwrap();
                    black_box(buchberger_moller(&full).unwrap())
                })
            });
        }
        group.finish();
    }
}

/// Sweep over the point count at fixed n, where the m^3 and m^6 terms take
/// over.
fn bench_point_sweep(c: &mut Criterion) {
    let field = PrimeField::new(3).unwrap();
    let n = 150;
    let order = TermOrder::lex(n);
    let mut group = c.benchmark_group("scaling/lex/n150");
    group.sample_size(20);
    for m in [5usize, 10, 15] {
        let variety = random_variety(field, n, m, 42).unwrap();
        group.bench_with_input(BenchmarkId::new("essbm", m), &m, |b, _| {
            b.iter(|| black_box(essbm(&variety, &order).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_variable_sweep, bench_point_sweep);
criterion_main!(benches);
