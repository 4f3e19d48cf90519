use criterion::{criterion_group, criterion_main, Criterion};
use eulersym_core::groebner::{buchberger, saturate_ideal};
use eulersym_core::text::parse_polynomial;
use eulersym_core::{prolong, FormSpace, MonomialOrder, SymbolSystem, VarContext};

fn bench_groebner(c: &mut Criterion) {
    let ctx = VarContext::new(["x", "y", "z"]).unwrap();
    let gens: Vec<_> = ["x^2 + y*z - 2", "x*y - z^2", "y^3 - x*z + 1"]
        .iter()
        .map(|s| parse_polynomial(&ctx, s).unwrap())
        .collect();
    c.bench_function("buchberger_grevlex_3vars", |b| {
        b.iter(|| buchberger(&ctx, &gens, MonomialOrder::GrevLex).unwrap())
    });

    let ctx3 = VarContext::standard(3);
    let scroll: Vec<_> = ["x1^2", "x1*x2", "x1*x3"]
        .iter()
        .map(|s| parse_polynomial(&ctx3, s).unwrap())
        .collect();
    c.bench_function("saturate_hyperplane_quadrics", |b| {
        b.iter(|| saturate_ideal(&ctx3, &scroll).unwrap())
    });
}

fn bench_symbols(c: &mut Criterion) {
    let ctx = VarContext::standard(4);
    let full = FormSpace::full(&ctx, 3);
    c.bench_function("prolong_full_cubics_n4", |b| b.iter(|| prolong(&full).unwrap()));

    let p = parse_polynomial(&ctx, "x1*x2*x3 + x2*x3*x4 + x1^3").unwrap();
    c.bench_function("from_polynomial_cubic_n4", |b| {
        b.iter(|| SymbolSystem::from_polynomial(&p).unwrap())
    });
    let sys = SymbolSystem::from_polynomial(&p).unwrap();
    c.bench_function("order_cubic_n4", |b| b.iter(|| sys.order().unwrap()));
}

criterion_group!(benches, bench_groebner, bench_symbols);
criterion_main!(benches);
