use std::hint::black_box;

use cab_bench::{cyclic4, katsura3, polys, ring};
use cab_core::groebner::{buchberger, buchberger_opts};
use cab_core::idealops::{squarefree_part, Ideal};
use cab_core::{parse, Budget, MonomialOrder};
use criterion::{criterion_group, criterion_main, Criterion};

fn groebner(c: &mut Criterion) {
    let (r, g) = katsura3();
    c.bench_function("katsura3 grevlex", |b| b.iter(|| buchberger(&r, black_box(&g), MonomialOrder::GrevLex).unwrap()));
    c.bench_function("katsura3 lex", |b| b.iter(|| buchberger(&r, black_box(&g), MonomialOrder::Lex).unwrap()));
    let (r, g) = cyclic4();
    c.bench_function("cyclic4 grevlex", |b| b.iter(|| buchberger(&r, black_box(&g), MonomialOrder::GrevLex).unwrap()));
    let budget = Budget::unlimited();
    c.bench_function("cyclic4 grevlex no criteria", |b| {
        b.iter(|| buchberger_opts(&r, black_box(&g), MonomialOrder::GrevLex, false, &budget).unwrap())
    });
}

fn ideal_ops(c: &mut Criterion) {
    let r = ring(&["x", "y", "z"]);
    let budget = Budget::unlimited();
    c.bench_function("saturate lines by x", |b| {
        b.iter(|| {
            let i = Ideal::new(&r, polys(&r, &["x*y", "x*z", "y^2-z^3"])).unwrap();
            let j = Ideal::new(&r, polys(&r, &["x"])).unwrap();
            i.saturate(&j, &budget).unwrap()
        })
    });
    c.bench_function("intersect two conics", |b| {
        b.iter(|| {
            let i = Ideal::new(&r, polys(&r, &["x^2+y^2-1", "z"])).unwrap();
            let j = Ideal::new(&r, polys(&r, &["x^2-y", "z-1"])).unwrap();
            i.intersect(&j, &budget).unwrap()
        })
    });
    let f = parse("(x^2+y*z-1)^2*(x-y+3*z)^3*(y^2-z)", &r).unwrap();
    c.bench_function("squarefree part", |b| b.iter(|| squarefree_part(black_box(&f)).unwrap()));
}

criterion_group!(benches, groebner, ideal_ops);
criterion_main!(benches);
