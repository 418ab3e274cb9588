use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use immaculate_core::{
    analysis::certificate_for, commutant_dimension, compositions_of, h_in_qsym, kostka, quotient_module,
    standard_immaculate_tableaux, Composition,
};

fn alpha(s: &str) -> Composition {
    s.parse().unwrap()
}

fn tableaux(c: &mut Criterion) {
    c.bench_function("kostka [4,2,3] [3,1,2,3]", |b| {
        let (shape, content) = (alpha("[4,2,3]"), alpha("[3,1,2,3]"));
        b.iter(|| kostka(black_box(&shape), black_box(&content)).unwrap())
    });
    c.bench_function("kostka row n=6", |b| {
        let all = compositions_of(6);
        b.iter(|| {
            all.iter()
                .map(|content| kostka(&all[0], content).unwrap())
                .sum::<usize>()
        })
    });
    c.bench_function("standard tableaux [2,2,2,1]", |b| {
        let a = alpha("[2,2,2,1]");
        b.iter(|| standard_immaculate_tableaux(black_box(&a)).len())
    });
}

fn modules(c: &mut Criterion) {
    let mut group = c.benchmark_group("commutant");
    for s in ["[2,2,3]", "[3,2,1]", "[2,2,2,1]"] {
        let m = quotient_module(&alpha(s));
        group.bench_with_input(BenchmarkId::from_parameter(s), &m, |b, m| b.iter(|| commutant_dimension(m)));
    }
    group.finish();
    c.bench_function("certificate [2,2,3]", |b| {
        let m = quotient_module(&alpha("[2,2,3]"));
        b.iter(|| certificate_for(&m).is_valid())
    });
}

fn qsym(c: &mut Criterion) {
    c.bench_function("h product [1,1,1,1,1,1]", |b| {
        let a = alpha("[1,1,1,1,1,1]");
        b.iter(|| h_in_qsym(black_box(&a)))
    });
}

criterion_group!(benches, tableaux, modules, qsym);
criterion_main!(benches);
