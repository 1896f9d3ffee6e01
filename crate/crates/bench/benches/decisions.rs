use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use symdyn::corpus::{run_corpus, CorpusConfig};
use symdyn::{
    entropy_blocks, entropy_spectral, fixtures, higher_block, is_pre_injective, is_strongly_irreducible, is_surjective,
    minimal_gap, random_ca,
};

fn shifts(c: &mut Criterion) {
    let mut g = c.benchmark_group("shift");
    for k in [2, 5] {
        let x = fixtures::mixnot(k);
        g.bench_with_input(BenchmarkId::new("si_certificate/mixnot", k), &x, |b, x| {
            b.iter(|| is_strongly_irreducible(black_box(x)))
        });
        g.bench_with_input(BenchmarkId::new("minimal_gap/mixnot", k), &x, |b, x| {
            b.iter(|| minimal_gap(black_box(x), 64).unwrap())
        });
    }
    let even = fixtures::even();
    g.bench_function("entropy_spectral/even", |b| {
        b.iter(|| entropy_spectral(black_box(&even), 1e-9))
    });
    g.bench_function("entropy_blocks/even/40", |b| {
        b.iter(|| entropy_blocks(black_box(&even), 40))
    });
    g.bench_function("higher_block/golden/3", |b| {
        b.iter(|| higher_block(black_box(&fixtures::golden()), 3).unwrap())
    });
    g.finish();
}

fn automata(c: &mut Criterion) {
    let mut g = c.benchmark_group("automaton");
    let x = fixtures::full2();
    for right in [1i64, 3] {
        let t = random_ca(x.alphabet(), x.alphabet(), (0, right), 7).unwrap();
        g.bench_with_input(BenchmarkId::new("is_surjective/full2/width", right + 1), &t, |b, t| {
            b.iter(|| is_surjective(black_box(t), &x, &x).unwrap())
        });
        g.bench_with_input(
            BenchmarkId::new("is_pre_injective/full2/width", right + 1),
            &t,
            |b, t| b.iter(|| is_pre_injective(black_box(t), &x).unwrap()),
        );
    }
    g.finish();
}

fn corpus(c: &mut Criterion) {
    let shifts = vec![
        ("full2".to_string(), fixtures::full2()),
        ("even".to_string(), fixtures::even()),
    ];
    let cfg = CorpusConfig {
        count: 50,
        ..CorpusConfig::default()
    };
    c.bench_function("corpus/50", |b| {
        b.iter(|| run_corpus(black_box(&shifts), &cfg).unwrap())
    });
}

criterion_group!(benches, shifts, automata, corpus);
criterion_main!(benches);
