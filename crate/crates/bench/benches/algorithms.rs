use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spo_core::catalog;
use spo_core::classify::Classifier;
use spo_core::enumerate::{self, DEFAULT_CAP};
use spo_core::refmat::{self, SublatticeMode};
use spo_core::spectral::random::random_effect;
use spo_core::subalg;

fn classification(c: &mut Criterion) {
    let b10 = catalog::b10();
    c.bench_function("classify B10 report", |b| {
        b.iter(|| Classifier::for_lattice(black_box(&b10)).report())
    });
    let f11 = catalog::f11();
    c.bench_function("forbidden configuration F11", |b| {
        b.iter(|| subalg::forbidden_configuration(black_box(&f11), usize::MAX).unwrap())
    });
    c.bench_function("kleene blocks F11", |b| {
        b.iter(|| subalg::kleene_blocks(black_box(&f11)).len())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumeration");
    g.sample_size(10);
    for n in [6, 8] {
        g.bench_function(format!("all models n={n}"), |b| {
            b.iter(|| {
                enumerate::all_models(black_box(n), DEFAULT_CAP)
                    .unwrap()
                    .len()
            })
        });
    }
    g.finish();
}

fn spectral(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let pairs: Vec<_> = (0..64)
        .map(|_| (random_effect(&mut rng, 3), random_effect(&mut rng, 3)))
        .collect();
    let mut i = 0;
    let mut next = || {
        i = (i + 1) % pairs.len();
        pairs[i].clone()
    };
    c.bench_function("effect join d=3", |b| {
        b.iter_batched(
            &mut next,
            |(x, y)| x.join(&y).unwrap(),
            BatchSize::SmallInput,
        )
    });
    c.bench_function("effect canonical_leq d=3", |b| {
        b.iter_batched(
            &mut next,
            |(x, y)| x.canonical_leq(&y).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn referential(c: &mut Criterion) {
    let b = catalog::pkl_b().into_poset();
    c.bench_function("build refmat B", |bn| {
        bn.iter(|| refmat::build_refmat(black_box(&b), SublatticeMode::All, usize::MAX).unwrap())
    });
    let m = refmat::build_refmat(&b, SublatticeMode::All, usize::MAX).unwrap();
    c.bench_function("representation check B", |bn| {
        bn.iter(|| refmat::representation_check(black_box(&m)))
    });
}

criterion_group!(benches, classification, enumeration, spectral, referential);
criterion_main!(benches);
