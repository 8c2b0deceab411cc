//! Sequential against parallel execution on the three data-parallel kernels.
//!
//! Build without default features to time the fallback alone:
//! `cargo bench -p lgtypes --no-default-features`.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lgtypes::library::{cyclic_group, direct_product, symmetric_group_s3};
use lgtypes::random::{random_formula, random_pool};
use lgtypes::semantics::{ef_equivalent_with, val_set_with, Bounds, FormulaClasses};
use lgtypes::{Execution, Sort, Substitution, Term, Var};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn swap_pool() -> Vec<Substitution> {
    let pair = Sort::numbered("x", 2);
    let x = |i| Term::Var(Var::indexed("x", i));
    vec![Substitution::new(pair.clone(), pair, vec![x(2), x(1)]).unwrap()]
}

fn formula_classes(c: &mut Criterion) {
    let s3 = symmetric_group_s3();
    let sort = Sort::numbered("x", 2);
    let pool = swap_pool();
    let mut group = c.benchmark_group("formula_classes");
    group.sample_size(10);
    for bounds in [Bounds::new(2, 2), Bounds::new(3, 2)] {
        let label = format!("S3/L{}T{}", bounds.max_length, bounds.max_term_depth);
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, &label), &bounds, |b, &bounds| {
                b.iter(|| {
                    FormulaClasses::build(&s3, &s3, &sort, bounds, &pool, exec)
                        .unwrap()
                        .class_count()
                })
            });
        }
    }
    group.finish();
}

fn value_sets(c: &mut Criterion) {
    let h = direct_product(&cyclic_group(2), &cyclic_group(3));
    let sort = Sort::numbered("x", 4);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pool = random_pool(&mut rng, h.signature(), 2, 1);
    let formulas: Vec<_> = (0..16)
        .map(|_| random_formula(&mut rng, &sort, h.signature(), &pool, 8, 2).unwrap())
        .collect();
    let mut group = c.benchmark_group("value_sets");
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "Z2xZ3/4 vars/16 formulas"), |b| {
            b.iter(|| {
                formulas
                    .iter()
                    .map(|u| val_set_with(&h, black_box(u), exec).unwrap().len())
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

fn ef_games(c: &mut Criterion) {
    let s3 = symmetric_group_s3();
    let mut group = c.benchmark_group("ef_games");
    group.sample_size(10);
    for rounds in [3, 4] {
        for (mode, exec) in MODES {
            group.bench_with_input(
                BenchmarkId::new(mode, format!("S3/rounds {rounds}")),
                &rounds,
                |b, &r| b.iter(|| ef_equivalent_with(&s3, black_box(&[1, 3]), &s3, &[2, 4], r, exec).unwrap()),
            );
        }
    }
    group.finish();
}

criterion_group!(benches, formula_classes, value_sets, ef_games);
criterion_main!(benches);
