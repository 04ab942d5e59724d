use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use homleib::algebra::fixtures::{abelian, dual_numbers, nilpotent_leibniz3, rational_unit};
use homleib::complexes::{boundary_matrix_with, cohomology_dims_with, random_equivariant, Limits};
use homleib::cup::{cup, zinbiel_basis_triples, CupContext};
use homleib::linalg::Matrix;
use homleib::Exec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn rref(c: &mut Criterion) {
    // the shape rank computations actually see: a sparse integer boundary matrix
    let m = boundary_matrix_with(&nilpotent_leibniz3(), 5, Limits::default()).unwrap();
    let mut group = c.benchmark_group("rref_boundary_81x243");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| black_box(m.rref(exec))));
    }
    group.finish();
}

fn boundary(c: &mut Criterion) {
    let l = nilpotent_leibniz3();
    let mut group = c.benchmark_group("boundary_matrix_deg5");
    for (name, exec) in MODES {
        let limits = Limits::with_exec(exec);
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(boundary_matrix_with(&l, 5, limits).unwrap()))
        });
    }
    group.finish();
}

fn cohomology(c: &mut Criterion) {
    let l = nilpotent_leibniz3();
    let a = dual_numbers();
    let mut group = c.benchmark_group("cohomology_deg3");
    group.sample_size(10);
    for (name, exec) in MODES {
        let limits = Limits::with_exec(exec);
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(cohomology_dims_with(&l, &a, 3, limits).unwrap()))
        });
    }
    group.finish();
}

fn cup_product(c: &mut Criterion) {
    let ctx = CupContext::new(abelian(3, Matrix::identity(3)), dual_numbers()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let f = random_equivariant(ctx.l(), ctx.a(), 2, &mut rng).unwrap();
    let g = random_equivariant(ctx.l(), ctx.a(), 2, &mut rng).unwrap();
    c.bench_function("cup_2x2_abelian3", |b| b.iter(|| black_box(cup(&ctx, &f, &g).unwrap())));
}

fn zinbiel_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("zinbiel_triples_abelian3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                // a fresh context per run so the coboundary cache starts empty
                let ctx = CupContext::new(abelian(3, Matrix::identity(3)), rational_unit())
                    .unwrap()
                    .with_limits(Limits::with_exec(exec));
                black_box(zinbiel_basis_triples(&ctx, 4).unwrap())
            })
        });
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = rref, boundary, cohomology, cup_product, zinbiel_suite
}
criterion_main!(benches);
