use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use genpos_core::exactla::{rank, DenseMatrix};
use genpos_core::genanalysis::{brute_force_nu, default_brute_box, nu};
use genpos_core::{random_generic_point_set, Field, FieldPoints, MultiDegree, PrimeField, Rationals, SpaceShape};

fn sample<F: Field>(field: F, s: usize, dims: &[u32]) -> FieldPoints<F> {
    let shape = SpaceShape::new(dims.to_vec()).unwrap();
    random_generic_point_set(&field, s, &shape, 50, 1, 100).unwrap().points
}

fn evaluation<F: Field>(field: F, s: usize, dims: &[u32], degree: &[u32]) -> (F, DenseMatrix<F::Elem>) {
    let x = sample(field.clone(), s, dims);
    let m = x.evaluation_matrix(&MultiDegree::new(degree.to_vec())).unwrap();
    (field, m)
}

fn bench_rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank");
    for (s, dims, degree) in [(10, &[1, 2][..], &[2, 2][..]), (20, &[2, 2], &[2, 3])] {
        let label = format!("s{s}");
        let (q, mq) = evaluation(Rationals, s, dims, degree);
        g.bench_with_input(BenchmarkId::new("rational", &label), &mq, |b, m| {
            b.iter(|| rank(&q, black_box(m)))
        });
        let (p, mp) = evaluation(PrimeField::new(2_147_483_647).unwrap(), s, dims, degree);
        g.bench_with_input(BenchmarkId::new("fp", &label), &mp, |b, m| {
            b.iter(|| rank(&p, black_box(m)))
        });
    }
    g.finish();
}

fn bench_hilbert(c: &mut Criterion) {
    c.bench_function("hilbert/box_4x4_s8", |b| {
        b.iter(|| {
            // Fresh set each time so the memo table starts empty.
            let x = sample(Rationals, 8, &[1, 2]);
            let bound = MultiDegree::new(vec![4, 4]);
            genpos_core::multidegree::degrees_in_box(&bound)
                .map(|d| x.hilbert(&d).unwrap())
                .sum::<usize>()
        })
    });
}

fn bench_nu(c: &mut Criterion) {
    let mut g = c.benchmark_group("nu");
    g.sample_size(10);
    for (s, dims) in [(3, &[1, 1, 1][..]), (9, &[1, 4, 4]), (12, &[2, 3])] {
        let label = format!(
            "s{s}_{}",
            dims.iter().map(ToString::to_string).collect::<Vec<_>>().join("-")
        );
        g.bench_function(BenchmarkId::new("formula", &label), |b| {
            b.iter(|| nu(&sample(Rationals, s, dims)).unwrap().nu)
        });
    }
    g.bench_function("brute/s5_1-2", |b| {
        b.iter(|| {
            let x = sample(Rationals, 5, &[1, 2]);
            brute_force_nu(&x, &default_brute_box(&x)).unwrap().total
        })
    });
    g.finish();
}

criterion_group!(benches, bench_rank, bench_hilbert, bench_nu);
criterion_main!(benches);
