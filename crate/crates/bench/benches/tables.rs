use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use magh_core::graph::{all_pairs_distances, cricket, generate};
use magh_core::paths::{enumerate_paths, PathKind};
use magh_core::{smith_normal_form, table, Family, SparseIntMatrix};

fn bench_tables(c: &mut Criterion) {
    let star = generate(Family::Star(4)).unwrap();
    c.bench_function("emh_table_star_4", |b| {
        b.iter(|| table(&star, PathKind::Eulerian, 4, 7, None).unwrap())
    });

    let g = cricket();
    c.bench_function("mh_table_cricket", |b| {
        b.iter(|| table(&g, PathKind::Full, 4, 7, None).unwrap())
    });

    let cycle = generate(Family::Cycle(6)).unwrap();
    let dm = all_pairs_distances(&cycle);
    c.bench_function("enumerate_paths_cycle_6", |b| {
        b.iter(|| enumerate_paths(&cycle, &dm, 4, 6, PathKind::Full, None))
    });
}

fn bench_snf(c: &mut Criterion) {
    let make = |rng: &mut ChaCha8Rng| {
        SparseIntMatrix::from_triplets(
            40,
            40,
            (0..40usize).flat_map(|r| {
                let vals: Vec<(usize, usize, BigInt)> = (0..40usize)
                    .filter_map(|c| {
                        if rng.gen_bool(0.15) {
                            Some((r, c, BigInt::from(rng.gen_range(-3i64..=3))))
                        } else {
                            None
                        }
                    })
                    .collect();
                vals
            }),
        )
        .unwrap()
    };
    c.bench_function("snf_sparse_40x40", |b| {
        b.iter_batched(
            || make(&mut ChaCha8Rng::seed_from_u64(7)),
            |m| smith_normal_form(&m),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(benches, bench_tables, bench_snf);
criterion_main!(benches);
