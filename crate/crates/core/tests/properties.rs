//! Randomized invariant checks for the chain-level machinery.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use magh_core::enumerate::random_connected_graphs;
use magh_core::graph::all_pairs_distances;
use magh_core::homology::{table, table_direct};
use magh_core::paths::{boundary_matrix, enumerate_paths, PathKind};
use magh_core::{smith_normal_form, Graph, SparseIntMatrix};

fn sample_graph(seed: u64, n_max: usize) -> Graph {
    random_connected_graphs(seed, 1, n_max)
        .into_iter()
        .next()
        .expect("sampler yields a graph")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The full basis is the disjoint union of the self-avoiding basis
    /// and the quotient basis, in every bigrading.
    #[test]
    fn basis_partition(seed in any::<u64>(), n in 2..=6usize) {
        let g = sample_graph(seed, n);
        let dm = all_pairs_distances(&g);
        for l in 0..=4u32 {
            for k in 0..=l as usize {
                let full = enumerate_paths(&g, &dm, k, l, PathKind::Full, None);
                let eul = enumerate_paths(&g, &dm, k, l, PathKind::Eulerian, None);
                let disc = enumerate_paths(&g, &dm, k, l, PathKind::Discriminant, None);
                prop_assert_eq!(full.len(), eul.len() + disc.len());
                let mut merged = eul.paths.clone();
                merged.extend(disc.paths.iter().cloned());
                merged.sort();
                prop_assert_eq!(&merged, &full.paths);
            }
        }
    }

    /// Composing two consecutive boundaries gives the zero matrix.
    #[test]
    fn boundary_squares_to_zero(seed in any::<u64>(), n in 2..=6usize, l in 2..=5u32) {
        let g = sample_graph(seed, n);
        let dm = all_pairs_distances(&g);
        for kind in [PathKind::Full, PathKind::Eulerian, PathKind::Discriminant] {
            for k in 1..l as usize {
                let low = enumerate_paths(&g, &dm, k - 1, l, kind, None);
                let mid = enumerate_paths(&g, &dm, k, l, kind, None);
                let high = enumerate_paths(&g, &dm, k + 1, l, kind, None);
                let d1 = boundary_matrix(&dm, &mid, &low).unwrap();
                let d2 = boundary_matrix(&dm, &high, &mid).unwrap();
                prop_assert!(d1.mul(&d2).unwrap().is_zero());
            }
        }
    }

    /// Summing the endpoint blocks reproduces the direct computation.
    #[test]
    fn endpoint_decomposition(seed in any::<u64>(), n in 2..=5usize) {
        let g = sample_graph(seed, n);
        for kind in [PathKind::Full, PathKind::Eulerian, PathKind::Discriminant] {
            let blocked = table(&g, kind, 3, 4, None).unwrap();
            let direct = table_direct(&g, kind, 3, 4).unwrap();
            prop_assert_eq!(&blocked.cells, &direct.cells);
        }
    }

    /// In the bounded Hasse graph of a ranked poset, every hat0-to-hat1
    /// path of length equal to the rank is self-avoiding, so the plain
    /// and self-avoiding bases coincide element-by-element.
    #[test]
    fn ranked_poset_top_grading_is_self_avoiding(
        which in 0..magh_core::corpus::CORPUS_NAMES.len(),
    ) {
        let p = magh_core::corpus::poset_by_name(magh_core::corpus::CORPUS_NAMES[which]).unwrap();
        let hatted = p.adjoin_bounds();
        let g = hatted.hasse_graph();
        let rk = hatted.longest_chain().0 as u32;
        let ends = Some((p.len() as u32, p.len() as u32 + 1));
        let dm = all_pairs_distances(&g);
        for k in 0..=rk as usize {
            let full = enumerate_paths(&g, &dm, k, rk, PathKind::Full, ends);
            let eul = enumerate_paths(&g, &dm, k, rk, PathKind::Eulerian, ends);
            let disc = enumerate_paths(&g, &dm, k, rk, PathKind::Discriminant, ends);
            prop_assert_eq!(&full.paths, &eul.paths);
            prop_assert!(disc.is_empty());
        }
        prop_assert!(!enumerate_paths(&g, &dm, rk as usize, rk, PathKind::Full, ends).is_empty());
    }

    /// Invariant factors agree with the determinant-divisor description:
    /// d_k = gcd of all k-by-k minors, f_k = d_k / d_{k-1}.
    #[test]
    fn snf_matches_determinant_divisors(
        entries in proptest::collection::vec(-4i64..=4, 16),
        rows in 1..=4usize,
        cols in 1..=4usize,
    ) {
        let m = SparseIntMatrix::from_triplets(
            rows,
            cols,
            (0..rows).flat_map(|r| {
                let entries = &entries;
                (0..cols).map(move |c| (r, c, BigInt::from(entries[r * 4 + c])))
            }),
        ).unwrap();
        let snf = smith_normal_form(&m);
        let divisors = determinant_divisors(&m);
        let mut prev = BigInt::from(1);
        for (k, d) in divisors.iter().enumerate() {
            let factor = snf.factors.get(k).cloned().unwrap_or_else(BigInt::zero);
            if d.is_zero() {
                prop_assert!(factor.is_zero());
            } else {
                prop_assert_eq!(&factor * &prev, d.clone());
                prev = d.clone();
            }
        }
    }
}

/// The two series routes (similarity-matrix inversion and weighted path
/// counting) agree coefficient-by-coefficient: exhaustively on every
/// connected graph class up to six vertices, and on a fixed
/// pseudo-random sample of larger graphs up to seven.
#[test]
fn magnitude_series_routes_agree() {
    use magh_core::enumerate::connected_graph_classes;
    use magh_core::{magnitude_series, SeriesMethod};
    let mut graphs = connected_graph_classes(6);
    graphs.extend(random_connected_graphs(0x73657269, 40, 7));
    for g in graphs {
        let inv = magnitude_series(&g, 8, SeriesMethod::MatrixInverse).unwrap();
        let sum = magnitude_series(&g, 8, SeriesMethod::PathSum).unwrap();
        assert_eq!(inv, sum, "series routes split on {:?}", g);
    }
}

/// Brute-force gcd of all k-by-k minors, for k up to min(rows, cols).
fn determinant_divisors(m: &SparseIntMatrix) -> Vec<BigInt> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                g = g.gcd(&minor(m, &rs, &cs));
            }
        }
        out.push(g.abs());
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Laplace expansion along the first selected row.
fn minor(m: &SparseIntMatrix, rs: &[usize], cs: &[usize]) -> BigInt {
    if rs.is_empty() {
        return BigInt::from(1);
    }
    let mut det = BigInt::zero();
    let rest: Vec<usize> = rs[1..].to_vec();
    for (j, &c) in cs.iter().enumerate() {
        let entry = m.get(rs[0], c);
        if entry.is_zero() {
            continue;
        }
        let sub: Vec<usize> = cs.iter().copied().filter(|&x| x != c).collect();
        let term = entry * minor(m, &rest, &sub);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}
