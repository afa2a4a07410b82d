//! Integral homology of the graded path complexes, bigraded tables, and
//! cycle order certificates.

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};
use crate::matrix::SparseIntMatrix;
use crate::order_complex::OrderComplex;
use crate::paths::{boundary_matrix, enumerate_paths, PathBasis, PathKind};
use crate::snf::{smith_normal_form, smith_normal_form_with_transforms};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A finitely generated abelian group: free rank plus invariant factors
/// greater than 1, in ascending divisibility order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn free(rank: usize) -> HomologyGroup {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    /// Direct sum: ranks add, torsion multisets merge.
    pub fn add(&mut self, other: &HomologyGroup) {
        self.rank += other.rank;
        self.torsion.extend(other.torsion.iter().cloned());
        self.torsion.sort();
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rank": self.rank,
            "torsion": self.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.rank == 1 {
            parts.push("Z".to_string());
        } else if self.rank > 1 {
            parts.push(format!("Z^{}", self.rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Homology at position k of ... -> C_{k+1} -> C_k -> C_{k-1} -> ...
/// given `d_out`: C_k -> C_{k-1} and `d_in`: C_{k+1} -> C_k.
pub fn homology_from_boundaries(
    d_out: &SparseIntMatrix,
    d_in: &SparseIntMatrix,
) -> Result<HomologyGroup> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::DimensionMismatch(format!(
            "outgoing boundary has {} columns, incoming has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    let rank_out = smith_normal_form(d_out).rank;
    let snf_in = smith_normal_form(d_in);
    let nullity = d_out.cols() - rank_out;
    if snf_in.rank > nullity {
        return Err(Error::NotAComplex);
    }
    Ok(HomologyGroup {
        rank: nullity - snf_in.rank,
        torsion: snf_in.nontrivial_factors(),
    })
}

/// Simplicial homology of an order complex in degree d; `reduced`
/// augments over the empty simplex.
pub fn order_complex_homology(oc: &OrderComplex, d: usize, reduced: bool) -> HomologyGroup {
    let d_out = if d == 0 && reduced {
        let n = oc.simplices[0].len();
        let mut m = SparseIntMatrix::zero(1, n);
        for j in 0..n {
            m.set(0, j, BigInt::one());
        }
        m
    } else {
        oc.boundary(d)
    };
    let d_in = oc.boundary(d + 1);
    homology_from_boundaries(&d_out, &d_in).expect("simplicial boundaries compose")
}

/// A table of homology groups indexed by (k, l).
#[derive(Debug, Clone, Default)]
pub struct BiGradedTable {
    pub kind: PathKind,
    pub cells: BTreeMap<(usize, u32), HomologyGroup>,
}

impl Default for PathKind {
    fn default() -> PathKind {
        PathKind::Full
    }
}

impl BiGradedTable {
    pub fn get(&self, k: usize, l: u32) -> HomologyGroup {
        self.cells.get(&(k, l)).cloned().unwrap_or_default()
    }

    pub fn rank(&self, k: usize, l: u32) -> usize {
        self.cells.get(&(k, l)).map_or(0, |h| h.rank)
    }

    /// Cells with a nontrivial group, as `{"(k,l)": {rank, torsion}}`.
    pub fn to_json(&self, kind_name: &str, graph_id: &str) -> serde_json::Value {
        let mut cells = serde_json::Map::new();
        for ((k, l), h) in &self.cells {
            if !h.is_trivial() {
                cells.insert(format!("({k},{l})"), h.to_json());
            }
        }
        serde_json::json!({
            "kind": kind_name,
            "graph": graph_id,
            "cells": cells,
        })
    }

    pub fn total_torsion(&self) -> Vec<BigInt> {
        let mut all: Vec<BigInt> = self
            .cells
            .values()
            .flat_map(|h| h.torsion.iter().cloned())
            .collect();
        all.sort();
        all
    }
}

pub fn kind_name(kind: PathKind) -> &'static str {
    match kind {
        PathKind::Full => "MH",
        PathKind::Eulerian => "EMH",
        PathKind::Discriminant => "DMH",
    }
}

/// Homology of one endpoint block over all (k, l) in range. The bases
/// at k+1 are needed for the incoming boundary at k = kmax.
fn block_table(
    g: &Graph,
    dm: &crate::graph::DistanceMatrix,
    kind: PathKind,
    kmax: usize,
    lmax: u32,
    endpoints: Option<(u32, u32)>,
) -> Result<BiGradedTable> {
    let mut cells = BTreeMap::new();
    for l in 0..=lmax {
        let top = (kmax + 1).min(l as usize + 1);
        let bases: Vec<PathBasis> = (0..=top)
            .map(|k| enumerate_paths(g, dm, k, l, kind, endpoints))
            .collect();
        if bases.iter().all(PathBasis::is_empty) {
            continue;
        }
        for k in 0..=kmax.min(top) {
            let d_out = if k == 0 {
                SparseIntMatrix::zero(0, bases[0].len())
            } else {
                boundary_matrix(dm, &bases[k], &bases[k - 1])?
            };
            let d_in = if k + 1 <= top {
                boundary_matrix(dm, &bases[k + 1], &bases[k])?
            } else {
                SparseIntMatrix::zero(bases[k].len(), 0)
            };
            let h = homology_from_boundaries(&d_out, &d_in)?;
            if !h.is_trivial() {
                cells.insert((k, l), h);
            }
        }
    }
    Ok(BiGradedTable { kind, cells })
}

/// Bigraded homology table. With `endpoints` unset the computation runs
/// one endpoint pair at a time and direct-sums the results; boundaries
/// fix endpoints, so the decomposition is exact.
pub fn table(
    g: &Graph,
    kind: PathKind,
    kmax: usize,
    lmax: u32,
    endpoints: Option<(u32, u32)>,
) -> Result<BiGradedTable> {
    let dm = all_pairs_distances(g);
    if let Some((a, b)) = endpoints {
        let n = g.vertex_count() as u32;
        if a >= n || b >= n {
            return Err(Error::InvalidGraph(format!(
                "endpoint pair ({a}, {b}) out of range for {n} vertices"
            )));
        }
        return block_table(g, &dm, kind, kmax, lmax, Some((a, b)));
    }
    let n = g.vertex_count() as u32;
    let mut total = BiGradedTable { kind, cells: BTreeMap::new() };
    for a in 0..n {
        for b in 0..n {
            let block = block_table(g, &dm, kind, kmax, lmax, Some((a, b)))?;
            for (key, h) in block.cells {
                total.cells.entry(key).or_default().add(&h);
            }
        }
    }
    Ok(total)
}

/// Homology at a single bigrading, summed over endpoint blocks unless a
/// pair is fixed. The unit of work the parallel runner schedules.
pub fn cell(
    g: &Graph,
    kind: PathKind,
    k: usize,
    l: u32,
    endpoints: Option<(u32, u32)>,
) -> Result<HomologyGroup> {
    let dm = all_pairs_distances(g);
    let pairs: Vec<Option<(u32, u32)>> = match endpoints {
        Some(p) => vec![Some(p)],
        None => {
            let n = g.vertex_count() as u32;
            (0..n).flat_map(|a| (0..n).map(move |b| Some((a, b)))).collect()
        }
    };
    let mut total = HomologyGroup::default();
    for pair in pairs {
        let here = enumerate_paths(g, &dm, k, l, kind, pair);
        if here.is_empty() {
            continue;
        }
        let d_out = if k == 0 {
            SparseIntMatrix::zero(0, here.len())
        } else {
            let below = enumerate_paths(g, &dm, k - 1, l, kind, pair);
            boundary_matrix(&dm, &here, &below)?
        };
        let above = enumerate_paths(g, &dm, k + 1, l, kind, pair);
        let d_in = boundary_matrix(&dm, &above, &here)?;
        total.add(&homology_from_boundaries(&d_out, &d_in)?);
    }
    Ok(total)
}

/// Same table computed from whole-graph boundary matrices, without the
/// endpoint decomposition. Slower; used to cross-check `table`.
pub fn table_direct(g: &Graph, kind: PathKind, kmax: usize, lmax: u32) -> Result<BiGradedTable> {
    let dm = all_pairs_distances(g);
    let mut t = block_table(g, &dm, kind, kmax, lmax, None)?;
    t.cells.retain(|_, h| !h.is_trivial());
    Ok(t)
}

/// Per-length Euler characteristic of the chain complex and of its
/// homology; the two must agree.
pub fn euler_check(g: &Graph, kind: PathKind, l: u32) -> Result<(i64, i64)> {
    let dm = all_pairs_distances(g);
    let t = table(g, kind, l as usize, l, None)?;
    let mut chain_sum = 0i64;
    for k in 0..=l as usize {
        let b = enumerate_paths(g, &dm, k, l, kind, None);
        chain_sum += if k % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) };
    }
    let mut hom_sum = 0i64;
    for ((k, cl), h) in &t.cells {
        if *cl == l {
            hom_sum += if k % 2 == 0 { h.rank as i64 } else { -(h.rank as i64) };
        }
    }
    Ok((chain_sum, hom_sum))
}

/// One length of the magnitude-series comparison: the alternating sum of
/// homology ranks against the series coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerLine {
    pub l: u32,
    pub homology_sum: BigInt,
    pub series_coefficient: BigInt,
}

impl EulerLine {
    pub fn holds(&self) -> bool {
        self.homology_sum == self.series_coefficient
    }
}

/// Compares the alternating sum of MH ranks per length against the
/// magnitude series of the graph, truncated at length `n`.
pub fn euler_series_check(g: &Graph, n: u32) -> Result<Vec<EulerLine>> {
    let series = crate::series::magnitude_series(g, n as usize, crate::series::SeriesMethod::MatrixInverse)?;
    let t = table(g, PathKind::Full, n as usize, n, None)?;
    let mut out = Vec::new();
    for l in 0..=n {
        let mut sum = BigInt::from(0);
        for ((k, cl), h) in &t.cells {
            if *cl == l {
                let r = BigInt::from(h.rank);
                if k % 2 == 0 {
                    sum += r;
                } else {
                    sum -= r;
                }
            }
        }
        out.push(EulerLine {
            l,
            homology_sum: sum,
            series_coefficient: series.coefficient(l as usize).clone(),
        });
    }
    Ok(out)
}

/// Order of a homology class: given `d_out` (cycles live in its kernel)
/// and `d_in` (whose image is quotiented out), returns the least m > 0
/// with m * cycle a boundary, or 0 when no multiple is a boundary.
pub fn cycle_order(
    d_out: &SparseIntMatrix,
    d_in: &SparseIntMatrix,
    cycle: &[BigInt],
) -> Result<BigInt> {
    let image = d_out.mul_vec(cycle)?;
    if image.iter().any(|v| !v.is_zero()) {
        return Err(Error::NotACycle);
    }
    let snf = smith_normal_form_with_transforms(d_in);
    let t = snf.transforms.as_ref().expect("transforms requested");
    let y = t.row_transform.mul_vec(cycle)?;
    let mut pivot_row = vec![None; d_in.rows()];
    for (j, &(r, _)) in t.pivots.iter().enumerate() {
        pivot_row[r] = Some(j);
    }
    let mut order = BigInt::one();
    for (r, val) in y.iter().enumerate() {
        match pivot_row[r] {
            Some(j) => {
                let d = t.diagonal[j].clone();
                let g = d.gcd(val);
                let need = (d / g).abs();
                order = order.lcm(&need);
            }
            None => {
                if !val.is_zero() {
                    return Ok(BigInt::zero());
                }
            }
        }
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::order_complex::OrderComplex;
    use crate::poset::Poset;

    #[test]
    fn complete_graph_homology_is_diagonal() {
        let g = generate(Family::Complete(4)).unwrap();
        let t = table(&g, PathKind::Full, 3, 3, None).unwrap();
        // K_n: MH_{k,k} has rank n (n-1)^k, nothing off the diagonal
        for ((k, l), h) in &t.cells {
            assert_eq!(k, &(*l as usize), "off-diagonal group {h} at ({k},{l})");
        }
        assert_eq!(t.rank(0, 0), 4);
        assert_eq!(t.rank(1, 1), 12);
        assert_eq!(t.rank(2, 2), 36);
        assert_eq!(t.rank(3, 3), 108);
        assert!(t.total_torsion().is_empty());
    }

    #[test]
    fn blockwise_matches_direct() {
        let g = crate::graph::cricket();
        for kind in [PathKind::Full, PathKind::Eulerian, PathKind::Discriminant] {
            let a = table(&g, kind, 3, 4, None).unwrap();
            let b = table_direct(&g, kind, 3, 4).unwrap();
            assert_eq!(a.cells, b.cells, "kind {kind:?}");
        }
    }

    #[test]
    fn euler_characteristics_agree() {
        let g = generate(Family::Cycle(5)).unwrap();
        for l in 0..5 {
            let (c, h) = euler_check(&g, PathKind::Full, l).unwrap();
            assert_eq!(c, h, "euler mismatch at l={l}");
        }
    }

    #[test]
    fn circle_order_complex() {
        // hexagon boundary as a poset: 3 vertices under 3 edges... use a
        // crown: order complex of this 6-element poset is a hexagon
        let p = Poset::new(
            (0..6).map(|i| format!("x{i}")).collect(),
            vec![(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5)],
        )
        .unwrap();
        let oc = OrderComplex::of(&p);
        assert_eq!(order_complex_homology(&oc, 0, false), HomologyGroup::free(1));
        assert_eq!(order_complex_homology(&oc, 1, false), HomologyGroup::free(1));
        assert!(order_complex_homology(&oc, 0, true).is_trivial());
    }

    #[test]
    fn cycle_order_detects_torsion() {
        // Z -> Z, multiplication by 3: class of 1 has order 3
        let d_out = SparseIntMatrix::zero(0, 1);
        let mut d_in = SparseIntMatrix::zero(1, 1);
        d_in.set(0, 0, BigInt::from(3));
        let ord = cycle_order(&d_out, &d_in, &[BigInt::one()]).unwrap();
        assert_eq!(ord, BigInt::from(3));
        // free class: order 0
        let free = cycle_order(&d_out, &SparseIntMatrix::zero(1, 0), &[BigInt::one()]).unwrap();
        assert!(free.is_zero());
    }
}
