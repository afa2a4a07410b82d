//! The magnitude power series of a connected graph, computed two ways:
//! by inverting the similarity matrix over truncated integer power
//! series, and by the alternating sum over k-paths.

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Truncated integer power series: coefficients `c_0..c_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    pub fn zero(trunc: usize) -> PowerSeries {
        PowerSeries { coeffs: vec![BigInt::zero(); trunc + 1] }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, l: usize) -> &BigInt {
        &self.coeffs[l]
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesMethod {
    MatrixInverse,
    PathSum,
}

/// First `trunc + 1` coefficients of the magnitude of `g`.
pub fn magnitude_series(g: &Graph, trunc: usize, method: SeriesMethod) -> Result<PowerSeries> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match method {
        SeriesMethod::MatrixInverse => Ok(by_matrix_inverse(g, trunc)),
        SeriesMethod::PathSum => Ok(by_path_sum(g, trunc)),
    }
}

/// The similarity matrix is I + M with M(a,b) = q^d(a,b) for a != b, so
/// its inverse over Z[[q]]/(q^{N+1}) is the Neumann sum of (-M)^j; M has
/// no constant term, hence only j <= N contributes.
fn by_matrix_inverse(g: &Graph, trunc: usize) -> PowerSeries {
    let n = g.vertex_count();
    let dist = all_pairs_distances(g);
    // off-diagonal part of zeta as polynomial matrices, entry = vec of coeffs
    let mut m = vec![vec![vec![BigInt::zero(); trunc + 1]; n]; n];
    for a in 0..n {
        for b in 0..n {
            if a != b {
                let d = dist.get(a as u32, b as u32).unwrap() as usize;
                if d <= trunc {
                    m[a][b][d] = BigInt::one();
                }
            }
        }
    }
    // accumulate sum of entries of (-1)^j M^j
    let mut total = PowerSeries::zero(trunc);
    // power = M^j, start with identity
    let mut power = vec![vec![vec![BigInt::zero(); trunc + 1]; n]; n];
    for (a, row) in power.iter_mut().enumerate() {
        row[a][0] = BigInt::one();
    }
    for j in 0..=trunc {
        let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        for row in &power {
            for entry in row {
                for (l, c) in entry.iter().enumerate() {
                    if !c.is_zero() {
                        total.coeffs[l] += &sign * c;
                    }
                }
            }
        }
        if j == trunc {
            break;
        }
        power = poly_mat_mul(&power, &m, trunc);
    }
    total
}

fn poly_mat_mul(
    a: &[Vec<Vec<BigInt>>],
    b: &[Vec<Vec<BigInt>>],
    trunc: usize,
) -> Vec<Vec<Vec<BigInt>>> {
    let n = a.len();
    let mut out = vec![vec![vec![BigInt::zero(); trunc + 1]; n]; n];
    for i in 0..n {
        for k in 0..n {
            let left = &a[i][k];
            if left.iter().all(Zero::is_zero) {
                continue;
            }
            for j in 0..n {
                let right = &b[k][j];
                for (la, ca) in left.iter().enumerate() {
                    if ca.is_zero() {
                        continue;
                    }
                    for (lb, cb) in right.iter().enumerate() {
                        if la + lb > trunc {
                            break;
                        }
                        if !cb.is_zero() {
                            out[i][j][la + lb] += ca * cb;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Alternating sum over k-paths: coefficient of q^l gets
/// sum_k (-1)^k #{k-paths of length l}. A k-path has length >= k, so the
/// outer sum stops at k = trunc. Counts are accumulated by dynamic
/// programming over (last vertex, accumulated length).
fn by_path_sum(g: &Graph, trunc: usize) -> PowerSeries {
    let n = g.vertex_count();
    let dist = all_pairs_distances(g);
    let mut total = PowerSeries::zero(trunc);
    // k = 0: one 0-path per vertex, length 0
    total.coeffs[0] += n;
    // counts[v][l] = number of k-paths ending at v with length l
    let mut counts = vec![vec![BigInt::zero(); trunc + 1]; n];
    for row in counts.iter_mut() {
        row[0] = BigInt::one();
    }
    for k in 1..=trunc {
        let mut next = vec![vec![BigInt::zero(); trunc + 1]; n];
        for v in 0..n {
            for w in 0..n {
                if v == w {
                    continue;
                }
                let d = dist.get(v as u32, w as u32).unwrap() as usize;
                for l in 0..=trunc.saturating_sub(d) {
                    if !counts[v][l].is_zero() {
                        let c = counts[v][l].clone();
                        next[w][l + d] += c;
                    }
                }
            }
        }
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        for row in &next {
            for (l, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    total.coeffs[l] += &sign * c;
                }
            }
        }
        counts = next;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.coefficients()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn k1_is_one() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let s = magnitude_series(&g, 4, SeriesMethod::MatrixInverse).unwrap();
        assert_eq!(ints(&s), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn k2_alternates() {
        let g = generate(Family::Complete(2)).unwrap();
        for method in [SeriesMethod::MatrixInverse, SeriesMethod::PathSum] {
            let s = magnitude_series(&g, 5, method).unwrap();
            assert_eq!(ints(&s), vec![2, -2, 2, -2, 2, -2]);
        }
    }

    #[test]
    fn constant_term_is_vertex_count() {
        for fam in [Family::Star(3), Family::Cycle(5), Family::Path(4)] {
            let g = generate(fam).unwrap();
            let s = magnitude_series(&g, 3, SeriesMethod::MatrixInverse).unwrap();
            assert_eq!(s.coefficient(0), &num_bigint::BigInt::from(g.vertex_count()));
        }
    }

    #[test]
    fn methods_agree_on_small_graphs() {
        for fam in [
            Family::Star(4),
            Family::Path(4),
            Family::Complete(4),
            Family::Cycle(5),
        ] {
            let g = generate(fam).unwrap();
            let a = magnitude_series(&g, 8, SeriesMethod::MatrixInverse).unwrap();
            let b = magnitude_series(&g, 8, SeriesMethod::PathSum).unwrap();
            assert_eq!(a, b, "{fam:?}");
        }
    }

    #[test]
    fn disconnected_is_error() {
        let g = Graph::from_edges(2, &[]).unwrap();
        assert!(magnitude_series(&g, 3, SeriesMethod::PathSum).is_err());
    }
}
