//! Rank-2 posets built from a 1-factorization of the complete graph K_k
//! and a derangement, whose order complexes carry 2-torsion in degree 1.
//!
//! Elements: minimal `a_i` for i in 1..=k; middle `b_{i,j}` for every
//! unordered pair {i, j}; maximal `c_m` for m in 1..k. Covers:
//! `a_i < b_{i,j}` always, and `b_{i,j} < c_m` iff the pair {i, j} lies
//! in block `B_m` or `B_{sigma(m)}` of the 1-factorization.

use crate::error::{Error, Result};
use crate::order_complex::IntChain;
use crate::poset::Poset;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeSet;

/// Input data for the construction. `sigma[m - 1]` is the image of `m`
/// under a derangement of `1..=k-1`; `blocks[m - 1]` is the perfect
/// matching `B_m`, pairs written `(i, j)` with `i < j`, 1-based.
#[derive(Debug, Clone)]
pub struct PkSigmaSpec {
    pub k: usize,
    pub sigma: Vec<usize>,
    pub blocks: Vec<Vec<(usize, usize)>>,
}

/// The poset together with the index maps needed to name its elements.
#[derive(Debug, Clone)]
pub struct PkSigma {
    pub spec: PkSigmaSpec,
    pub poset: Poset,
}

impl PkSigmaSpec {
    /// Round-robin (circle method) 1-factorization of K_k paired with
    /// the shift derangement m -> m + 1 (mod k - 1).
    pub fn round_robin(k: usize) -> Result<PkSigmaSpec> {
        if k <= 2 || k % 2 != 0 {
            return Err(Error::InvalidPkSigma(format!(
                "k must be even and greater than 2, got {k}"
            )));
        }
        // fix k; rotate 1..k-1: round m pairs k with m, and m+t with m-t
        let n = k - 1;
        let mut blocks = Vec::with_capacity(n);
        for m in 1..=n {
            let mut block = vec![(m.min(k), m.max(k))];
            for t in 1..=(k / 2 - 1) {
                let x = (m + t - 1).rem_euclid(n) + 1;
                let idx = (m as i64 - t as i64 - 1).rem_euclid(n as i64) as usize + 1;
                block.push((x.min(idx), x.max(idx)));
            }
            block.sort();
            blocks.push(block);
        }
        let sigma: Vec<usize> = (1..=n).map(|m| m % n + 1).collect();
        PkSigmaSpec { k, sigma, blocks }.validated()
    }

    pub fn new(k: usize, sigma: Vec<usize>, blocks: Vec<Vec<(usize, usize)>>) -> Result<PkSigmaSpec> {
        PkSigmaSpec { k, sigma, blocks }.validated()
    }

    fn validated(self) -> Result<PkSigmaSpec> {
        let k = self.k;
        if k <= 2 || k % 2 != 0 {
            return Err(Error::InvalidPkSigma(format!(
                "k must be even and greater than 2, got {k}"
            )));
        }
        let n = k - 1;
        if self.sigma.len() != n {
            return Err(Error::InvalidPkSigma(format!(
                "sigma must permute 1..={n}, got length {}",
                self.sigma.len()
            )));
        }
        let image: BTreeSet<usize> = self.sigma.iter().copied().collect();
        if image != (1..=n).collect() {
            return Err(Error::InvalidPkSigma("sigma is not a permutation".into()));
        }
        for (m, &s) in self.sigma.iter().enumerate() {
            if s == m + 1 {
                return Err(Error::InvalidPkSigma(format!(
                    "sigma fixes {}, it must be a derangement",
                    m + 1
                )));
            }
        }
        if self.blocks.len() != n {
            return Err(Error::InvalidPkSigma(format!(
                "expected {n} blocks, got {}",
                self.blocks.len()
            )));
        }
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (m, block) in self.blocks.iter().enumerate() {
            if block.len() != k / 2 {
                return Err(Error::InvalidPkSigma(format!(
                    "block {} has {} pairs, want {}",
                    m + 1,
                    block.len(),
                    k / 2
                )));
            }
            let mut touched = BTreeSet::new();
            for &(i, j) in block {
                if !(1..=k).contains(&i) || !(1..=k).contains(&j) || i >= j {
                    return Err(Error::InvalidPkSigma(format!(
                        "block {} contains bad pair ({i}, {j})",
                        m + 1
                    )));
                }
                if !touched.insert(i) || !touched.insert(j) {
                    return Err(Error::InvalidPkSigma(format!(
                        "block {} is not a perfect matching",
                        m + 1
                    )));
                }
                if !seen.insert((i, j)) {
                    return Err(Error::InvalidPkSigma(format!(
                        "pair ({i}, {j}) appears in two blocks"
                    )));
                }
            }
        }
        if seen.len() != k * (k - 1) / 2 {
            return Err(Error::InvalidPkSigma(
                "blocks do not cover every pair".into(),
            ));
        }
        Ok(self)
    }

    /// Block index (1-based) containing the pair {i, j}.
    pub fn block_of(&self, i: usize, j: usize) -> usize {
        let key = (i.min(j), i.max(j));
        self.blocks
            .iter()
            .position(|b| b.contains(&key))
            .expect("validated cover of all pairs")
            + 1
    }
}

pub fn a_label(i: usize) -> String {
    format!("a{i}")
}

pub fn b_label(i: usize, j: usize) -> String {
    format!("b{}{}", i.min(j), i.max(j))
}

pub fn c_label(m: usize) -> String {
    format!("c{m}")
}

pub fn build_pk_sigma(spec: PkSigmaSpec) -> Result<PkSigma> {
    let k = spec.k;
    let mut elements: Vec<String> = (1..=k).map(a_label).collect();
    let mut pair_index = std::collections::BTreeMap::new();
    for i in 1..=k {
        for j in i + 1..=k {
            pair_index.insert((i, j), elements.len());
            elements.push(b_label(i, j));
        }
    }
    let c_base = elements.len();
    for m in 1..k {
        elements.push(c_label(m));
    }
    let mut covers = Vec::new();
    for (&(i, j), &bi) in &pair_index {
        covers.push((i - 1, bi));
        covers.push((j - 1, bi));
    }
    for m in 1..k {
        let s = spec.sigma[m - 1];
        for src in [m, s] {
            for &(i, j) in &spec.blocks[src - 1] {
                covers.push((pair_index[&(i, j)], c_base + m - 1));
            }
        }
    }
    let poset = Poset::new(elements, covers)?;
    Ok(PkSigma { spec, poset })
}

impl PkSigma {
    fn idx(&self, label: &str) -> usize {
        self.poset.index_of(label).expect("construction labels")
    }

    /// The 1-cycle whose class generates a Z_2 subgroup of H_1 of the
    /// order complex: sum of all (b < c) minus all (a < c) plus all
    /// (a < b), each comparable pair once per order (3k(k-1) terms).
    pub fn alpha_chain(&self) -> IntChain {
        let k = self.spec.k;
        let mut alpha = IntChain::zero();
        for m in 1..k {
            let cm = self.idx(&c_label(m));
            let s = self.spec.sigma[m - 1];
            for src in [m, s] {
                for &(i, j) in &self.spec.blocks[src - 1] {
                    alpha.add_term(vec![self.idx(&b_label(i, j)), cm], BigInt::one());
                }
            }
            for i in 1..=k {
                alpha.add_term(vec![self.idx(&a_label(i)), cm], -BigInt::one());
            }
        }
        for i in 1..=k {
            for j in 1..=k {
                if i != j {
                    alpha.add_term(
                        vec![self.idx(&a_label(i)), self.idx(&b_label(i, j))],
                        BigInt::one(),
                    );
                }
            }
        }
        alpha
    }

    /// The 2-chain gamma with boundary 2 * alpha: sum over all maximal
    /// chains (a_i < b_{i,j} < c_m) with {i, j} in B_m or B_{sigma(m)}.
    pub fn gamma_chain(&self) -> IntChain {
        let k = self.spec.k;
        let mut gamma = IntChain::zero();
        for m in 1..k {
            let cm = self.idx(&c_label(m));
            let s = self.spec.sigma[m - 1];
            for src in [m, s] {
                for &(i, j) in &self.spec.blocks[src - 1] {
                    for end in [i, j] {
                        gamma.add_term(
                            vec![self.idx(&a_label(end)), self.idx(&b_label(i, j)), cm],
                            BigInt::one(),
                        );
                    }
                }
            }
        }
        gamma
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_robin_blocks_are_valid() {
        for k in [4, 6, 8, 10] {
            let spec = PkSigmaSpec::round_robin(k).unwrap();
            assert_eq!(spec.blocks.len(), k - 1);
        }
    }

    #[test]
    fn rejects_odd_or_small_k() {
        assert!(PkSigmaSpec::round_robin(3).is_err());
        assert!(PkSigmaSpec::round_robin(2).is_err());
        assert!(PkSigmaSpec::round_robin(5).is_err());
    }

    #[test]
    fn rejects_identity_fixed_point() {
        let spec = PkSigmaSpec::round_robin(4).unwrap();
        assert!(PkSigmaSpec::new(4, vec![1, 3, 2], spec.blocks.clone()).is_err());
    }

    #[test]
    fn poset_shape_k4() {
        let pk = build_pk_sigma(PkSigmaSpec::round_robin(4).unwrap()).unwrap();
        // 4 minimal + 6 middle + 3 maximal
        assert_eq!(pk.poset.len(), 13);
        assert!(pk.poset.is_graded());
        assert_eq!(pk.poset.longest_chain().0, 2);
        // each b covers two a's; each c covers 2 blocks * 2 pairs = 4 b's
        assert_eq!(pk.poset.covers.len(), 12 + 12);
    }

    #[test]
    fn gamma_boundary_is_twice_alpha() {
        for k in [4, 6] {
            let pk = build_pk_sigma(PkSigmaSpec::round_robin(k).unwrap()).unwrap();
            let alpha = pk.alpha_chain();
            assert_eq!(alpha.terms.len(), 3 * k * (k - 1));
            let diff = pk.gamma_chain().boundary().sub(&alpha.scale(2));
            assert!(diff.is_zero(), "boundary(gamma) != 2 alpha at k={k}");
            // alpha is a cycle
            assert!(alpha.boundary().is_zero());
        }
    }
}
