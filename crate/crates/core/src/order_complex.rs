//! Order complexes of posets: simplices are strictly increasing chains,
//! with the usual alternating-sign simplicial boundary over the integers.

use crate::matrix::SparseIntMatrix;
use crate::poset::Poset;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// The order complex of a poset. `simplices[d]` lists the chains of
/// length `d` (so `d + 1` elements), each written bottom to top, in
/// lexicographic order of element indices.
#[derive(Debug, Clone)]
pub struct OrderComplex {
    pub simplices: Vec<Vec<Vec<usize>>>,
    index: Vec<BTreeMap<Vec<usize>, usize>>,
}

impl OrderComplex {
    pub fn of(poset: &Poset) -> OrderComplex {
        let n = poset.len();
        let lt = poset.strict_less();
        let mut by_dim: Vec<Vec<Vec<usize>>> = vec![(0..n).map(|i| vec![i]).collect()];
        loop {
            let prev = by_dim.last().unwrap();
            let mut next = Vec::new();
            for chain in prev {
                let top = *chain.last().unwrap();
                for j in 0..n {
                    if lt[top][j] {
                        let mut c = chain.clone();
                        c.push(j);
                        next.push(c);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            by_dim.push(next);
        }
        let index = by_dim
            .iter()
            .map(|ss| {
                ss.iter()
                    .enumerate()
                    .map(|(i, s)| (s.clone(), i))
                    .collect()
            })
            .collect();
        OrderComplex { simplices: by_dim, index }
    }

    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn simplex_index(&self, dim: usize, simplex: &[usize]) -> Option<usize> {
        self.index.get(dim)?.get(simplex).copied()
    }

    /// Boundary ∂_d from d-chains to (d-1)-chains; zero-width matrix
    /// above the top dimension, zero-height matrix for d = 0.
    pub fn boundary(&self, d: usize) -> SparseIntMatrix {
        if d == 0 || d > self.dim() {
            let cols = self.simplices.get(d).map_or(0, Vec::len);
            let rows = if d == 0 {
                0
            } else {
                self.simplices.get(d - 1).map_or(0, Vec::len)
            };
            return SparseIntMatrix::zero(rows, cols);
        }
        let rows = self.simplices[d - 1].len();
        let cols = self.simplices[d].len();
        let mut m = SparseIntMatrix::zero(rows, cols);
        for (j, s) in self.simplices[d].iter().enumerate() {
            for i in 0..=d {
                let mut face = s.clone();
                face.remove(i);
                let r = self.index[d - 1][&face];
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m.add_to(r, j, &BigInt::from(sign));
            }
        }
        m
    }
}

/// A formal integer combination of simplices of one dimension.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntChain {
    pub terms: BTreeMap<Vec<usize>, BigInt>,
}

impl IntChain {
    pub fn zero() -> IntChain {
        IntChain::default()
    }

    pub fn add_term(&mut self, simplex: Vec<usize>, coeff: BigInt) {
        let e = self.terms.entry(simplex).or_insert_with(BigInt::zero);
        *e += coeff;
        if e.is_zero() {
            let key: Vec<Vec<usize>> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: i64) -> IntChain {
        let mut out = IntChain::zero();
        for (s, v) in &self.terms {
            out.add_term(s.clone(), v * BigInt::from(k));
        }
        out
    }

    pub fn sub(&self, other: &IntChain) -> IntChain {
        let mut out = self.clone();
        for (s, v) in &other.terms {
            out.add_term(s.clone(), -v.clone());
        }
        out
    }

    /// Simplicial boundary with alternating signs.
    pub fn boundary(&self) -> IntChain {
        let mut out = IntChain::zero();
        for (s, v) in &self.terms {
            if s.len() <= 1 {
                continue;
            }
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out.add_term(face, v * BigInt::from(sign));
            }
        }
        out
    }

    /// Coordinates in the basis of `complex.simplices[dim]`; fails when
    /// a term is not a simplex of that dimension.
    pub fn coordinates(&self, complex: &OrderComplex, dim: usize) -> Option<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); complex.simplices.get(dim).map_or(0, Vec::len)];
        for (s, c) in &self.terms {
            let i = complex.simplex_index(dim, s)?;
            v[i] = c.clone();
        }
        Some(v)
    }
}
