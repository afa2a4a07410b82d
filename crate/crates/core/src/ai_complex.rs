//! Position-tagged simplicial complexes attached to a vertex pair.
//!
//! For vertices a, b and a length bound l, the complex has one vertex
//! per (interior vertex, position) pair occurring in some a-b path of
//! length at most l, and a simplex for every subset of the tagged
//! interior of such a path. Relative homology of this complex against
//! the subcomplex of shorter induced paths recovers the (k+2, l) path
//! homology of the pair, and the variant restricted to self-avoiding
//! paths recovers its Eulerian counterpart.

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::homology::{homology_from_boundaries, HomologyGroup};
use crate::matrix::SparseIntMatrix;
use crate::paths::{enumerate_paths, PathKind};
use num_bigint::BigInt;
use std::collections::{BTreeMap, BTreeSet};

pub type TaggedVertex = (u32, u32);

/// A simplicial complex on position-tagged vertices. `simplices[d]`
/// holds the d-simplices (d + 1 tagged vertices, sorted by tag).
#[derive(Debug, Clone, Default)]
pub struct AiComplex {
    pub simplices: Vec<Vec<Vec<TaggedVertex>>>,
    /// Whether the (-1)-dimensional empty simplex is present. It is a
    /// subset of every tagged interior, and its induced path is (a, b)
    /// itself; keeping it augments the chain complex, which is what the
    /// path-homology comparison requires.
    pub has_empty: bool,
    index: Vec<BTreeMap<Vec<TaggedVertex>, usize>>,
}

impl AiComplex {
    fn from_set(mut sets: Vec<BTreeSet<Vec<TaggedVertex>>>, has_empty: bool) -> AiComplex {
        while sets.last().is_some_and(BTreeSet::is_empty) {
            sets.pop();
        }
        let simplices: Vec<Vec<Vec<TaggedVertex>>> =
            sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let index = simplices
            .iter()
            .map(|ss| ss.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        AiComplex { simplices, has_empty, index }
    }

    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn contains(&self, simplex: &[TaggedVertex]) -> bool {
        self.index
            .get(simplex.len() - 1)
            .is_some_and(|m| m.contains_key(simplex))
    }

    /// Number of nonempty simplices.
    pub fn simplex_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    /// Every simplex of `other` is a simplex of `self`.
    pub fn has_subcomplex(&self, other: &AiComplex) -> bool {
        (!other.has_empty || self.has_empty)
            && other.simplices.iter().flatten().all(|s| self.contains(s))
    }
}

/// Length of an a-to-b path induced by a tagged simplex. Repeats are
/// allowed and contribute zero; the value is None only when some hop
/// crosses components.
pub fn induced_len(dm: &DistanceMatrix, a: u32, b: u32, simplex: &[TaggedVertex]) -> Option<u32> {
    let mut total = 0u32;
    let mut cur = a;
    for &(v, _) in simplex {
        if v != cur {
            total += dm.get(cur, v)?;
        }
        cur = v;
    }
    if b != cur {
        total += dm.get(cur, b)?;
    }
    Some(total)
}

/// Interior vertices tagged by accumulated length from the start of the
/// path. Tagging by accumulated length (rather than by tuple position)
/// makes distinct paths share vertices exactly when the comparison with
/// path homology requires them to.
fn tagged_interior(dm: &DistanceMatrix, path: &[u32]) -> Vec<TaggedVertex> {
    let mut acc = 0u32;
    let mut out = Vec::with_capacity(path.len() - 2);
    for w in path.windows(2).take(path.len() - 2) {
        acc += dm.get(w[0], w[1]).expect("path steps are finite");
        out.push((w[1], acc));
    }
    out
}

fn insert_subsets(full: &[TaggedVertex], out: &mut Vec<BTreeSet<Vec<TaggedVertex>>>) {
    let m = full.len();
    for mask in 1u32..(1 << m) {
        let subset: Vec<TaggedVertex> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| full[i])
            .collect();
        let d = subset.len() - 1;
        while out.len() <= d {
            out.push(BTreeSet::new());
        }
        out[d].insert(subset);
    }
}

/// The full tagged complex of the pair (a, b) at length bound l.
pub fn tagged_complex(g: &Graph, a: u32, b: u32, l: u32) -> AiComplex {
    let dm = all_pairs_distances(g);
    let mut sets: Vec<BTreeSet<Vec<TaggedVertex>>> = Vec::new();
    for len in 0..=l {
        for k in 1..=len as usize {
            let basis = enumerate_paths(g, &dm, k, len, PathKind::Full, Some((a, b)));
            for path in &basis.paths {
                if path.len() > 2 {
                    insert_subsets(&tagged_interior(&dm, path), &mut sets);
                }
            }
        }
    }
    let has_empty = if a == b { true } else { dm.get(a, b).is_some_and(|d| d <= l) };
    AiComplex::from_set(sets, has_empty)
}

/// Subcomplex of simplices whose induced path has length at most l - 1.
pub fn tagged_subcomplex(g: &Graph, a: u32, b: u32, l: u32) -> AiComplex {
    let dm = all_pairs_distances(g);
    let full = tagged_complex(g, a, b, l);
    let sets = full
        .simplices
        .iter()
        .map(|ss| {
            ss.iter()
                .filter(|s| induced_len(&dm, a, b, s).is_some_and(|il| il + 1 <= l))
                .cloned()
                .collect()
        })
        .collect();
    let has_empty =
        full.has_empty && induced_len(&dm, a, b, &[]).is_some_and(|il| il + 1 <= l);
    AiComplex::from_set(sets, has_empty)
}

/// Simplices of the tagged complex whose induced path is self-avoiding
/// (all vertices distinct, a and b included) with length at most l.
pub fn self_avoiding_complex(g: &Graph, a: u32, b: u32, l: u32) -> AiComplex {
    let dm = all_pairs_distances(g);
    let full = tagged_complex(g, a, b, l);
    let sets = full
        .simplices
        .iter()
        .map(|ss| {
            ss.iter()
                .filter(|s| {
                    let mut verts: Vec<u32> = s.iter().map(|&(v, _)| v).collect();
                    verts.push(a);
                    verts.push(b);
                    let n = verts.len();
                    verts.sort_unstable();
                    verts.dedup();
                    verts.len() == n && induced_len(&dm, a, b, s).is_some_and(|il| il <= l)
                })
                .cloned()
                .collect()
        })
        .collect();
    let has_empty = a != b && dm.get(a, b).is_some_and(|d| d <= l);
    AiComplex::from_set(sets, has_empty)
}

/// Simplices of the self-avoiding complex whose induced path has length
/// at most l - 1. This keeps simplices whose tags are only realizable by
/// longer paths, which a plain length cutoff on the ambient complex would
/// discard; the quotient then matches the Eulerian path complex.
pub fn self_avoiding_subcomplex(g: &Graph, a: u32, b: u32, l: u32) -> AiComplex {
    let dm = all_pairs_distances(g);
    let full = self_avoiding_complex(g, a, b, l);
    let sets = full
        .simplices
        .iter()
        .map(|ss| {
            ss.iter()
                .filter(|s| induced_len(&dm, a, b, s).is_some_and(|il| il + 1 <= l))
                .cloned()
                .collect()
        })
        .collect();
    let has_empty = full.has_empty && dm.get(a, b).is_some_and(|d| d + 1 <= l);
    AiComplex::from_set(sets, has_empty)
}

/// Relative simplicial homology H_k(big, sub) over the integers. `sub`
/// must be a subcomplex of `big`.
pub fn relative_homology(big: &AiComplex, sub: &AiComplex, k: usize) -> Result<HomologyGroup> {
    if !big.has_subcomplex(sub) {
        return Err(Error::NotSubcomplex(
            "relative homology requires containment".into(),
        ));
    }
    let basis = |d: usize| -> Vec<&Vec<TaggedVertex>> {
        big.simplices
            .get(d)
            .map(|ss| ss.iter().filter(|s| !sub.contains(s)).collect())
            .unwrap_or_default()
    };
    let empty_rows = usize::from(big.has_empty && !sub.has_empty);
    let boundary = |d: usize| -> SparseIntMatrix {
        let cols = basis(d);
        if d == 0 {
            // augmentation onto the empty simplex, when it survives
            let mut m = SparseIntMatrix::zero(empty_rows, cols.len());
            for j in 0..cols.len() {
                if empty_rows == 1 {
                    m.set(0, j, BigInt::from(1));
                }
            }
            return m;
        }
        let rows = basis(d - 1);
        let row_index: BTreeMap<&Vec<TaggedVertex>, usize> =
            rows.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut m = SparseIntMatrix::zero(rows.len(), cols.len());
        for (j, s) in cols.iter().enumerate() {
            for i in 0..s.len() {
                let mut face = (*s).clone();
                face.remove(i);
                if let Some(&r) = row_index.get(&face) {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    m.add_to(r, j, &BigInt::from(sign));
                }
            }
        }
        m
    };
    homology_from_boundaries(&boundary(k), &boundary(k + 1))
}
