//! Graded path bases and boundary matrices.
//!
//! A k-path is a (k+1)-tuple of vertices with consecutive entries
//! distinct and at finite distance; its length is the sum of the
//! consecutive distances. The (k, l) chain group is free on the k-paths
//! of length exactly l. The boundary drops an interior vertex with sign
//! (-1)^i whenever doing so preserves the length. Endpoints are fixed by
//! the boundary, so everything decomposes over ordered endpoint pairs.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::matrix::SparseIntMatrix;
use num_bigint::BigInt;
use std::collections::HashMap;

/// Which chain groups to use: all paths, only paths with pairwise
/// distinct vertices, or the quotient of the former by the latter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathKind {
    Full,
    Eulerian,
    Discriminant,
}

impl PathKind {
    pub fn parse(s: &str) -> Result<PathKind> {
        match s {
            "mh" => Ok(PathKind::Full),
            "emh" => Ok(PathKind::Eulerian),
            "dmh" => Ok(PathKind::Discriminant),
            other => Err(Error::InvalidGenerator(format!("unknown kind {other:?}"))),
        }
    }
}

pub fn path_len(dm: &DistanceMatrix, path: &[u32]) -> Option<u32> {
    let mut total = 0;
    for w in path.windows(2) {
        total += dm.get(w[0], w[1])?;
        if w[0] == w[1] {
            return None;
        }
    }
    Some(total)
}

pub fn is_eulerian(path: &[u32]) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(path.len());
    path.iter().all(|v| seen.insert(*v))
}

/// Ordered basis of the (k, l) chain group, optionally restricted to a
/// fixed ordered endpoint pair. Paths are in lexicographic order.
#[derive(Debug, Clone)]
pub struct PathBasis {
    pub k: usize,
    pub l: u32,
    pub kind: PathKind,
    pub paths: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl PathBasis {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn position(&self, path: &[u32]) -> Option<usize> {
        self.index.get(path).copied()
    }
}

/// Enumerates the basis by depth-first search with two prunes: every
/// remaining step costs at least 1, and the walk must still be able to
/// reach the target within the remaining budget.
pub fn enumerate_paths(
    g: &Graph,
    dm: &DistanceMatrix,
    k: usize,
    l: u32,
    kind: PathKind,
    endpoints: Option<(u32, u32)>,
) -> PathBasis {
    let n = g.vertex_count() as u32;
    let mut paths = Vec::new();
    let starts: Vec<u32> = match endpoints {
        Some((a, _)) => vec![a],
        None => (0..n).collect(),
    };
    let target = endpoints.map(|(_, b)| b);
    let mut stack: Vec<u32> = Vec::with_capacity(k + 1);
    let mut on_path = vec![false; n as usize];
    for a in starts {
        stack.push(a);
        on_path[a as usize] = true;
        dfs(dm, n, k, l, kind, target, &mut stack, &mut on_path, 0, &mut paths);
        on_path[a as usize] = false;
        stack.pop();
    }
    paths.sort();
    let index = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    PathBasis { k, l, kind, paths, index }
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    dm: &DistanceMatrix,
    n: u32,
    k: usize,
    l: u32,
    kind: PathKind,
    target: Option<u32>,
    stack: &mut Vec<u32>,
    on_path: &mut [bool],
    len_so_far: u32,
    out: &mut Vec<Vec<u32>>,
) {
    let cur = *stack.last().unwrap();
    let remaining = k + 1 - stack.len();
    if remaining == 0 {
        if len_so_far == l
            && target.is_none_or(|b| b == cur)
            && match kind {
                PathKind::Full => true,
                PathKind::Eulerian => is_eulerian(stack),
                PathKind::Discriminant => !is_eulerian(stack),
            }
        {
            out.push(stack.clone());
        }
        return;
    }
    for next in 0..n {
        if next == cur {
            continue;
        }
        // the discriminant quotient basis forbids only fully distinct
        // tuples, so revisits are pruned solely in the Eulerian case
        if kind == PathKind::Eulerian && on_path[next as usize] {
            continue;
        }
        let Some(step) = dm.get(cur, next) else { continue };
        let len = len_so_far + step;
        let min_rest = match target {
            Some(b) => {
                let Some(d) = dm.get(next, b) else { continue };
                d.max(remaining as u32 - 1)
            }
            None => remaining as u32 - 1,
        };
        if len + min_rest > l {
            continue;
        }
        stack.push(next);
        let was = on_path[next as usize];
        on_path[next as usize] = true;
        dfs(dm, n, k, l, kind, target, stack, on_path, len, out);
        on_path[next as usize] = was;
        stack.pop();
    }
}

/// Faces of a path that survive in the same length grading: dropping
/// interior position i keeps the length iff v_{i-1}, v_i, v_{i+1} lie on
/// a geodesic. Returns (position, face) pairs.
pub fn length_preserving_faces(dm: &DistanceMatrix, path: &[u32]) -> Vec<(usize, Vec<u32>)> {
    let mut out = Vec::new();
    for i in 1..path.len().saturating_sub(1) {
        let (a, b, c) = (path[i - 1], path[i], path[i + 1]);
        let (d_ab, d_bc, d_ac) = (
            dm.get(a, b).expect("path distances finite"),
            dm.get(b, c).expect("path distances finite"),
            dm.get(a, c),
        );
        if d_ac == Some(d_ab + d_bc) {
            let mut face = path.to_vec();
            face.remove(i);
            out.push((i, face));
        }
    }
    out
}

/// Boundary from the (k, l) basis to the (k-1, l) basis. For the
/// discriminant quotient, faces that are fully distinct map to zero.
/// `from.k` must be `to.k + 1` with equal `l` and kind.
pub fn boundary_matrix(
    dm: &DistanceMatrix,
    from: &PathBasis,
    to: &PathBasis,
) -> Result<SparseIntMatrix> {
    if from.k != to.k + 1 || from.l != to.l || from.kind != to.kind {
        return Err(Error::BasisMismatch(format!(
            "boundary from (k={}, l={}) to (k={}, l={})",
            from.k, from.l, to.k, to.l
        )));
    }
    let mut m = SparseIntMatrix::zero(to.len(), from.len());
    for (j, path) in from.paths.iter().enumerate() {
        for (i, face) in length_preserving_faces(dm, path) {
            let Some(r) = to.position(&face) else {
                // in the quotient, Eulerian faces are killed
                debug_assert!(
                    from.kind == PathKind::Discriminant && is_eulerian(&face),
                    "face missing from target basis"
                );
                continue;
            };
            let sign = if i % 2 == 0 { 1 } else { -1 };
            m.add_to(r, j, &BigInt::from(sign));
        }
    }
    Ok(m)
}
