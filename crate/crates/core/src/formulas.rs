//! Closed-form rank oracles for star and complete graphs, support bounds
//! for Eulerian gradings, and small conjecture checkers.

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, generate, Family, Graph};
use crate::homology::{table, BiGradedTable};
use crate::paths::{enumerate_paths, PathKind};

/// Largest bigrading that can carry a nonzero Eulerian group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportBounds {
    /// Largest k with a nonzero Eulerian chain group: |V| - 1.
    pub k_max: usize,
    /// Largest length over all Eulerian paths; attained by a k_max-path.
    pub l_max: u32,
}

/// k_max and l_max by exact search over vertex orderings.
pub fn support_bounds(g: &Graph) -> Result<SupportBounds> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let dm = all_pairs_distances(g);
    // maximize total length over permutations; any Eulerian path extends
    // to a full ordering without losing length, so k_max-paths suffice
    let mut best = 0u32;
    let mut used = vec![false; n];
    fn dfs(
        dm: &crate::graph::DistanceMatrix,
        used: &mut [bool],
        last: Option<u32>,
        placed: usize,
        len: u32,
        best: &mut u32,
    ) {
        let n = used.len();
        if placed == n {
            *best = (*best).max(len);
            return;
        }
        for v in 0..n as u32 {
            if used[v as usize] {
                continue;
            }
            let step = match last {
                None => 0,
                Some(u) => match dm.get(u, v) {
                    Some(d) => d,
                    None => continue,
                },
            };
            used[v as usize] = true;
            dfs(dm, used, Some(v), placed + 1, len + step, best);
            used[v as usize] = false;
        }
    }
    dfs(&dm, &mut used, None, 0, 0, &mut best);
    Ok(SupportBounds {
        k_max: n - 1,
        l_max: best,
    })
}

/// Falling factorial n(n-1)...(n-k+1); zero when k > n.
pub fn falling(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).map(|i| n - i).product()
}

/// Expected rank of EMH_{k,l}(S_n) for the star with n leaves.
pub fn star_emh_rank(n: u64, k: usize, l: u32) -> u64 {
    let k64 = k as u64;
    match (k, l) {
        (0, 0) => n + 1,
        (1, 1) => 2 * n,
        _ if k >= 2 && l as u64 == 2 * k64 - 1 => 2 * falling(n, k64),
        _ if k >= 3 && l as u64 == 2 * (k64 - 1) => (k64 - 2) * falling(n, k64),
        _ => 0,
    }
}

/// Expected rank of DMH_{k,l}(S_n). On the diagonal these are the
/// closed forms; off the diagonal the long exact sequence relating the
/// three theories gives DMH_{k,l} = EMH_{k-1,l} because the plain
/// homology of a tree is concentrated on the diagonal.
pub fn star_dmh_rank(n: u64, k: usize, l: u32) -> u64 {
    if l as u64 != k as u64 {
        // chain groups vanish below the diagonal; above it the sequence
        // identifies DMH with EMH one homological degree down
        if k == 0 || (l as u64) < k as u64 {
            return 0;
        }
        return star_emh_rank(n, k - 1, l);
    }
    match k {
        0 | 1 => 0,
        2 => 2 * n,
        3 => 2 * (n + falling(n, 2)),
        4 => 2 * n + falling(n, 3),
        _ => 2 * n,
    }
}

/// A stated diagonal rank for K_n next to the count the construction
/// actually produces. The two disagree in general: the k-path count uses
/// k+1 vertices, so the enumeration gives the falling factorial with one
/// more term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompleteRank {
    pub stated: u64,
    pub oracle: u64,
}

/// EMH_{k,k}(K_n): stated formula and enumeration count side by side.
pub fn complete_emh_rank(n: u64, k: usize) -> CompleteRank {
    CompleteRank {
        stated: falling(n, k as u64),
        oracle: falling(n, k as u64 + 1),
    }
}

/// DMH_{k,k}(K_n): stated formula and enumeration-based count.
pub fn complete_dmh_rank(n: u64, k: usize) -> CompleteRank {
    let paths = n * (n - 1).pow(k as u32);
    CompleteRank {
        stated: paths - falling(n, k as u64),
        oracle: paths - falling(n, k as u64 + 1),
    }
}

/// Checks that the Eulerian homology at (k_max, l_max) is nontrivial and
/// equals the chain group there: free, with rank the number of Eulerian
/// k_max-paths of length l_max.
pub fn emh_max_check(g: &Graph) -> Result<bool> {
    let b = support_bounds(g)?;
    let dm = all_pairs_distances(g);
    let basis = enumerate_paths(g, &dm, b.k_max, b.l_max, PathKind::Eulerian, None);
    let t = table(g, PathKind::Eulerian, b.k_max, b.l_max, None)?;
    let h = t.get(b.k_max, b.l_max);
    Ok(!basis.is_empty() && h.torsion.is_empty() && h.rank == basis.len())
}

/// Diagonality checks for a tree: MH diagonal, EMH trivial on the
/// diagonal for k >= 2, off-diagonal DMH equal to EMH one degree down
/// (long exact sequence, since MH is diagonal), plus the split-sequence
/// rank identity rank DMH_{k,k} = rank MH_{k,k} + rank EMH_{k-1,k} at
/// k = 3, 4 whenever the EMH groups feeding it are torsion-free.
pub fn tree_diagonality_check(t: &Graph, kmax: usize, lmax: u32) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree(format!(
            "{} vertices, {} edges",
            t.vertex_count(),
            t.edge_count()
        )));
    }
    let mh = table(t, PathKind::Full, kmax, lmax, None)?;
    let emh = table(t, PathKind::Eulerian, kmax, lmax, None)?;
    let dmh = table(t, PathKind::Discriminant, kmax, lmax, None)?;
    for (&(k, l), h) in &mh.cells {
        if l as usize != k && !h.is_trivial() {
            return Ok(false);
        }
    }
    for k in 0..=kmax {
        for l in 0..=lmax {
            if l as usize == k {
                continue;
            }
            let expect = if k == 0 || (l as usize) < k {
                crate::homology::HomologyGroup::default()
            } else {
                emh.get(k - 1, l)
            };
            if dmh.get(k, l) != expect {
                return Ok(false);
            }
        }
    }
    for k in 2..=kmax {
        if !emh.get(k, k as u32).is_trivial() {
            return Ok(false);
        }
    }
    for k in [3usize, 4] {
        if k > kmax || k as u32 > lmax {
            continue;
        }
        let feeders_free = emh.get(k - 1, k as u32).torsion.is_empty()
            && emh.get(k, (k + 1) as u32).torsion.is_empty();
        if feeders_free {
            let lhs = dmh.rank(k, k as u32);
            let rhs = mh.rank(k, k as u32) + emh.rank(k - 1, k as u32);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One comparison line of the path recurrence report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathRecurrenceEntry {
    pub k: usize,
    pub l: u32,
    pub computed: usize,
    pub predicted: usize,
    pub holds: bool,
}

/// Compares rank EMH_{k,l} of the path with n edges against
/// (n - k + 1) * rank EMH_{k,l} of the path with k edges. Report only;
/// the identity is conjectural.
pub fn path_recurrence_report(n: usize, lmax: u32) -> Result<Vec<PathRecurrenceEntry>> {
    let big = generate(Family::Path(n))?;
    let tbl_n = table(&big, PathKind::Eulerian, n + 1, lmax, None)?;
    let mut out = Vec::new();
    for k in 1..=n {
        let small = generate(Family::Path(k))?;
        let tbl_k = table(&small, PathKind::Eulerian, k + 1, lmax, None)?;
        for l in k as u32..=lmax {
            let computed = tbl_n.rank(k, l);
            let predicted = (n - k + 1) * tbl_k.rank(k, l);
            if computed == 0 && predicted == 0 {
                continue;
            }
            out.push(PathRecurrenceEntry {
                k,
                l,
                computed,
                predicted,
                holds: computed == predicted,
            });
        }
    }
    Ok(out)
}

/// True when every nonzero cell of the Eulerian table sits on the
/// diagonal k = l.
pub fn emh_is_diagonal(t: &BiGradedTable) -> bool {
    t.cells
        .iter()
        .all(|(&(k, l), h)| h.is_trivial() || l as usize == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_on_named_families() {
        let s4 = generate(Family::Star(4)).unwrap();
        assert_eq!(
            support_bounds(&s4).unwrap(),
            SupportBounds { k_max: 4, l_max: 7 }
        );
        let k5 = generate(Family::Complete(5)).unwrap();
        assert_eq!(
            support_bounds(&k5).unwrap(),
            SupportBounds { k_max: 4, l_max: 4 }
        );
        let p3 = generate(Family::Path(3)).unwrap();
        let b = support_bounds(&p3).unwrap();
        assert_eq!(b.k_max, 3);
        // exhaustive check of the search on a small path
        assert_eq!(b.l_max, 7); // e.g. ordering 1,3,0,2 with steps 2,3,2
    }

    #[test]
    fn star_formula_matches_tables() {
        for n in 2..=4usize {
            let g = generate(Family::Star(n)).unwrap();
            let lmax = 2 * n as u32 - 1;
            let emh = table(&g, PathKind::Eulerian, n, lmax, None).unwrap();
            let dmh = table(&g, PathKind::Discriminant, n, lmax, None).unwrap();
            for k in 0..=n {
                for l in 0..=lmax {
                    assert_eq!(
                        emh.rank(k, l) as u64,
                        star_emh_rank(n as u64, k, l),
                        "EMH S_{n} at ({k},{l})"
                    );
                    assert!(emh.get(k, l).torsion.is_empty());
                    assert_eq!(
                        dmh.rank(k, l) as u64,
                        star_dmh_rank(n as u64, k, l),
                        "DMH S_{n} at ({k},{l})"
                    );
                    assert!(dmh.get(k, l).torsion.is_empty());
                }
            }
        }
        assert_eq!(star_emh_rank(4, 2, 3), 24);
        assert_eq!(star_emh_rank(5, 3, 4), 60);
        assert_eq!(star_dmh_rank(3, 7, 7), 6);
    }

    #[test]
    fn complete_formula_oracle() {
        // the enumeration count is the one the tables reproduce
        for n in 2..=5usize {
            let g = generate(Family::Complete(n)).unwrap();
            let emh = table(&g, PathKind::Eulerian, n - 1, (n - 1) as u32, None).unwrap();
            let dmh = table(&g, PathKind::Discriminant, n - 1, (n - 1) as u32, None).unwrap();
            assert!(emh_is_diagonal(&emh));
            assert!(emh_is_diagonal(&dmh));
            for k in 0..n {
                assert_eq!(
                    emh.rank(k, k as u32) as u64,
                    complete_emh_rank(n as u64, k).oracle
                );
                assert_eq!(
                    dmh.rank(k, k as u32) as u64,
                    complete_dmh_rank(n as u64, k).oracle
                );
            }
        }
        // the stated formulas drop one factor and disagree beyond k = 0
        assert_eq!(complete_emh_rank(5, 2), CompleteRank { stated: 20, oracle: 60 });
    }

    #[test]
    fn max_grading_and_trees() {
        for fam in [Family::Star(3), Family::Complete(4), Family::Path(3)] {
            let g = generate(fam).unwrap();
            assert!(emh_max_check(&g).unwrap(), "{fam:?}");
        }
        let s4 = generate(Family::Star(4)).unwrap();
        assert!(tree_diagonality_check(&s4, 4, 7).unwrap());
        let p4 = generate(Family::Path(4)).unwrap();
        let b = support_bounds(&p4).unwrap();
        assert!(tree_diagonality_check(&p4, b.k_max, b.l_max).unwrap());
        assert!(tree_diagonality_check(&generate(Family::Complete(3)).unwrap(), 2, 2).is_err());
    }

    #[test]
    fn path_recurrence_boundary_cases() {
        let report = path_recurrence_report(2, 3).unwrap();
        // k = n line is a tautology and must hold
        assert!(report
            .iter()
            .filter(|e| e.k == 2)
            .all(|e| e.holds));
        let e11 = report.iter().find(|e| e.k == 1 && e.l == 1).unwrap();
        assert_eq!((e11.computed, e11.predicted), (4, 4));
    }
}
