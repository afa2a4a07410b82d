//! Small-graph enumeration up to isomorphism: connected graphs by
//! minimum-permutation canonical form, trees by Prüfer sequences with
//! rooted-tree canonical strings, and a seeded random sampler.

use crate::graph::Graph;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn edge_bit(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    // position of {a,b} among pairs in lexicographic order
    (0..a).map(|i| n - 1 - i).sum::<usize>() + (b - a - 1)
}

fn mask_to_edges(n: usize, mask: u32) -> Vec<(u32, u32)> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if mask >> edge_bit(n, a, b) & 1 == 1 {
                edges.push((a as u32, b as u32));
            }
        }
    }
    edges
}

fn connected_mask(n: usize, mask: u32) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if w != v && !seen[w] && mask >> edge_bit(n, v, w) & 1 == 1 {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

fn canonical_mask(n: usize, mask: u32, perms: &[Vec<usize>]) -> u32 {
    let mut best = u32::MAX;
    for p in perms {
        let mut m = 0u32;
        for a in 0..n {
            for b in a + 1..n {
                if mask >> edge_bit(n, a, b) & 1 == 1 {
                    m |= 1 << edge_bit(n, p[a], p[b]);
                }
            }
        }
        best = best.min(m);
    }
    best
}

fn graph_on(n: usize, edges: &[(u32, u32)]) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    Graph::new(labels, edges).expect("enumerated edges are valid")
}

/// All connected graphs with between 1 and `n_max` vertices, one
/// representative per isomorphism class.
pub fn connected_graph_classes(n_max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let bits = n * (n - 1) / 2;
        let perms = permutations(n);
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0..1u32 << bits {
            if !connected_mask(n, mask) {
                continue;
            }
            if seen.insert(canonical_mask(n, mask, &perms)) {
                out.push(graph_on(n, &mask_to_edges(n, mask)));
            }
        }
    }
    out
}

fn prufer_to_edges(seq: &[usize], n: usize) -> Vec<(u32, u32)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("leaf exists");
        edges.push((leaf.min(v) as u32, leaf.max(v) as u32));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let mut last: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((last[0] as u32, last.pop().unwrap() as u32));
    edges
}

fn rooted_canon(adj: &[Vec<usize>], v: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_canon(adj, w, Some(v)))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

fn tree_canon(n: usize, edges: &[(u32, u32)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a as usize].push(b as usize);
        adj[b as usize].push(a as usize);
    }
    // peel leaves to find the one- or two-vertex center
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut forms: Vec<String> = (0..n)
        .filter(|&v| !removed[v])
        .map(|v| rooted_canon(&adj, v, None))
        .collect();
    forms.sort();
    forms.concat()
}

/// All trees with between 1 and `n_max` vertices, one representative per
/// isomorphism class.
pub fn tree_classes(n_max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        if n == 1 {
            out.push(graph_on(1, &[]));
            continue;
        }
        if n == 2 {
            out.push(graph_on(2, &[(0, 1)]));
            continue;
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut seq = vec![0usize; n - 2];
        loop {
            let edges = prufer_to_edges(&seq, n);
            if seen.insert(tree_canon(n, &edges)) {
                out.push(graph_on(n, &edges));
            }
            // odometer over sequences in [0, n)^(n-2)
            let mut i = 0;
            loop {
                if i == seq.len() {
                    break;
                }
                seq[i] += 1;
                if seq[i] < n {
                    break;
                }
                seq[i] = 0;
                i += 1;
            }
            if i == seq.len() {
                break;
            }
        }
    }
    out
}

/// A reproducible sample of connected graphs with 2..=n_max vertices.
pub fn random_connected_graphs(seed: u64, count: usize, n_max: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(2..=n_max);
        let bits = n * (n - 1) / 2;
        let mask: u32 = rng.gen_range(0..1u32 << bits);
        if connected_mask(n, mask) {
            out.push(graph_on(n, &mask_to_edges(n, mask)));
        }
    }
    out
}
