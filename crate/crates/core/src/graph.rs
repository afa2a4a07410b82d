//! Finite simple graphs with the shortest-path metric.
//!
//! Vertices carry opaque string labels and are indexed `0..n` in input
//! order. All bases, matrices and serialized output use this canonical
//! indexing so results are reproducible byte for byte.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Distance value: `None` encodes infinity (disconnected pair).
pub type Dist = Option<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(u32, u32)>,
    #[serde(skip)]
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a simple graph from labels and index pairs. Rejects loops,
    /// duplicate edges, duplicate labels and out-of-range endpoints.
    pub fn new<S: Into<String>>(vertices: Vec<S>, edges: &[(u32, u32)]) -> Result<Graph> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let n = vertices.len();
        if n == 0 {
            return Err(Error::InvalidGraph("empty vertex list".into()));
        }
        {
            let mut seen = std::collections::HashSet::new();
            for v in &vertices {
                if !seen.insert(v.as_str()) {
                    return Err(Error::InvalidGraph(format!("duplicate label {v:?}")));
                }
            }
        }
        let mut norm: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a as usize >= n || b as usize >= n {
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("duplicate edge".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &norm {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph { vertices, edges: norm, adj })
    }

    /// Graph with unit labels "0", "1", ... for quick construction.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        Graph::new((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.adj[a as usize].binary_search(&b).is_ok()
    }

    pub fn index_of(&self, label: &str) -> Option<u32> {
        self.vertices.iter().position(|l| l == label).map(|i| i as u32)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let d = self.bfs_from(0);
        d.iter().all(|x| x.is_some())
    }

    pub fn is_tree(&self) -> bool {
        !self.vertices.is_empty()
            && self.is_connected()
            && self.edges.len() == self.vertices.len() - 1
    }

    fn bfs_from(&self, src: u32) -> Vec<Dist> {
        let mut dist: Vec<Dist> = vec![None; self.vertices.len()];
        dist[src as usize] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v as usize].unwrap();
            for &w in self.neighbors(v) {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Canonical JSON form; vertices in input order, edges sorted.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices,
            "edges": self.edges.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Graph> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<String>,
            edges: Vec<(u32, u32)>,
        }
        let raw: Raw = serde_json::from_value(value.clone())?;
        if raw.vertices.is_empty() {
            return Err(Error::InvalidGraph("empty vertex list".into()));
        }
        Graph::new(raw.vertices, &raw.edges)
    }
}

/// Exact BFS all-pairs shortest-path distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Dist>,
}

impl DistanceMatrix {
    pub fn get(&self, a: u32, b: u32) -> Dist {
        self.dist[a as usize * self.n + b as usize]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Largest finite distance (0 for a single vertex).
    pub fn max_finite(&self) -> u32 {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut dist = Vec::with_capacity(n * n);
    for src in 0..n as u32 {
        dist.extend(g.bfs_from(src));
    }
    DistanceMatrix { n, dist }
}

/// Named graph families. `star n` is the n-spoke star on `n+1` vertices,
/// `path n` the path on `n+1` vertices, `complete n` and `cycle n` the
/// complete graph and cycle on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Star(usize),
    Path(usize),
    Complete(usize),
    Cycle(usize),
}

pub fn generate(family: Family) -> Result<Graph> {
    match family {
        Family::Star(n) => {
            if n == 0 {
                return Err(Error::InvalidGenerator("star requires n >= 1".into()));
            }
            let edges: Vec<(u32, u32)> = (1..=n as u32).map(|i| (0, i)).collect();
            Graph::from_edges(n + 1, &edges)
        }
        Family::Path(n) => {
            if n == 0 {
                return Err(Error::InvalidGenerator("path requires n >= 1".into()));
            }
            let edges: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n + 1, &edges)
        }
        Family::Complete(n) => {
            if n == 0 {
                return Err(Error::InvalidGenerator("complete requires n >= 1".into()));
            }
            let mut edges = Vec::new();
            for a in 0..n as u32 {
                for b in a + 1..n as u32 {
                    edges.push((a, b));
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidGenerator("cycle requires n >= 3".into()));
            }
            let mut edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
            edges.push((0, n as u32 - 1));
            Graph::from_edges(n, &edges)
        }
    }
}

/// Triangle on {0,1,2} with pendant vertices 3 and 4 both attached to
/// vertex 0 (the "cricket" graph).
pub fn cricket() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]).unwrap()
}

/// Triangle on {0,1,2} with pendant vertices 3 (at 0) and 4 (at 1)
/// (the "bull" graph). Differs from the cricket by a Whitney flip of
/// one pendant edge across the shared triangle vertices.
pub fn bull() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap()
}

/// Triangle {1,2,3} plus pendants 4 and 5 at vertex 3.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn example_five_vertex() -> Graph {
    Graph::new(
        vec!["1", "2", "3", "4", "5"],
        &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4)],
    )
    .unwrap()
}
