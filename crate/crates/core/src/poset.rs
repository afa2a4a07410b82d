//! Finite posets given by cover relations, with bound adjunction, rank
//! computation, and the Hasse diagram viewed as an undirected graph.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeSet;

/// A finite poset presented by its Hasse diagram. `covers` holds pairs
/// `(i, j)` meaning element `i` is covered by element `j` (i < j with
/// nothing in between). Elements are labelled; labels must be unique.
#[derive(Debug, Clone)]
pub struct Poset {
    pub elements: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl Poset {
    pub fn new(elements: Vec<String>, mut covers: Vec<(usize, usize)>) -> Result<Poset> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::InvalidPoset("poset must have at least one element".into()));
        }
        let mut seen = BTreeSet::new();
        for e in &elements {
            if !seen.insert(e.clone()) {
                return Err(Error::InvalidPoset(format!("duplicate element label {e:?}")));
            }
        }
        covers.sort();
        covers.dedup();
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!("cover ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidPoset(format!("reflexive cover on element {a}")));
            }
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &covers {
            up[a].push(b);
            down[b].push(a);
        }
        let p = Poset { elements, covers, up, down };
        if p.topological_order().is_none() {
            return Err(Error::InvalidPoset("cover relation contains a cycle".into()));
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn covers_of(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn covered_by(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut indeg = vec![0usize; n];
        for &(_, b) in &self.covers {
            indeg[b] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(i) = queue.pop() {
            order.push(i);
            for &j in &self.up[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push(j);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Strict order relation as a boolean matrix: `lt[i][j]` iff i < j.
    pub fn strict_less(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut lt = vec![vec![false; n]; n];
        let order = self.topological_order().expect("validated acyclic");
        // process in reverse topological order so up-sets are complete
        for &i in order.iter().rev() {
            for &j in &self.up[i] {
                lt[i][j] = true;
                for k in 0..n {
                    if lt[j][k] {
                        lt[i][k] = true;
                    }
                }
            }
        }
        lt
    }

    /// Adjoins a new bottom `hat0` and top `hat1`. The bottom sits under
    /// every old minimal element, the top over every old maximal one.
    pub fn adjoin_bounds(&self) -> Poset {
        let n = self.len();
        let mut elements = self.elements.clone();
        let bot_label = fresh_label(&elements, "hat0");
        let top_label = fresh_label(&elements, "hat1");
        elements.push(bot_label);
        elements.push(top_label);
        let bot = n;
        let top = n + 1;
        let mut covers = self.covers.clone();
        for i in 0..n {
            if self.down[i].is_empty() {
                covers.push((bot, i));
            }
            if self.up[i].is_empty() {
                covers.push((i, top));
            }
        }
        Poset::new(elements, covers).expect("bound adjunction preserves validity")
    }

    /// Index of the adjoined bottom in `adjoin_bounds` output.
    pub fn bottom_of_bounded(&self) -> usize {
        self.len()
    }

    /// Index of the adjoined top in `adjoin_bounds` output.
    pub fn top_of_bounded(&self) -> usize {
        self.len() + 1
    }

    /// Length of the longest chain from a minimal element through `i`,
    /// starting at 0. In a graded poset this is the rank function.
    pub fn height(&self, i: usize) -> usize {
        let order = self.topological_order().expect("validated acyclic");
        let mut h = vec![0usize; self.len()];
        for &j in &order {
            for &k in &self.up[j] {
                h[k] = h[k].max(h[j] + 1);
            }
        }
        h[i]
    }

    /// Length of the longest chain in the whole poset, together with one
    /// witnessing chain (as element indices, bottom to top).
    pub fn longest_chain(&self) -> (usize, Vec<usize>) {
        let order = self.topological_order().expect("validated acyclic");
        let n = self.len();
        let mut h = vec![0usize; n];
        let mut pred = vec![usize::MAX; n];
        for &j in &order {
            for &k in &self.up[j] {
                if h[j] + 1 > h[k] {
                    h[k] = h[j] + 1;
                    pred[k] = j;
                }
            }
        }
        let mut best = 0;
        for i in 1..n {
            if h[i] > h[best] {
                best = i;
            }
        }
        let mut chain = vec![best];
        let mut cur = best;
        while pred[cur] != usize::MAX {
            cur = pred[cur];
            chain.push(cur);
        }
        chain.reverse();
        (h[best], chain)
    }

    /// True when every maximal chain between comparable elements has the
    /// same length, i.e. the height function grades the poset.
    pub fn is_graded(&self) -> bool {
        let order = self.topological_order().expect("validated acyclic");
        let mut h = vec![0usize; self.len()];
        for &j in &order {
            for &k in &self.up[j] {
                h[k] = h[k].max(h[j] + 1);
            }
        }
        self.covers.iter().all(|&(a, b)| h[b] == h[a] + 1)
    }

    /// The Hasse diagram with edge directions forgotten.
    pub fn hasse_graph(&self) -> Graph {
        let edges: Vec<(u32, u32)> = self
            .covers
            .iter()
            .map(|&(a, b)| (a as u32, b as u32))
            .collect();
        Graph::new(self.elements.clone(), &edges).expect("cover pairs are valid edges")
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::json!({
            "elements": self.elements,
            "covers": self.covers.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
        });
        serde_json::to_string_pretty(&value).expect("poset serialization")
    }

    pub fn from_json(s: &str) -> Result<Poset> {
        #[derive(serde::Deserialize)]
        struct Raw {
            elements: Vec<String>,
            covers: Vec<(usize, usize)>,
        }
        let raw: Raw = serde_json::from_str(s)?;
        Poset::new(raw.elements, raw.covers)
    }
}

fn fresh_label(existing: &[String], base: &str) -> String {
    if !existing.iter().any(|e| e == base) {
        return base.to_string();
    }
    let mut k = 1;
    loop {
        let cand = format!("{base}_{k}");
        if !existing.iter().any(|e| e == &cand) {
            return cand;
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn rejects_cycle() {
        assert!(Poset::new(labels(2), vec![(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn rejects_duplicate_labels() {
        assert!(Poset::new(vec!["a".into(), "a".into()], vec![]).is_err());
    }

    #[test]
    fn chain_heights() {
        let p = Poset::new(labels(3), vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(p.height(2), 2);
        assert_eq!(p.longest_chain(), (2, vec![0, 1, 2]));
        assert!(p.is_graded());
    }

    #[test]
    fn adjoin_bounds_on_antichain() {
        let p = Poset::new(labels(3), vec![]).unwrap();
        let b = p.adjoin_bounds();
        assert_eq!(b.len(), 5);
        assert_eq!(b.elements[3], "hat0");
        assert_eq!(b.elements[4], "hat1");
        // every original element is covered by hat1 and covers hat0
        assert_eq!(b.covers.len(), 6);
        assert_eq!(b.longest_chain().0, 2);
    }

    #[test]
    fn strict_less_transitive() {
        let p = Poset::new(labels(4), vec![(0, 1), (1, 2), (1, 3)]).unwrap();
        let lt = p.strict_less();
        assert!(lt[0][2] && lt[0][3] && lt[0][1]);
        assert!(!lt[2][3] && !lt[3][2]);
        assert!(!lt[1][0]);
    }

    #[test]
    fn hasse_graph_shape() {
        let p = Poset::new(labels(3), vec![(0, 1), (0, 2)]).unwrap();
        let g = p.hasse_graph();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn json_round_trip() {
        let p = Poset::new(labels(3), vec![(0, 1), (1, 2)]).unwrap();
        let q = Poset::from_json(&p.to_json()).unwrap();
        assert_eq!(q.elements, p.elements);
        assert_eq!(q.covers, p.covers);
    }

    #[test]
    fn fresh_labels_avoid_collisions() {
        let p = Poset::new(vec!["hat0".into(), "x".into()], vec![]).unwrap();
        let b = p.adjoin_bounds();
        assert_eq!(b.elements[2], "hat0_1");
    }
}
