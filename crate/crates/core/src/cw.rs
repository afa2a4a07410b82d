//! Regular CW complexes given by cell closures, and their face posets.

use crate::error::{Error, Result};
use crate::poset::Poset;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone)]
pub struct Cell {
    pub id: String,
    pub dim: usize,
    /// Ids of all cells in the closed cell, the cell itself included.
    pub closure: Vec<String>,
}

/// A regular CW complex described combinatorially: for each cell, its
/// dimension and the set of cells in its closure. Regularity is taken
/// as given; what is validated here is that closures are downward
/// closed, contain the cell, and respect dimensions.
#[derive(Debug, Clone)]
pub struct RegularCw {
    pub cells: Vec<Cell>,
    index: BTreeMap<String, usize>,
}

impl RegularCw {
    pub fn new(cells: Vec<Cell>) -> Result<RegularCw> {
        if cells.is_empty() {
            return Err(Error::InvalidCw("complex must have at least one cell".into()));
        }
        let mut index = BTreeMap::new();
        for (i, c) in cells.iter().enumerate() {
            if index.insert(c.id.clone(), i).is_some() {
                return Err(Error::InvalidCw(format!("duplicate cell id {:?}", c.id)));
            }
        }
        let cw = RegularCw { cells, index };
        for c in &cw.cells {
            let mut seen = BTreeSet::new();
            for f in &c.closure {
                if !seen.insert(f.clone()) {
                    return Err(Error::InvalidCw(format!(
                        "closure of {:?} repeats cell {f:?}",
                        c.id
                    )));
                }
                let fi = *cw.index.get(f).ok_or_else(|| {
                    Error::InvalidCw(format!("closure of {:?} names unknown cell {f:?}", c.id))
                })?;
                if f != &c.id && cw.cells[fi].dim >= c.dim {
                    return Err(Error::InvalidCw(format!(
                        "closure of {:?} (dim {}) contains {f:?} of dim {}",
                        c.id, c.dim, cw.cells[fi].dim
                    )));
                }
            }
            if !seen.contains(&c.id) {
                return Err(Error::InvalidCw(format!(
                    "closure of {:?} must contain the cell itself",
                    c.id
                )));
            }
            // downward closure: the closure of every face is contained
            for f in &c.closure {
                let fi = cw.index[f];
                for g in &cw.cells[fi].closure {
                    if !seen.contains(g) {
                        return Err(Error::InvalidCw(format!(
                            "closure of {:?} misses {g:?} from the closure of its face {f:?}",
                            c.id
                        )));
                    }
                }
            }
        }
        Ok(cw)
    }

    pub fn cell_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn dim(&self) -> usize {
        self.cells.iter().map(|c| c.dim).max().unwrap_or(0)
    }

    /// Face poset: cells ordered by closure containment, presented by
    /// its cover relation (transitive reduction of containment).
    pub fn face_poset(&self) -> Poset {
        let n = self.cells.len();
        let mut below = vec![BTreeSet::new(); n];
        for (i, c) in self.cells.iter().enumerate() {
            for f in &c.closure {
                let fi = self.index[f];
                if fi != i {
                    below[i].insert(fi);
                }
            }
        }
        // (a, b) is a cover iff a < b with no intermediate cell
        let mut covers = Vec::new();
        for b in 0..n {
            for &a in &below[b] {
                let intermediate = below[b]
                    .iter()
                    .any(|&m| m != a && below[m].contains(&a));
                if !intermediate {
                    covers.push((a, b));
                }
            }
        }
        let elements = self.cells.iter().map(|c| c.id.clone()).collect();
        Poset::new(elements, covers).expect("containment order is acyclic")
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::json!({
            "cells": self.cells.iter().map(|c| serde_json::json!({
                "id": c.id,
                "dim": c.dim,
                "closure": c.closure,
            })).collect::<Vec<_>>(),
        });
        serde_json::to_string_pretty(&value).expect("cw serialization")
    }

    pub fn from_json(s: &str) -> Result<RegularCw> {
        #[derive(serde::Deserialize)]
        struct RawCell {
            id: String,
            dim: usize,
            closure: Vec<String>,
        }
        #[derive(serde::Deserialize)]
        struct Raw {
            cells: Vec<RawCell>,
        }
        let raw: Raw = serde_json::from_str(s)?;
        RegularCw::new(
            raw.cells
                .into_iter()
                .map(|c| Cell { id: c.id, dim: c.dim, closure: c.closure })
                .collect(),
        )
    }
}

/// Builds a complex from facet-style data: each cell lists only its own
/// id, dimension, and immediate faces; closures are completed here.
pub fn cw_from_faces(cells: &[(&str, usize, &[&str])]) -> Result<RegularCw> {
    let mut faces: BTreeMap<String, (usize, Vec<String>)> = BTreeMap::new();
    for (id, dim, fs) in cells {
        faces.insert(
            id.to_string(),
            (*dim, fs.iter().map(|s| s.to_string()).collect()),
        );
    }
    let mut closures: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    let mut order: Vec<&str> = cells.iter().map(|(id, _, _)| *id).collect();
    order.sort_by_key(|id| faces[*id].0);
    for id in order {
        let mut cl = BTreeSet::new();
        cl.insert(id.to_string());
        for f in &faces[id].1 {
            let sub = closures.get(f).ok_or_else(|| {
                Error::InvalidCw(format!("cell {id:?} lists unknown or higher face {f:?}"))
            })?;
            cl.extend(sub.iter().cloned());
        }
        closures.insert(id.to_string(), cl);
    }
    RegularCw::new(
        cells
            .iter()
            .map(|(id, dim, _)| Cell {
                id: id.to_string(),
                dim: *dim,
                closure: closures[*id].iter().cloned().collect(),
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> RegularCw {
        cw_from_faces(&[
            ("v0", 0, &[]),
            ("v1", 0, &[]),
            ("v2", 0, &[]),
            ("e01", 1, &["v0", "v1"]),
            ("e02", 1, &["v0", "v2"]),
            ("e12", 1, &["v1", "v2"]),
            ("t", 2, &["e01", "e02", "e12"]),
        ])
        .unwrap()
    }

    #[test]
    fn triangle_face_poset() {
        let cw = triangle();
        assert_eq!(cw.dim(), 2);
        let p = cw.face_poset();
        assert_eq!(p.len(), 7);
        // covers: 3 vertex-edge pairs per vertex count (6) + 3 edge-triangle
        assert_eq!(p.covers.len(), 9);
        assert!(p.is_graded());
        assert_eq!(p.longest_chain().0, 2);
    }

    #[test]
    fn rejects_missing_face_in_closure() {
        let bad = RegularCw::new(vec![
            Cell { id: "v0".into(), dim: 0, closure: vec!["v0".into()] },
            Cell { id: "v1".into(), dim: 0, closure: vec!["v1".into()] },
            Cell { id: "e".into(), dim: 1, closure: vec!["e".into(), "v0".into()] },
            Cell {
                id: "t".into(),
                dim: 2,
                // misses v0 from the closure of e
                closure: vec!["t".into(), "e".into(), "v1".into()],
            },
        ]);
        assert!(bad.is_err());
    }

    #[test]
    fn rejects_dimension_inversion() {
        let bad = RegularCw::new(vec![
            Cell { id: "a".into(), dim: 1, closure: vec!["a".into()] },
            Cell { id: "b".into(), dim: 1, closure: vec!["b".into(), "a".into()] },
        ]);
        assert!(bad.is_err());
    }

    #[test]
    fn json_round_trip() {
        let cw = triangle();
        let back = RegularCw::from_json(&cw.to_json()).unwrap();
        assert_eq!(back.cells.len(), 7);
        assert_eq!(back.dim(), 2);
    }
}
