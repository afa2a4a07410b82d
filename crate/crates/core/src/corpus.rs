//! Built-in complexes and posets whose order homology carries torsion:
//! the minimal triangulation of the projective plane, CW models of the
//! Moore spaces M(Z_3, 1) and M(Z_5, 1), a CW model of the lens space
//! L(3, 1), and two explicit rank-2 matching posets.

use crate::cw::{cw_from_faces, RegularCw};
use crate::error::{Error, Result};
use crate::pk_sigma::{build_pk_sigma, PkSigma, PkSigmaSpec};
use crate::poset::Poset;

/// Minimal 6-vertex triangulation of the real projective plane.
pub fn rp2_complex() -> RegularCw {
    let facets: [[usize; 3]; 10] = [
        [0, 1, 3],
        [0, 1, 5],
        [0, 2, 3],
        [0, 2, 4],
        [0, 4, 5],
        [1, 2, 4],
        [1, 2, 5],
        [1, 3, 4],
        [2, 3, 5],
        [3, 4, 5],
    ];
    let vertex_names: Vec<String> = (0..6).map(|v| v.to_string()).collect();
    let mut edge_names = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            edge_names.push(((i, j), format!("{i}{j}")));
        }
    }
    let face_names: Vec<(usize, String)> = facets
        .iter()
        .enumerate()
        .map(|(k, f)| (k, format!("{}{}{}", f[0], f[1], f[2])))
        .collect();
    let mut cells: Vec<(&str, usize, Vec<&str>)> = Vec::new();
    for v in &vertex_names {
        cells.push((v, 0, vec![]));
    }
    for ((i, j), name) in &edge_names {
        cells.push((name, 1, vec![&vertex_names[*i], &vertex_names[*j]]));
    }
    for (k, name) in &face_names {
        let f = facets[*k];
        let fs: Vec<&str> = [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])]
            .iter()
            .map(|p| {
                edge_names
                    .iter()
                    .find(|(q, _)| q == p)
                    .map(|(_, n)| n.as_str())
                    .unwrap()
            })
            .collect();
        cells.push((name, 2, fs));
    }
    let borrowed: Vec<(&str, usize, &[&str])> = cells
        .iter()
        .map(|(n, d, fs)| (*n, *d, fs.as_slice()))
        .collect();
    cw_from_faces(&borrowed).expect("projective plane triangulation is valid")
}

/// CW model of the Moore space M(Z_3, 1): a disk with 6 radial sectors,
/// boundary identified in thirds.
pub fn moore_z3_complex() -> RegularCw {
    cw_from_faces(&[
        ("0", 0, &[]),
        ("1", 0, &[]),
        ("2", 0, &[]),
        ("01", 1, &["0", "1"]),
        ("02", 1, &["0", "2"]),
        ("03", 1, &["0", "1"]),
        ("04", 1, &["0", "2"]),
        ("05", 1, &["0", "1"]),
        ("06", 1, &["0", "2"]),
        ("12", 1, &["1", "2"]),
        ("23", 1, &["1", "2"]),
        ("102", 2, &["01", "02", "12"]),
        ("203", 2, &["02", "03", "23"]),
        ("304", 2, &["03", "04", "12"]),
        ("405", 2, &["04", "05", "23"]),
        ("506", 2, &["05", "06", "12"]),
        ("106", 2, &["06", "01", "23"]),
    ])
    .expect("moore z3 complex is valid")
}

/// CW model of the Moore space M(Z_5, 1): a disk with 10 radial sectors,
/// boundary identified in fifths.
pub fn moore_z5_complex() -> RegularCw {
    cw_from_faces(&[
        ("0", 0, &[]),
        ("1", 0, &[]),
        ("2", 0, &[]),
        ("01", 1, &["0", "1"]),
        ("02", 1, &["0", "2"]),
        ("03", 1, &["0", "1"]),
        ("04", 1, &["0", "2"]),
        ("05", 1, &["0", "1"]),
        ("06", 1, &["0", "2"]),
        ("07", 1, &["0", "1"]),
        ("08", 1, &["0", "2"]),
        ("09", 1, &["0", "1"]),
        ("010", 1, &["0", "2"]),
        ("12", 1, &["1", "2"]),
        ("23", 1, &["1", "2"]),
        ("102", 2, &["01", "02", "12"]),
        ("203", 2, &["02", "03", "23"]),
        ("304", 2, &["03", "04", "12"]),
        ("405", 2, &["04", "05", "23"]),
        ("506", 2, &["05", "06", "12"]),
        ("607", 2, &["06", "07", "23"]),
        ("708", 2, &["07", "08", "12"]),
        ("809", 2, &["08", "09", "23"]),
        ("9010", 2, &["09", "010", "12"]),
        ("1010", 2, &["010", "01", "23"]),
    ])
    .expect("moore z5 complex is valid")
}

/// CW model of the lens space L(3, 1): a ball with a central vertex,
/// eight radial edges, an equatorial disk split into six sectors, and
/// hemisphere boundary glued to itself with a 2 pi / 3 twist.
pub fn lens_3_1_complex() -> RegularCw {
    let disk: [(&str, [&str; 3]); 6] = [
        ("102", ["01", "12", "02"]),
        ("203", ["02", "23", "03"]),
        ("304", ["03", "12", "04"]),
        ("405", ["04", "23", "05"]),
        ("506", ["05", "12", "06"]),
        ("106", ["06", "23", "01"]),
    ];
    let mut cells: Vec<(&str, usize, Vec<&str>)> = vec![
        ("0", 0, vec![]),
        ("1", 0, vec![]),
        ("2", 0, vec![]),
        ("7", 0, vec![]),
        ("01", 1, vec!["0", "1"]),
        ("02", 1, vec!["0", "2"]),
        ("03", 1, vec!["0", "1"]),
        ("04", 1, vec!["0", "2"]),
        ("05", 1, vec!["0", "1"]),
        ("06", 1, vec!["0", "2"]),
        ("07", 1, vec!["0", "7"]),
        ("08", 1, vec!["0", "7"]),
        ("12", 1, vec!["1", "2"]),
        ("23", 1, vec!["1", "2"]),
        ("17", 1, vec!["1", "7"]),
        ("27", 1, vec!["2", "7"]),
        ("37", 1, vec!["1", "7"]),
        ("47", 1, vec!["2", "7"]),
        ("57", 1, vec!["1", "7"]),
        ("67", 1, vec!["2", "7"]),
    ];
    for (name, edges) in &disk {
        cells.push((name, 2, edges.to_vec()));
    }
    let upper: [(&str, [&str; 3]); 6] = [
        ("107", ["01", "17", "07"]),
        ("207", ["02", "27", "07"]),
        ("307", ["03", "37", "07"]),
        ("407", ["04", "47", "07"]),
        ("507", ["05", "57", "07"]),
        ("607", ["06", "67", "07"]),
    ];
    // lower fan faces: hemispheres are glued with a 2 pi / 3 twist, so
    // the meridian under point j lies in the class of meridian j - 2
    let lower: [(&str, [&str; 3]); 6] = [
        ("108", ["01", "57", "08"]),
        ("208", ["02", "67", "08"]),
        ("308", ["03", "17", "08"]),
        ("408", ["04", "27", "08"]),
        ("508", ["05", "37", "08"]),
        ("608", ["06", "47", "08"]),
    ];
    let meridian: [(&str, [&str; 3]); 6] = [
        ("127", ["12", "17", "27"]),
        ("347", ["12", "37", "47"]),
        ("567", ["12", "57", "67"]),
        ("237", ["23", "27", "37"]),
        ("457", ["23", "47", "57"]),
        ("167", ["23", "17", "67"]),
    ];
    for (name, edges) in &upper {
        cells.push((name, 2, edges.to_vec()));
    }
    for (name, edges) in &lower {
        cells.push((name, 2, edges.to_vec()));
    }
    for (name, edges) in &meridian {
        cells.push((name, 2, edges.to_vec()));
    }
    let solid: [(&str, [&str; 4]); 12] = [
        ("1027", ["102", "107", "207", "127"]),
        ("2037", ["203", "307", "207", "237"]),
        ("3047", ["304", "307", "407", "347"]),
        ("4057", ["405", "507", "407", "457"]),
        ("5067", ["506", "507", "607", "567"]),
        ("1067", ["106", "107", "607", "167"]),
        ("1028", ["102", "108", "208", "567"]),
        ("2038", ["203", "208", "308", "167"]),
        ("3048", ["304", "308", "408", "127"]),
        ("4058", ["405", "408", "508", "237"]),
        ("5068", ["506", "508", "608", "347"]),
        ("1068", ["106", "608", "108", "457"]),
    ];
    for (name, faces) in &solid {
        cells.push((name, 3, faces.to_vec()));
    }
    let borrowed: Vec<(&str, usize, &[&str])> = cells
        .iter()
        .map(|(n, d, fs)| (*n, *d, fs.as_slice()))
        .collect();
    cw_from_faces(&borrowed).expect("lens space complex is valid")
}

/// The k = 4 matching poset with the 3-cycle derangement.
pub fn pk_sigma_4() -> PkSigma {
    let blocks = vec![
        vec![(1, 2), (3, 4)],
        vec![(1, 3), (2, 4)],
        vec![(1, 4), (2, 3)],
    ];
    build_pk_sigma(PkSigmaSpec::new(4, vec![2, 3, 1], blocks).expect("valid k=4 data"))
        .expect("valid k=4 poset")
}

/// The k = 6 matching poset with derangement (1 3 4 5 2).
pub fn pk_sigma_6() -> PkSigma {
    let blocks = vec![
        vec![(1, 2), (3, 5), (4, 6)],
        vec![(1, 3), (2, 4), (5, 6)],
        vec![(1, 4), (2, 5), (3, 6)],
        vec![(1, 5), (2, 6), (3, 4)],
        vec![(1, 6), (2, 3), (4, 5)],
    ];
    build_pk_sigma(PkSigmaSpec::new(6, vec![3, 1, 4, 5, 2], blocks).expect("valid k=6 data"))
        .expect("valid k=6 poset")
}

pub const CORPUS_NAMES: [&str; 6] = ["rp2", "moore-z3", "moore-z5", "lens-3-1", "pk4", "pk6"];

/// Face poset (bounds not adjoined) of the named corpus entry.
pub fn poset_by_name(name: &str) -> Result<Poset> {
    match name {
        "rp2" => Ok(rp2_complex().face_poset()),
        "moore-z3" => Ok(moore_z3_complex().face_poset()),
        "moore-z5" => Ok(moore_z5_complex().face_poset()),
        "lens-3-1" => Ok(lens_3_1_complex().face_poset()),
        "pk4" => Ok(pk_sigma_4().poset),
        "pk6" => Ok(pk_sigma_6().poset),
        other => Err(Error::UnknownCorpus(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_counts() {
        assert_eq!(rp2_complex().cells.len(), 31);
        assert_eq!(moore_z3_complex().cells.len(), 17);
        assert_eq!(moore_z5_complex().cells.len(), 25);
        assert_eq!(lens_3_1_complex().cells.len(), 56);
        assert_eq!(pk_sigma_4().poset.len(), 13);
        assert_eq!(pk_sigma_6().poset.len(), 26);
    }

    #[test]
    fn euler_characteristics() {
        let chi = |cw: &crate::cw::RegularCw| {
            cw.cells
                .iter()
                .map(|c| if c.dim % 2 == 0 { 1i64 } else { -1 })
                .sum::<i64>()
        };
        assert_eq!(chi(&rp2_complex()), 1);
        assert_eq!(chi(&moore_z3_complex()), 1);
        assert_eq!(chi(&moore_z5_complex()), 1);
        assert_eq!(chi(&lens_3_1_complex()), 0);
    }

    #[test]
    fn face_posets_are_graded() {
        for name in CORPUS_NAMES {
            let p = poset_by_name(name).unwrap();
            assert!(p.is_graded(), "{name} poset not graded");
        }
        assert_eq!(poset_by_name("rp2").unwrap().longest_chain().0, 2);
        assert_eq!(poset_by_name("lens-3-1").unwrap().longest_chain().0, 3);
    }

    #[test]
    fn hasse_graph_sizes() {
        // bounded face poset of the projective plane: 33 vertices, 76 edges
        let g = poset_by_name("rp2").unwrap().adjoin_bounds().hasse_graph();
        assert_eq!(g.vertex_count(), 33);
        assert_eq!(g.edges().len(), 76);
    }

    #[test]
    fn unknown_name_rejected() {
        assert!(poset_by_name("klein").is_err());
    }

    #[test]
    fn order_complex_homology_of_corpus() {
        use crate::homology::order_complex_homology;
        use crate::order_complex::OrderComplex;
        use num_bigint::BigInt;

        let groups = |name: &str, dmax: usize| -> Vec<(usize, Vec<BigInt>)> {
            let oc = OrderComplex::of(&poset_by_name(name).unwrap());
            (0..=dmax)
                .map(|d| {
                    let h = order_complex_homology(&oc, d, false);
                    (h.rank, h.torsion)
                })
                .collect()
        };
        let t = |n: i64| vec![BigInt::from(n)];

        assert_eq!(groups("rp2", 2), vec![(1, vec![]), (0, t(2)), (0, vec![])]);
        assert_eq!(groups("moore-z3", 2), vec![(1, vec![]), (0, t(3)), (0, vec![])]);
        assert_eq!(groups("moore-z5", 2), vec![(1, vec![]), (0, t(5)), (0, vec![])]);
        // lens space: infinite cyclic in top degree, 3-torsion below
        assert_eq!(
            groups("lens-3-1", 3),
            vec![(1, vec![]), (0, t(3)), (0, vec![]), (1, vec![])]
        );
        assert_eq!(groups("pk4", 1), vec![(1, vec![]), (0, t(2))]);
        assert_eq!(groups("pk6", 1), vec![(1, vec![]), (5, t(2))]);
    }
}
