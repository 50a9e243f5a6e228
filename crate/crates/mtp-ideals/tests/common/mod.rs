// shared oracles, included by the test targets
#![allow(dead_code)]

use std::collections::BTreeMap;

use mtp_complexes::{reduced_homology, Field, SimplicialComplex};
use mtp_ideals::{divides, lcm, Exponent, MonomialIdeal};

/// Every exponent vector in the box [0, hi].
pub fn box_points(hi: &[u32]) -> Vec<Exponent> {
    let mut out = vec![vec![]];
    for &h in hi {
        out = out.into_iter().flat_map(|p: Vec<u32>| (0..=h).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

fn complex_from_faces(nv: usize, faces: Vec<Vec<usize>>) -> SimplicialComplex {
    let names = (0..nv).map(|k| k.to_string()).collect();
    if faces.is_empty() {
        SimplicialComplex::void(names)
    } else {
        SimplicialComplex::new(names, faces)
    }
}

fn shifted(k: &SimplicialComplex, field: Field) -> BTreeMap<usize, usize> {
    reduced_homology(k, field).unwrap().reduced_betti.into_iter().map(|(k, b)| ((k + 2) as usize, b)).collect()
}

/// β_{i,b}(S/I) = dim H̃_{i-2} of the Taylor faces below b: generator subsets
/// dividing b whose lcm is not b. This is the relative homology of the full
/// simplex on the generators dividing b, so it vanishes when none do.
pub fn taylor_column(i: &MonomialIdeal, b: &[u32], field: Field) -> BTreeMap<usize, usize> {
    if b.iter().all(|&x| x == 0) {
        return BTreeMap::from([(0, 1)]);
    }
    let gens: Vec<&Exponent> = i.generators.iter().filter(|g| divides(g, b)).collect();
    let n = gens.len();
    if n == 0 {
        return BTreeMap::new();
    }
    let mut faces = Vec::new();
    for m in 0u32..1 << n {
        let f: Vec<usize> = (0..n).filter(|&k| m >> k & 1 == 1).collect();
        let l = f.iter().fold(vec![0; b.len()], |acc, &k| lcm(&acc, gens[k]));
        if l != b {
            faces.push(f);
        }
    }
    shifted(&complex_from_faces(n, faces), field)
}

/// β_{i,b}(S/I) = dim H̃_{i-2} of the squarefree J <= b with x^(b-J) in I.
pub fn koszul_column(i: &MonomialIdeal, b: &[u32], field: Field) -> BTreeMap<usize, usize> {
    if b.iter().all(|&x| x == 0) {
        return BTreeMap::from([(0, 1)]);
    }
    let d = b.len();
    let mut faces = Vec::new();
    for m in 0u32..1 << d {
        let j: Vec<usize> = (0..d).filter(|&k| m >> k & 1 == 1).collect();
        if j.iter().any(|&k| b[k] == 0) {
            continue;
        }
        let mut e = b.to_vec();
        for &k in &j {
            e[k] -= 1;
        }
        if i.contains(&e) {
            faces.push(j);
        }
    }
    shifted(&complex_from_faces(d, faces), field)
}
