use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use mtp_core::{Bipartite, Ext, GeneratorSet, Point, Result};
use mtp_facets::{incidence_graph, IncidenceGraph};

use crate::poset::{Element, Poset};

/// All intersections of the sets in `adj` (the empty family gives the full set),
/// optionally with the empty set added. Sorted by size, then lexicographically.
pub fn closed_sets(n_left: usize, adj: &[FixedBitSet], with_empty: bool) -> Vec<FixedBitSet> {
    let mut full = FixedBitSet::with_capacity(n_left);
    full.insert_range(..);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut family = vec![full.clone()];
    seen.insert(full);
    for a in adj {
        let snapshot = family.len();
        for k in 0..snapshot {
            let mut c = family[k].clone();
            c.intersect_with(a);
            if seen.insert(c.clone()) {
                family.push(c);
            }
        }
    }
    if with_empty {
        let e = FixedBitSet::with_capacity(n_left);
        if seen.insert(e.clone()) {
            family.push(e);
        }
    }
    family.sort_by(|a, b| {
        a.count_ones(..)
            .cmp(&b.count_ones(..))
            .then_with(|| a.ones().collect::<Vec<_>>().cmp(&b.ones().collect::<Vec<_>>()))
    });
    family
}

fn inclusion_poset(sets: &[FixedBitSet], elements: Vec<Element>, left: Vec<String>, right: Vec<String>) -> Poset {
    let n = sets.len();
    let up = (0..n)
        .map(|a| {
            let mut s = FixedBitSet::with_capacity(n);
            for b in 0..n {
                if sets[a].is_subset(&sets[b]) {
                    s.insert(b);
                }
            }
            s
        })
        .collect();
    Poset::from_up(elements, left, right, up)
}

fn to_bitsets(g: &Bipartite) -> Vec<FixedBitSet> {
    g.adj
        .iter()
        .map(|&m| {
            let mut s = FixedBitSet::with_capacity(g.num_left());
            for l in 0..g.num_left() {
                if m >> l & 1 == 1 {
                    s.insert(l);
                }
            }
            s
        })
        .collect()
}

/// Lattice of closed left sets under S ↦ N(N(S)), each carrying its dual right set.
/// The empty set and the full left set are always included.
pub fn closure_lattice(g: &Bipartite) -> Poset {
    let adj = to_bitsets(g);
    let sets = closed_sets(g.num_left(), &adj, true);
    let elements = sets
        .iter()
        .map(|s| {
            let right = (0..adj.len()).filter(|&r| s.is_subset(&adj[r])).collect();
            Element { point: None, vertices: Some(s.ones().collect()), apices: Some(right), formal: false }
        })
        .collect();
    inclusion_poset(&sets, elements, g.left.clone(), g.right.clone())
}

/// m_S: the componentwise max over the generators in S, with each ray e^(i)
/// in S contributing +inf at coordinate i. Empty S gives (-inf, ..., -inf).
pub fn max_of_label(v: &GeneratorSet, s: &[usize]) -> Point {
    let d = v.dim();
    let mut p = Point::neg_inf(d);
    for &x in s {
        if x < v.len() {
            p = p.join(v.point(x));
        } else {
            p.0[x - v.len()] = Ext::PosInf;
        }
    }
    p
}

pub fn vertex_facet_lattice_of(v: &GeneratorSet, ig: &IncidenceGraph) -> Poset {
    let mut l = closure_lattice(&ig.graph);
    for e in &mut l.elements {
        let s = e.vertices.as_ref().expect("closure elements carry vertex sets");
        e.point = Some(max_of_label(v, s));
        e.formal = s.is_empty();
    }
    l
}

pub fn vertex_facet_lattice(v: &GeneratorSet) -> Result<Poset> {
    let ig = incidence_graph(v)?;
    Ok(vertex_facet_lattice_of(v, &ig))
}

/// Closed sets meeting the generators, together with the empty set.
/// `n` is the number of generators; left nodes at or above n are rays.
pub fn affine_part(l: &Poset, n: usize) -> Poset {
    let keep: Vec<usize> = (0..l.len())
        .filter(|&a| {
            let s = l.elements[a].vertices.as_deref().unwrap_or(&[]);
            s.is_empty() || s.iter().any(|&x| x < n)
        })
        .collect();
    l.induced(&keep)
}

#[derive(Clone, Debug)]
pub struct Completion {
    pub lattice: Poset,
    /// embedding[p] is the index of the principal cut p↓.
    pub embedding: Vec<usize>,
}

/// Dedekind-MacNeille completion: the cuts A = (A↑)↓ ordered by inclusion.
/// Vertex labels of the result index the elements of P.
pub fn dedekind_macneille(p: &Poset) -> Completion {
    let n = p.len();
    let downs: Vec<FixedBitSet> = (0..n).map(|a| p.down_set(a)).collect();
    let has_bottom = p.bottom().is_some();
    let sets = closed_sets(n, &downs, !has_bottom);
    let names: Vec<String> = (0..n).map(|a| p.name(a)).collect();
    let elements = sets
        .iter()
        .map(|s| Element { point: None, vertices: Some(s.ones().collect()), apices: None, formal: false })
        .collect();
    let lattice = inclusion_poset(&sets, elements, names, vec![]);
    let embedding = downs
        .iter()
        .map(|d| sets.iter().position(|s| s == d).expect("principal down-sets are cuts"))
        .collect();
    Completion { lattice, embedding }
}

/// Checks DM(P) ≅ L for P a poset whose elements carry V̄-labels that are
/// closed sets of the lattice L (also labelled by V̄). Each cut A of P is sent
/// to the least element of L containing every label in A; the map must be a
/// bijection that preserves and reflects the order.
pub fn completion_matches(p: &Poset, l: &Poset) -> bool {
    let dm = dedekind_macneille(p);
    let k = dm.lattice.len();
    if k != l.len() {
        return false;
    }
    let lsets: Vec<Vec<usize>> = l.elements.iter().map(|e| e.vertices.clone().unwrap_or_default()).collect();
    let mut image = Vec::with_capacity(k);
    for e in &dm.lattice.elements {
        let mut union: Vec<usize> = Vec::new();
        for &a in e.vertices.as_deref().unwrap_or(&[]) {
            union.extend(p.elements[a].vertices.as_deref().unwrap_or(&[]));
        }
        let cands: Vec<usize> =
            (0..l.len()).filter(|&b| union.iter().all(|x| lsets[b].contains(x))).collect();
        let least = cands.iter().copied().find(|&b| cands.iter().all(|&c| l.leq(b, c)));
        match least {
            Some(b) => image.push(b),
            None => return false,
        }
    }
    let mut seen = vec![false; l.len()];
    for &b in &image {
        if seen[b] {
            return false;
        }
        seen[b] = true;
    }
    (0..k).all(|a| (0..k).all(|b| dm.lattice.leq(a, b) == l.leq(image[a], image[b])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(p: &str, n: usize) -> Vec<String> {
        (0..n).map(|k| format!("{p}{k}")).collect()
    }

    #[test]
    fn complete_bipartite_gives_two_chain() {
        let g = Bipartite::new(labels("l", 3), labels("r", 2), vec![0b111, 0b111]);
        let l = closure_lattice(&g);
        assert_eq!(l.len(), 2);
        assert!(l.is_lattice());
    }

    #[test]
    fn matching_gives_diamond() {
        // two distinct atoms already have no common neighbour, so they close to everything
        let g = Bipartite::new(labels("l", 3), labels("r", 3), vec![0b001, 0b010, 0b100]);
        let l = closure_lattice(&g);
        assert_eq!(l.len(), 5);
        assert_eq!(l.atoms().len(), 3);
        assert!(l.is_lattice());
    }

    #[test]
    fn matching_complement_gives_boolean_lattice() {
        let g = Bipartite::new(labels("l", 3), labels("r", 3), vec![0b110, 0b101, 0b011]);
        let l = closure_lattice(&g);
        assert_eq!(l.len(), 8);
        assert_eq!(l.atoms().len(), 3);
        assert!(l.is_lattice());
    }

    #[test]
    fn completion_of_lattice_is_itself() {
        let g = Bipartite::new(labels("l", 3), labels("r", 3), vec![0b110, 0b101, 0b011]);
        let l = closure_lattice(&g);
        let dm = dedekind_macneille(&l);
        assert_eq!(dm.lattice.len(), l.len());
        assert!(crate::poset::find_isomorphism(&l, &dm.lattice).is_some());
    }

    #[test]
    fn completion_of_antichain_with_extremes() {
        // bottom < a, b < top is already the 4-element lattice
        let els: Vec<Element> = ["0,0", "1,0", "0,1", "1,1"].iter().map(|s| Element::at(s.parse().unwrap())).collect();
        let p = Poset::by_points(els, vec![], vec![]);
        let dm = dedekind_macneille(&p);
        assert_eq!(dm.lattice.len(), 4);
        assert!(dm.lattice.is_lattice());
    }
}
