//! Complexes attached to a monomial tropical polyhedron and to posets.

use std::collections::HashMap;

use mtp_core::bits::bit_iter;
use mtp_core::{covector, Error, GeneratorSet, Point, Result};
use mtp_facets::{incidence_graph, IncidenceGraph};
use mtp_posets::{max_of_label, Poset};

use crate::complex::{SimplicialComplex, FACE_BUDGET};
use crate::homology::{reduced_homology, Field};

fn mask_faces(masks: impl Iterator<Item = u128>) -> Vec<Vec<usize>> {
    masks.map(|m| bit_iter(m).collect()).collect()
}

/// Vertex sets of the facets, the boundary facets and the far face, on V̄.
pub fn facet_complex_of(ig: &IncidenceGraph) -> SimplicialComplex {
    SimplicialComplex::new(ig.graph.left.clone(), mask_faces(ig.graph.adj.iter().copied()))
}

pub fn facet_complex(v: &GeneratorSet) -> Result<SimplicialComplex> {
    Ok(facet_complex_of(&incidence_graph(v)?))
}

/// Faces of the facet complex without rays; `n` is the number of generators.
pub fn bounded_part(k: &SimplicialComplex, n: usize) -> SimplicialComplex {
    let mut b = k.restrict(|x| x < n);
    b.vertices.truncate(n);
    b
}

pub fn bounded_complex(v: &GeneratorSet) -> Result<SimplicialComplex> {
    Ok(bounded_part(&facet_complex(v)?, v.len()))
}

/// Crosscut complex of the interval below the closure of V in the vertex-facet
/// lattice: generator sets of the apices not incident with all of V. Equals the
/// bounded complex unless some facet contains every generator.
pub fn top_crosscut_complex(v: &GeneratorSet) -> Result<SimplicialComplex> {
    let ig = incidence_graph(v)?;
    let n = v.len();
    let all: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let masks = ig.graph.adj.iter().map(|&m| m & all).filter(|&m| m != all);
    Ok(SimplicialComplex::new(v.labels().to_vec(), mask_faces(masks)))
}

fn chains(p: &Poset, inside: &[bool]) -> Result<Vec<Vec<usize>>> {
    let up: Vec<Vec<usize>> = (0..p.len())
        .map(|a| p.upper_covers(a).into_iter().filter(|&b| inside[b]).collect())
        .collect();
    let starts: Vec<usize> = (0..p.len())
        .filter(|&a| inside[a] && !(0..p.len()).any(|b| b != a && inside[b] && p.leq(b, a)))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = starts.into_iter().map(|a| vec![a]).collect();
    while let Some(c) = stack.pop() {
        let last = *c.last().unwrap();
        if up[last].is_empty() {
            out.push(c);
            if out.len() as u128 > FACE_BUDGET {
                return Err(Error::TooLarge("too many maximal chains".into()));
            }
            continue;
        }
        for &b in &up[last] {
            let mut d = c.clone();
            d.push(b);
            stack.push(d);
        }
    }
    Ok(out)
}

/// Chains of the open interval (a, b), on vertices indexed like the elements of P.
pub fn order_complex_between(p: &Poset, a: usize, b: usize) -> Result<SimplicialComplex> {
    let inside: Vec<bool> = (0..p.len()).map(|x| x != a && x != b && p.leq(a, x) && p.leq(x, b)).collect();
    let names = (0..p.len()).map(|x| p.name(x)).collect();
    let mut faces = chains(p, &inside)?;
    if faces.is_empty() {
        faces.push(vec![]);
    }
    Ok(SimplicialComplex::new(names, faces))
}

/// Order complex of P with its bottom and top removed.
pub fn order_complex(p: &Poset) -> Result<SimplicialComplex> {
    match (p.bottom(), p.top()) {
        (Some(a), Some(b)) if a != b => order_complex_between(p, a, b),
        _ => Err(Error::MissingExtremes),
    }
}

/// Crosscut complex of a lattice: subsets of the crosscut C (the atoms by
/// default) whose meet is not the bottom or whose join is not the top.
pub fn crosscut_complex(l: &Poset, crosscut: Option<&[usize]>) -> Result<SimplicialComplex> {
    let (Some(bot), Some(top)) = (l.bottom(), l.top()) else { return Err(Error::MissingExtremes) };
    let c: Vec<usize> = crosscut.map(<[usize]>::to_vec).unwrap_or_else(|| l.atoms());
    check_crosscut(l, &c, bot, top)?;
    if c.len() > 30 {
        return Err(Error::TooLarge(format!("crosscut of {} elements", c.len())));
    }
    let mut faces = Vec::new();
    // non-spanning sets are closed under subsets, so spanning ones are pruned
    let mut stack: Vec<(Vec<usize>, usize, usize, usize)> = vec![(vec![], 0, top, bot)];
    while let Some((set, next, meet, join)) = stack.pop() {
        let mut grew = false;
        for k in next..c.len() {
            let x = c[k];
            let (m, j) = if set.is_empty() {
                (x, x)
            } else {
                let m = l.meet(meet, x).ok_or_else(|| Error::NotACrosscut("the poset is not a lattice".into()))?;
                let j = l.join(join, x).ok_or_else(|| Error::NotACrosscut("the poset is not a lattice".into()))?;
                (m, j)
            };
            if m == bot && j == top {
                continue;
            }
            let mut s = set.clone();
            s.push(k);
            stack.push((s, k + 1, m, j));
            grew = true;
        }
        if !grew {
            faces.push(set);
            if faces.len() as u128 > FACE_BUDGET {
                return Err(Error::TooLarge("too many crosscut faces".into()));
            }
        }
    }
    let names = c.iter().map(|&x| l.name(x)).collect();
    Ok(SimplicialComplex::new(names, faces))
}

fn check_crosscut(l: &Poset, c: &[usize], bot: usize, top: usize) -> Result<()> {
    if c.is_empty() {
        return Err(Error::NotACrosscut("empty".into()));
    }
    if c.contains(&bot) || c.contains(&top) {
        return Err(Error::NotACrosscut("contains the bottom or the top".into()));
    }
    for &a in c {
        for &b in c {
            if a != b && l.leq(a, b) {
                return Err(Error::NotACrosscut(format!("{} <= {}", l.name(a), l.name(b))));
            }
        }
    }
    // a maximal chain avoiding C is a cover path from bottom to top outside C
    let mut seen = vec![false; l.len()];
    let mut stack = vec![bot];
    seen[bot] = true;
    while let Some(a) = stack.pop() {
        if a == top {
            return Err(Error::NotACrosscut("some maximal chain misses it".into()));
        }
        for b in l.upper_covers(a) {
            if !seen[b] && !c.contains(&b) {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    Ok(())
}

/// Δ_p on the axes 1..d: sets J such that some 0-neighbour of p is adjacent to
/// no axis in J. Void when p has no 0-neighbour.
pub fn koszul_complex(v: &GeneratorSet, p: &Point) -> Result<SimplicialComplex> {
    koszul_complex_at(v, p, 0)
}

/// Experimental: the Koszul construction with node 0 replaced by node j.
/// Vertices are the nodes 0..=d other than j; each x ∈ N(j) contributes the
/// face of nodes outside N(x). For j = 0 this is Δ_p.
pub fn koszul_complex_at(v: &GeneratorSet, p: &Point, j: usize) -> Result<SimplicialComplex> {
    let g = covector(v, p)?;
    let d = v.dim();
    if j > d {
        return Err(Error::DimMismatch { expected: d, found: j });
    }
    let nodes: Vec<usize> = (0..=d).filter(|&i| i != j).collect();
    let names = nodes.iter().map(|i| i.to_string()).collect();
    let faces: Vec<Vec<usize>> = bit_iter(g.n_right(j))
        .map(|x| (0..nodes.len()).filter(|&k| g.n_left(x) >> nodes[k] & 1 == 0).collect())
        .collect();
    if faces.is_empty() {
        return Ok(SimplicialComplex::void(names));
    }
    Ok(SimplicialComplex::new(names, faces))
}

pub fn is_syzygy_point(v: &GeneratorSet, p: &Point, field: Field) -> Result<bool> {
    Ok(!reduced_homology(&koszul_complex(v, p)?, field)?.is_trivial())
}

/// Largest generator count for the Scarf complex subset scan.
pub const SCARF_BOUND: usize = 16;

/// Subsets X ⊆ V whose coordinatewise max is attained by no other subset.
pub fn scarf_complex(v: &GeneratorSet) -> Result<SimplicialComplex> {
    let n = v.len();
    if n > SCARF_BOUND {
        return Err(Error::TooLarge(format!("{n} generators exceed the Scarf bound {SCARF_BOUND}")));
    }
    let mut count: HashMap<Point, usize> = HashMap::new();
    let subsets: Vec<Vec<usize>> =
        (0u32..1 << n).map(|m| (0..n).filter(|&k| m >> k & 1 == 1).collect()).collect();
    let maxima: Vec<Point> = subsets.iter().map(|s| max_of_label(v, s)).collect();
    for p in &maxima {
        *count.entry(p.clone()).or_default() += 1;
    }
    let faces = subsets.into_iter().zip(&maxima).filter(|(_, p)| count[*p] == 1).map(|(s, _)| s);
    Ok(SimplicialComplex::new(v.labels().to_vec(), faces))
}

/// The facet complex has the homology of a (d-1)-sphere.
pub fn sphere_check(v: &GeneratorSet, field: Field) -> Result<bool> {
    Ok(reduced_homology(&facet_complex(v)?, field)?.is_sphere(v.dim() as i64 - 1))
}
