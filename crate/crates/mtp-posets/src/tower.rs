//! Max-lattice, min-lattice, max-min poset, CP-order and Scarf poset.

use std::collections::HashSet;

use mtp_core::bits::{bit_iter, is_subset};
use mtp_core::rank::{rank_join, rank_meet, RankSpace, Ranks};
use mtp_core::{covector, CovectorGraph, Error, GeneratorSet, Point, Result};
use mtp_facets::{apex_set, ApexSet};

use crate::poset::{Element, Poset};

/// Subset scans are refused above this many vertices plus rays.
pub const LATTICE_BOUND: usize = 20;

fn check_bound(v: &GeneratorSet) -> Result<()> {
    v.require_minimal()?;
    if v.len() + v.dim() > LATTICE_BOUND {
        return Err(Error::TooLarge(format!(
            "|V| + d = {} exceeds the bound {LATTICE_BOUND}",
            v.len() + v.dim()
        )));
    }
    Ok(())
}

/// The maximal S ⊆ V̄ with m_S <= p: generators below p and rays on +inf axes.
pub fn max_label(v: &GeneratorSet, p: &Point) -> Vec<usize> {
    let mut s: Vec<usize> = (0..v.len()).filter(|&k| v.point(k).leq(p)).collect();
    s.extend((0..v.dim()).filter(|&i| p[i].is_pos_inf()).map(|i| v.len() + i));
    s
}

/// Coordinate apices (principal, then boundary) lying above p.
pub fn min_label(aps: &ApexSet, p: &Point) -> Vec<usize> {
    (0..aps.num_coord()).filter(|&r| p.leq(&aps.point(r).expect("coordinate apex"))).collect()
}

/// Closure of `seeds` under a binary operation followed by every pattern
/// that sets a subset of axes to `fill`.
fn closure_with_patterns(seeds: &[Ranks], op: fn(&[u16], &[u16]) -> Ranks, fill: &[u16]) -> Vec<Ranks> {
    let mut seen: HashSet<Ranks> = seeds.iter().cloned().collect();
    let mut queue: Vec<Ranks> = seen.iter().cloned().collect();
    queue.sort();
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k].clone();
        for s in seeds {
            let y = op(&x, s);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
        k += 1;
    }
    let d = fill.len();
    let mut out: HashSet<Ranks> = HashSet::new();
    for x in &queue {
        for mask in 0u32..1 << d {
            let mut y = x.clone();
            for i in 0..d {
                if mask >> i & 1 == 1 {
                    y[i] = fill[i];
                }
            }
            out.insert(y);
        }
    }
    let mut out: Vec<Ranks> = out.into_iter().collect();
    out.sort();
    out
}

fn tops(rs: &RankSpace) -> Vec<u16> {
    (0..rs.dim()).map(|i| rs.top(i)).collect()
}

/// Every coordinatewise max over S ⊆ V ∪ {ē^(1..d)} with S ∩ V nonempty,
/// plus the formal bottom (-inf, ..., -inf). Each element carries its maximal S.
pub fn max_lattice(v: &GeneratorSet) -> Result<Poset> {
    check_bound(v)?;
    let rs = RankSpace::from_points(v.dim(), v.points());
    let seeds: Vec<Ranks> = v.points().iter().map(|p| rs.encode(p)).collect();
    let pts = closure_with_patterns(&seeds, rank_join, &tops(&rs));
    let mut elements = vec![Element::formal_at(Point::neg_inf(v.dim())).with_vertices(vec![])];
    for r in &pts {
        let p = rs.decode(r);
        let s = max_label(v, &p);
        elements.push(Element::at(p).with_vertices(s));
    }
    let aps = apex_set(v)?;
    Ok(Poset::by_points(elements, v.extended_labels(), aps.all_labels()))
}

/// Every coordinatewise min over T ⊆ A ∪ {-ē^(1..d)}, where -ē^(i) has -inf at i
/// and +inf elsewhere, ordered by reversed domination. The empty T gives the
/// formal bottom (+inf, ..., +inf). T may consist of modified units alone, which
/// yields the boundary apices and their meets.
pub fn min_lattice(v: &GeneratorSet) -> Result<Poset> {
    check_bound(v)?;
    let aps = apex_set(v)?;
    let d = v.dim();
    let rs = RankSpace::from_points(d, v.points().iter().chain(aps.principal.iter()));
    let top = tops(&rs);
    let mut seeds: Vec<Ranks> = aps.principal.iter().map(|p| rs.encode(p)).collect();
    seeds.push(top.clone());
    let pts = closure_with_patterns(&seeds, rank_meet, &vec![0; d]);
    let mut elements = Vec::new();
    for r in &pts {
        let p = rs.decode(r);
        let lab = min_label(&aps, &p);
        let e = if *r == top { Element::formal_at(p) } else { Element::at(p) };
        elements.push(e.with_apices(lab));
    }
    Ok(Poset::new(elements, v.extended_labels(), aps.all_labels(), |a, b| {
        b.point.as_ref().unwrap().leq(a.point.as_ref().unwrap())
    }))
}

/// Max-lattice points that are also min-lattice points, ordered as in the max-lattice.
pub fn max_min_poset(v: &GeneratorSet) -> Result<Poset> {
    let lmax = max_lattice(v)?;
    let lmin = min_lattice(v)?;
    let aps = apex_set(v)?;
    let mins: HashSet<&Point> = lmin.elements.iter().filter_map(|e| e.point.as_ref()).collect();
    let keep: Vec<usize> = (0..lmax.len())
        .filter(|&a| mins.contains(lmax.elements[a].point.as_ref().unwrap()))
        .collect();
    let mut m = lmax.induced(&keep);
    for e in &mut m.elements {
        let lab = min_label(&aps, e.point.as_ref().unwrap());
        e.apices = Some(lab);
    }
    Ok(m)
}

/// Characteristic-point test on a covector graph. An axis with p_i = +inf is
/// handled by the ray e^(i); otherwise some generator v ∈ N(0) ∩ N(i) must have
/// N(u) ⊄ N(v) for every u ∈ N(0) \ N(i).
pub fn is_characteristic(g: &CovectorGraph, p: &Point) -> bool {
    let n = g.num_generators();
    let n0 = g.n_right(0);
    (1..=g.dim()).all(|i| {
        if p[i - 1].is_pos_inf() {
            return true;
        }
        let ni = g.n_right(i);
        let others = n0 & !ni;
        bit_iter(n0 & ni).filter(|&x| x < n).any(|x| {
            let nv = g.n_left(x);
            bit_iter(others).all(|u| g.n_left(u) & !nv != 0)
        })
    })
}

/// Scarf test on a covector graph: (a) the 0-neighbours reach every axis,
/// (b) each 0-neighbour is the only 0-neighbour adjacent to some axis.
pub fn is_scarf_point(g: &CovectorGraph) -> bool {
    let d = g.dim();
    let n0 = g.n_right(0);
    if n0 == 0 {
        return false;
    }
    let reach = g.n_left_set(n0);
    let axes: u64 = ((1u64 << d) - 1) << 1;
    if reach & axes != axes {
        return false;
    }
    let shared: Vec<u128> = (1..=d).map(|i| n0 & g.n_right(i)).collect();
    bit_iter(n0).all(|x| shared.iter().any(|&s| s == 1u128 << x))
}

fn filter_by_covector(
    l: &Poset,
    v: &GeneratorSet,
    keep_formal: bool,
    test: impl Fn(&CovectorGraph, &Point) -> bool,
) -> Result<Poset> {
    let mut keep = Vec::new();
    for (a, e) in l.elements.iter().enumerate() {
        if e.formal {
            if keep_formal {
                keep.push(a);
            }
            continue;
        }
        let p = e.point.as_ref().unwrap();
        if test(&covector(v, p)?, p) {
            keep.push(a);
        }
    }
    Ok(l.induced(&keep))
}

/// Characteristic points of the max-lattice plus the formal bottom.
pub fn cp_order(v: &GeneratorSet) -> Result<Poset> {
    let l = max_lattice(v)?;
    filter_by_covector(&l, v, true, is_characteristic)
}

/// Scarf points of the max-lattice, without formal extremes.
pub fn scarf_poset(v: &GeneratorSet) -> Result<Poset> {
    let l = max_lattice(v)?;
    filter_by_covector(&l, v, false, |g, _| is_scarf_point(g))
}

/// Principal-apex test on a covector graph, for points without -inf entries:
/// no 0-neighbour has degree one, and every axis i has a 0-neighbour whose
/// neighbourhood is exactly {0, i}.
pub fn is_apex_covector(g: &CovectorGraph) -> bool {
    let n0 = g.n_right(0);
    let no_leaf = bit_iter(n0).all(|x| g.n_left(x).count_ones() > 1);
    no_leaf && (1..=g.dim()).all(|i| bit_iter(n0).any(|x| g.n_left(x) == 1 | 1 << i))
}

/// V̄-subset mask of an element label.
pub fn label_mask(s: &[usize]) -> u128 {
    s.iter().fold(0, |m, &x| m | 1 << x)
}

/// True iff `a` ⊆ `b` as V̄-label sets.
pub fn label_subset(a: &[usize], b: &[usize]) -> bool {
    is_subset(label_mask(a), label_mask(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(s: &[&str]) -> GeneratorSet {
        let p: Vec<Point> = s.iter().map(|x| x.parse().unwrap()).collect();
        GeneratorSet::new(p[0].dim(), p).unwrap()
    }

    #[test]
    fn two_dim_max_lattice() {
        let v = gs(&["1,2", "2,-inf"]);
        let l = max_lattice(&v).unwrap();
        let mut got: Vec<String> = l.elements.iter().map(|e| e.point.as_ref().unwrap().to_string()).collect();
        got.sort();
        let mut want: Vec<String> = [
            "(-inf,-inf)", "(1,2)", "(2,-inf)", "(1,+inf)", "(2,2)", "(+inf,-inf)", "(+inf,2)", "(2,+inf)",
            "(+inf,+inf)",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        want.sort();
        assert_eq!(got, want);
        assert!(l.is_lattice());
    }

    #[test]
    fn min_of_two_apices() {
        let v = gs(&["1,2", "2,-inf"]);
        let l = min_lattice(&v).unwrap();
        assert!(l.find_point(&"1,2".parse().unwrap()).is_some());
        assert!(l.find_point(&Point::pos_inf(2)).is_some());
    }

    #[test]
    fn single_generator_max_lattice() {
        let v = gs(&["0,0"]);
        let l = max_lattice(&v).unwrap();
        assert_eq!(l.len(), 5);
        assert!(l.is_lattice());
    }
}
