//! LCM-lattice, graded Betti numbers of S/I and the Betti poset.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use mtp_complexes::{koszul_complex, order_complex_between, reduced_homology, top_crosscut_complex, Field};
use mtp_core::{Error, Point, Result};
use mtp_posets::{max_label, Element, Poset};

use crate::ideal::{exponent_to_point, lcm, monomial_string, polyhedron_from_ideal, Exponent, MonomialIdeal};

/// Largest generator count accepted by the lattice constructions.
pub const LCM_BOUND: usize = 16;

/// All lcms of nonempty generator subsets plus the formal bottom 1, as points
/// of V_I ordered componentwise. Each element is labelled by the generators dividing it.
pub fn lcm_lattice(i: &MonomialIdeal) -> Result<Poset> {
    if i.len() > LCM_BOUND {
        return Err(Error::TooLarge(format!("{} generators exceed the bound {LCM_BOUND}", i.len())));
    }
    let v = polyhedron_from_ideal(i);
    let mut seen: HashSet<Exponent> = i.generators.iter().cloned().collect();
    let mut queue: Vec<Exponent> = i.generators.clone();
    let mut k = 0;
    while k < queue.len() {
        for g in &i.generators {
            let m = lcm(&queue[k], g);
            if seen.insert(m.clone()) {
                queue.push(m);
            }
        }
        k += 1;
    }
    queue.sort();
    let mut elements = vec![Element::formal_at(Point::neg_inf(i.nvars)).with_vertices(vec![])];
    for u in &queue {
        let p = exponent_to_point(u);
        let s = max_label(&v, &p);
        elements.push(Element::at(p).with_vertices(s));
    }
    Ok(Poset::by_points(elements, v.labels().to_vec(), vec![]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BettiMethod {
    /// Homology of open intervals (0̂, u) of the LCM-lattice.
    LcmInterval,
    /// Koszul complexes Δ_p read off covector graphs.
    Koszul,
    /// Top multidegree only, from the crosscut of the facet complex.
    FacetCrosscutTop,
}

/// Graded Betti numbers β_{i,u}(S/I), nonzero entries only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub field: Field,
    pub entries: BTreeMap<(usize, Exponent), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, u: &[u32]) -> usize {
        self.entries.get(&(i, u.to_vec())).copied().unwrap_or(0)
    }

    /// Total Betti numbers β_0, β_1, ...
    pub fn totals(&self) -> Vec<usize> {
        let top = self.entries.keys().map(|k| k.0).max().map_or(0, |m| m + 1);
        let mut t = vec![0; top];
        for ((i, _), b) in &self.entries {
            t[*i] += b;
        }
        t
    }

    /// Entries at multidegree u, by homological degree.
    pub fn column(&self, u: &[u32]) -> BTreeMap<usize, usize> {
        self.entries.iter().filter(|((_, w), _)| w == u).map(|((i, _), b)| (*i, *b)).collect()
    }

    fn add_profile(&mut self, u: Exponent, profile: &BTreeMap<i64, usize>) {
        for (&k, &b) in profile {
            self.entries.insert(((k + 2) as usize, u.clone()), b);
        }
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, u), b) in &self.entries {
            writeln!(f, "beta_{i},{} = {b}", monomial_string(u))?;
        }
        Ok(())
    }
}

fn point_exponent(p: &Point) -> Exponent {
    crate::ideal::point_to_exponent(p).expect("lcm points are exponent vectors")
}

/// β_{i,u}(S/I). LcmInterval and Koszul fill every multidegree; FacetCrosscutTop
/// fills only u = lcm of all generators. β_{0,1} = 1 is included by the first two.
pub fn betti_numbers(i: &MonomialIdeal, method: BettiMethod, field: Field) -> Result<BettiTable> {
    let mut t = BettiTable { field, entries: BTreeMap::new() };
    match method {
        BettiMethod::FacetCrosscutTop => {
            let k = top_crosscut_complex(&polyhedron_from_ideal(i))?;
            t.add_profile(i.lcm_all(), &reduced_homology(&k, field)?.reduced_betti);
        }
        BettiMethod::LcmInterval | BettiMethod::Koszul => {
            t.entries.insert((0, vec![0; i.nvars]), 1);
            let l = lcm_lattice(i)?;
            let v = polyhedron_from_ideal(i);
            let bot = l.bottom().expect("formal bottom");
            for a in (0..l.len()).filter(|&a| a != bot) {
                let p = l.elements[a].point.as_ref().unwrap();
                let k = if method == BettiMethod::Koszul {
                    // β_{j,p}(I) = dim H̃_{j-1}(Δ_p) and β_{j,p}(I) = β_{j+1,p}(S/I)
                    reduced_homology(&koszul_complex(&v, p)?, field)?.reduced_betti
                } else {
                    reduced_homology(&order_complex_between(&l, bot, a)?, field)?.reduced_betti
                };
                t.add_profile(point_exponent(p), &k);
            }
        }
    }
    Ok(t)
}

/// LCM-lattice elements above 0̂ whose open lower interval has nonzero homology.
pub fn betti_poset(i: &MonomialIdeal, field: Field) -> Result<Poset> {
    let l = lcm_lattice(i)?;
    let bot = l.bottom().expect("formal bottom");
    let mut keep = Vec::new();
    for a in (0..l.len()).filter(|&a| a != bot) {
        if !reduced_homology(&order_complex_between(&l, bot, a)?, field)?.is_trivial() {
            keep.push(a);
        }
    }
    Ok(l.induced(&keep))
}

/// LCM-lattice elements above 0̂ that are syzygy points of V_I.
pub fn syzygy_poset(i: &MonomialIdeal, field: Field) -> Result<Poset> {
    let l = lcm_lattice(i)?;
    let v = polyhedron_from_ideal(i);
    let mut keep = Vec::new();
    for (a, e) in l.elements.iter().enumerate().filter(|(_, e)| !e.formal) {
        if mtp_complexes::is_syzygy_point(&v, e.point.as_ref().unwrap(), field)? {
            keep.push(a);
        }
    }
    Ok(l.induced(&keep))
}
