use mtp_core::{Bipartite, Error, GeneratorSet, Point, Result};

use crate::apices::{apex_set, ApexSet};

/// An element of V̄: a generator point or the ray e^(axis+1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VBar {
    Generator(Point),
    Ray(usize),
}

/// An element of F̄: an apex with coordinates, or the far-apex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FBar {
    Coord(Point),
    Far,
}

/// v ≤ q with equality in some coordinate.
pub fn point_incident(v: &Point, q: &Point) -> bool {
    v.leq(q) && v.iter().zip(q.iter()).any(|(a, b)| a == b)
}

pub fn incident(x: &VBar, q: &FBar) -> Result<bool> {
    Ok(match (x, q) {
        (VBar::Ray(_), FBar::Far) => true,
        (VBar::Generator(_), FBar::Far) => false,
        (VBar::Generator(v), FBar::Coord(q)) => {
            q.check_dim(v.dim())?;
            point_incident(v, q)
        }
        (VBar::Ray(i), FBar::Coord(q)) => {
            if *i >= q.dim() {
                return Err(Error::DimMismatch { expected: q.dim(), found: i + 1 });
            }
            q[*i].is_pos_inf()
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGraph {
    pub apices: ApexSet,
    /// Left nodes: generators then rays; right nodes: principal, boundary, far.
    pub graph: Bipartite,
}

impl IncidenceGraph {
    /// Incident apex labels of each element of V̄.
    pub fn listing(&self) -> Vec<(String, Vec<String>)> {
        (0..self.graph.num_left())
            .map(|l| {
                let rs = self.graph.right_of(l).into_iter().map(|r| self.graph.right[r].clone()).collect();
                (self.graph.left[l].clone(), rs)
            })
            .collect()
    }
}

pub fn build_incidence(v: &GeneratorSet, apices: ApexSet) -> IncidenceGraph {
    let n = v.len();
    let d = v.dim();
    let mut adj = Vec::with_capacity(apices.len());
    for r in 0..apices.len() {
        let q = apices.point(r).map_or(FBar::Far, FBar::Coord);
        let mut m = 0u128;
        for (k, p) in v.points().iter().enumerate() {
            if incident(&VBar::Generator(p.clone()), &q).unwrap_or(false) {
                m |= 1 << k;
            }
        }
        for i in 0..d {
            if incident(&VBar::Ray(i), &q).unwrap_or(false) {
                m |= 1 << (n + i);
            }
        }
        adj.push(m);
    }
    let graph = Bipartite::new(v.extended_labels(), apices.all_labels(), adj);
    IncidenceGraph { apices, graph }
}

pub fn incidence_graph(v: &GeneratorSet) -> Result<IncidenceGraph> {
    if v.len() + v.dim() > 128 {
        return Err(Error::TooLarge("more than 128 vertices and rays".into()));
    }
    Ok(build_incidence(v, apex_set(v)?))
}
