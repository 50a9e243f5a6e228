//! Order patterns of generator matrices and pattern types of facet-apices.

use std::fmt;

use mtp_core::{Bipartite, Error, GeneratorSet, Point, Result};
use mtp_facets::is_principal_apex;

/// Per axis, the generator indices grouped into blocks of equal value,
/// blocks listed in increasing order. -inf entries form the lowest block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderPattern {
    pub n: usize,
    pub axes: Vec<Vec<Vec<usize>>>,
}

pub fn order_pattern(v: &GeneratorSet) -> OrderPattern {
    let n = v.len();
    let axes = (0..v.dim())
        .map(|i| {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by(|&a, &b| v.point(a)[i].cmp(&v.point(b)[i]).then(a.cmp(&b)));
            let mut blocks: Vec<Vec<usize>> = Vec::new();
            for j in idx {
                match blocks.last_mut() {
                    Some(b) if v.point(b[0])[i] == v.point(j)[i] => b.push(j),
                    _ => blocks.push(vec![j]),
                }
            }
            blocks
        })
        .collect();
    OrderPattern { n, axes }
}

impl OrderPattern {
    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    /// Block position of generator j on axis i.
    pub fn rank(&self, i: usize, j: usize) -> usize {
        self.axes[i].iter().position(|b| b.contains(&j)).expect("every index is in a block")
    }

    /// Every strict comparison of `coarser` also holds strictly here.
    pub fn refines(&self, coarser: &OrderPattern) -> bool {
        if self.n != coarser.n || self.dim() != coarser.dim() {
            return false;
        }
        (0..self.dim()).all(|i| {
            (0..self.n).all(|j| {
                (0..self.n).all(|k| coarser.rank(i, j) >= coarser.rank(i, k) || self.rank(i, j) < self.rank(i, k))
            })
        })
    }

    /// No column is weakly below another in every row.
    pub fn is_valid_generator_pattern(&self) -> bool {
        (0..self.n).all(|j| {
            (0..self.n).all(|k| j == k || (0..self.dim()).any(|i| self.rank(i, j) > self.rank(i, k)))
        })
    }

    /// Every block has one element.
    pub fn is_strict(&self) -> bool {
        self.axes.iter().flatten().all(|b| b.len() == 1)
    }
}

impl fmt::Display for OrderPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, blocks) in self.axes.iter().enumerate() {
            let parts: Vec<String> = blocks
                .iter()
                .map(|b| format!("{{{}}}", b.iter().map(|j| (j + 1).to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            writeln!(f, "axis {}: {}", i + 1, parts.join(" < "))?;
        }
        Ok(())
    }
}

/// Bipartite graph with generators on the left and axes 1..d on the right:
/// (j, i) is an edge iff a_i = v_ij and v_kj < a_k for all k != i.
/// Axes with a_i = +inf stay isolated.
pub fn pattern_type(a: &Point, v: &GeneratorSet) -> Result<Bipartite> {
    a.check_dim(v.dim())?;
    if !is_principal_apex(v, a) {
        return Err(Error::NotAnApex);
    }
    let d = v.dim();
    let adj = (0..d)
        .map(|i| {
            (0..v.len())
                .filter(|&j| mtp_facets::apices::pins(v.point(j), a, i))
                .fold(0u128, |m, j| m | 1 << j)
        })
        .collect();
    Ok(Bipartite::new(v.labels().to_vec(), (1..=d).map(|i| i.to_string()).collect(), adj))
}

/// The apex read back from a pattern type: a_i = v_ij for an edge (j, i), +inf otherwise.
pub fn apex_from_pattern(p: &Bipartite, v: &GeneratorSet) -> Point {
    let d = v.dim();
    let mut a = Point::pos_inf(d);
    for (j, i) in p.edges() {
        a.0[i] = v.point(j)[i].clone();
    }
    a
}
