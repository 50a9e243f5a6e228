use mtp_core::{Error, Ext, GeneratorSet, Point, Result};

use crate::apices::{apex_set, pins, principal_apices};

/// C(V) = tconv(A) ⊕ tcone(min-units), stored as the max-polyhedron M(-A).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    /// Principal apices A, entries in Q ∪ {+inf}.
    pub apices: Vec<Point>,
    /// -A as a max-generator set.
    pub negated: GeneratorSet,
}

pub fn complementary_polyhedron(v: &GeneratorSet) -> Result<Complement> {
    let apices = principal_apices(v)?;
    let neg: Vec<Point> = apices.iter().map(Point::negated).collect();
    let negated = GeneratorSet::new(v.dim(), neg)?;
    Ok(Complement { apices, negated })
}

/// Generators recovered from the complement of the complement.
pub fn double_complement(v: &GeneratorSet) -> Result<Vec<Point>> {
    let c = complementary_polyhedron(v)?;
    let mut back: Vec<Point> = principal_apices(&c.negated.minimal_generators()?)?
        .iter()
        .map(Point::negated)
        .collect();
    back.sort();
    Ok(back)
}

/// v is a minimal generator iff each finite coordinate v_i is pinned by a facet-apex.
pub fn check_vertex_char(v: &GeneratorSet, x: &Point) -> Result<bool> {
    x.check_dim(v.dim())?;
    if v.index_of(x).is_none() {
        return Err(Error::NotAGenerator);
    }
    let m = v.minimal_generators()?;
    let aps = apex_set(&m)?;
    let coords: Vec<Point> = (0..aps.num_coord()).filter_map(|r| aps.point(r)).collect();
    Ok((0..x.dim())
        .filter(|&i| !x[i].is_neg_inf())
        .all(|i| coords.iter().any(|a| pins(x, a, i))))
}

/// φ_c(p) = max_i (p_i - c_i), with c_i = +inf contributing -inf and
/// c_i = -inf contributing +inf unless p_i = -inf.
pub fn phi(c: &Point, p: &Point) -> Ext {
    let mut best = Ext::NegInf;
    for (x, y) in p.iter().zip(c.iter()) {
        let t = match (x, y) {
            (Ext::NegInf, _) | (_, Ext::PosInf) => Ext::NegInf,
            (_, Ext::NegInf) | (Ext::PosInf, _) => Ext::PosInf,
            (Ext::Finite(a), Ext::Finite(b)) => Ext::Finite(a - b),
        };
        if t > best {
            best = t;
        }
    }
    best
}

/// Minimisers of φ_c over V together with the rays e^(i) with c_i = +inf,
/// as a mask over V̄ (generators, then rays).
pub fn linear_functional_minimizers(v: &GeneratorSet, c: &Point) -> Result<u128> {
    c.check_dim(v.dim())?;
    let vals: Vec<Ext> = v.points().iter().map(|p| phi(c, p)).collect();
    let mut m = 0u128;
    if let Some(best) = vals.iter().min() {
        for (k, x) in vals.iter().enumerate() {
            if x == best {
                m |= 1 << k;
            }
        }
    }
    for i in 0..v.dim() {
        if c[i].is_pos_inf() {
            m |= 1 << (v.len() + i);
        }
    }
    Ok(m)
}
