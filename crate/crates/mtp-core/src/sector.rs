//! Affine and homogeneous sectors.
//!
//! Everything reduces to one homogeneous test on vectors of length d+1:
//! z lies in the i-th sector of u iff z_i + u_k <= z_k + u_i for every k.
//! Points homogenise to (0, v), rays to (-inf, w). A +inf entry of z is
//! the symbolic value M, larger than every finite datum.

use std::ops::Add;

use num::Zero;

use crate::error::Result;
use crate::ext::{Ext, Rational};
use crate::point::Point;

/// A value m*M + r, or -inf. The derived order is lexicographic in (m, r),
/// which is the order for all sufficiently large M.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym<T> {
    NegInf,
    Val(i64, T),
}

impl<T: Zero> Sym<T> {
    pub fn fin(t: T) -> Self {
        Sym::Val(0, t)
    }

    pub fn big() -> Self {
        Sym::Val(1, T::zero())
    }

    pub fn zero() -> Self {
        Sym::Val(0, T::zero())
    }
}

impl<T: Add<Output = T>> Add for Sym<T> {
    type Output = Sym<T>;
    fn add(self, rhs: Sym<T>) -> Sym<T> {
        match (self, rhs) {
            (Sym::Val(m, a), Sym::Val(n, b)) => Sym::Val(m + n, a + b),
            _ => Sym::NegInf,
        }
    }
}

impl From<&Ext> for Sym<Rational> {
    fn from(x: &Ext) -> Self {
        match x {
            Ext::NegInf => Sym::NegInf,
            Ext::Finite(r) => Sym::fin(r.clone()),
            Ext::PosInf => Sym::big(),
        }
    }
}

/// (0, p) in symbolic form.
pub fn hom_point(p: &Point) -> Vec<Sym<Rational>> {
    std::iter::once(Sym::zero()).chain(p.iter().map(Sym::from)).collect()
}

/// (-inf, w) in symbolic form.
pub fn hom_ray(w: &Point) -> Vec<Sym<Rational>> {
    std::iter::once(Sym::NegInf).chain(w.iter().map(Sym::from)).collect()
}

/// z ∈ Ŝ_i(u) for homogeneous vectors of equal length.
pub fn hom_sector<T>(u: &[Sym<T>], z: &[Sym<T>], i: usize) -> bool
where
    T: Clone + Ord + Add<Output = T>,
{
    (0..u.len()).all(|k| z[i].clone() + u[k].clone() <= z[k].clone() + u[i].clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Point,
    Ray,
}

/// z ∈ S_i(v), i in 0..=d. Rays use the formal rule for i = 0:
/// z ∈ S_0(w) iff z_k = +inf wherever w_k is finite.
pub fn sector_member(v: &Point, kind: Kind, i: usize, z: &Point) -> Result<bool> {
    z.check_dim(v.dim())?;
    Ok(match kind {
        Kind::Point => hom_sector(&hom_point(v), &hom_point(z), i),
        Kind::Ray if i == 0 => v
            .iter()
            .zip(z.iter())
            .all(|(w, x)| w.is_neg_inf() || x.is_pos_inf()),
        Kind::Ray => hom_sector(&hom_ray(v), &hom_point(z), i),
    })
}
