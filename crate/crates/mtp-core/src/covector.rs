use num::Zero;

use crate::bits::{bit_iter, left_mask};
use crate::error::{Error, Result};
use crate::ext::Rational;
use crate::generators::GeneratorSet;
use crate::point::Point;
use crate::sector::{hom_point, hom_sector, Sym};

/// Bipartite graph on V̄ = (generators, then rays e1..ed) and {0, 1, ..., d}.
///
/// Left node `k < n` is generator k, left node `n + j` is the ray e^(j+1).
/// Right node 0 is the special node, right node i >= 1 is axis i.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CovectorGraph {
    n: usize,
    d: usize,
    left: Vec<u64>,
}

impl CovectorGraph {
    pub fn from_rows(n: usize, d: usize, left: Vec<u64>) -> Self {
        debug_assert_eq!(left.len(), n + d);
        CovectorGraph { n, d, left }
    }

    pub fn num_generators(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn num_left(&self) -> usize {
        self.n + self.d
    }

    /// Right neighbours of left node x as a bitmask over {0..=d}.
    pub fn n_left(&self, x: usize) -> u64 {
        self.left[x]
    }

    /// Left neighbours of right node i as a bitmask over V̄.
    pub fn n_right(&self, i: usize) -> u128 {
        let mut m = 0u128;
        for (x, &row) in self.left.iter().enumerate() {
            if row >> i & 1 == 1 {
                m |= 1 << x;
            }
        }
        m
    }

    /// Union of right neighbourhoods of a left set.
    pub fn n_left_set(&self, xs: u128) -> u64 {
        bit_iter(xs).fold(0, |acc, x| acc | self.left[x])
    }

    /// Union of left neighbourhoods of a right set.
    pub fn n_right_set(&self, js: u64) -> u128 {
        bit_iter(js as u128).fold(0, |acc, j| acc | self.n_right(j))
    }

    pub fn has_edge(&self, x: usize, i: usize) -> bool {
        self.left[x] >> i & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, &row) in self.left.iter().enumerate() {
            for i in bit_iter(row as u128) {
                out.push((x, i));
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let all_left = left_mask(self.num_left());
        let all_right: u64 = if self.d + 1 == 64 { u64::MAX } else { (1u64 << (self.d + 1)) - 1 };
        let mut seen_r: u64 = 1;
        let mut seen_l: u128 = 0;
        loop {
            let nl = self.n_right_set(seen_r) | seen_l;
            let nr = self.n_left_set(nl) | seen_r;
            if nl == seen_l && nr == seen_r {
                break;
            }
            seen_l = nl;
            seen_r = nr;
        }
        seen_l == all_left && seen_r == all_right
    }
}

/// Covector graph of p with respect to generators given in homogeneous symbolic form.
/// Rays are the unit vectors and use their closed-form rules.
pub fn covector_hom<T>(points: &[Vec<Sym<T>>], z: &[Sym<T>]) -> CovectorGraph
where
    T: Clone + Ord + Zero,
{
    let d = z.len() - 1;
    let n = points.len();
    let mut left = Vec::with_capacity(n + d);
    for u in points {
        let mut row = 0u64;
        for i in 0..=d {
            if hom_sector(u, z, i) {
                row |= 1 << i;
            }
        }
        left.push(row);
    }
    let big = Sym::<T>::big();
    for j in 1..=d {
        let mut row = 1u64 << j;
        for i in 1..=d {
            if z[i] == Sym::NegInf {
                row |= 1 << i;
            }
        }
        if z[j] >= big {
            row |= 1;
        }
        left.push(row);
    }
    CovectorGraph { n, d, left }
}

pub fn covector(v: &GeneratorSet, p: &Point) -> Result<CovectorGraph> {
    p.check_dim(v.dim())?;
    if v.len() + v.dim() > 128 || v.dim() > 63 {
        return Err(Error::TooLarge(format!(
            "covector graphs need n + d <= 128 and d <= 63 (n = {}, d = {})",
            v.len(),
            v.dim()
        )));
    }
    let pts: Vec<Vec<Sym<Rational>>> = v.points().iter().map(hom_point).collect();
    Ok(covector_hom(&pts, &hom_point(p)))
}

pub fn is_pseudovertex(v: &GeneratorSet, p: &Point) -> Result<bool> {
    Ok(covector(v, p)?.is_connected())
}
