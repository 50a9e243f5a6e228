use std::fmt;
use std::ops::{Deref, Index};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ext::Ext;

/// A vector in the tropical hypercube.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(pub Vec<Ext>);

impl Point {
    pub fn new(coords: Vec<Ext>) -> Self {
        Point(coords)
    }

    pub fn ints(xs: &[i64]) -> Self {
        Point(xs.iter().map(|&x| Ext::int(x)).collect())
    }

    pub fn neg_inf(d: usize) -> Self {
        Point(vec![Ext::NegInf; d])
    }

    pub fn pos_inf(d: usize) -> Self {
        Point(vec![Ext::PosInf; d])
    }

    /// e^(i): 0 at `axis`, -inf elsewhere.
    pub fn unit(d: usize, axis: usize) -> Self {
        let mut c = vec![Ext::NegInf; d];
        c[axis] = Ext::zero();
        Point(c)
    }

    /// The modified unit vector: +inf at `axis`, -inf elsewhere.
    pub fn modified_unit(d: usize, axis: usize) -> Self {
        let mut c = vec![Ext::NegInf; d];
        c[axis] = Ext::PosInf;
        Point(c)
    }

    /// The boundary apex of `axis`: -inf at `axis`, +inf elsewhere.
    pub fn boundary_apex(d: usize, axis: usize) -> Self {
        let mut c = vec![Ext::PosInf; d];
        c[axis] = Ext::NegInf;
        Point(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Ext] {
        &self.0
    }

    pub fn check_dim(&self, d: usize) -> Result<()> {
        if self.dim() == d {
            Ok(())
        } else {
            Err(Error::DimMismatch { expected: d, found: self.dim() })
        }
    }

    /// Componentwise <=.
    pub fn leq(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise strict <.
    pub fn lt_all(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    pub fn join(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a.max(b).clone()).collect())
    }

    pub fn meet(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a.min(b).clone()).collect())
    }

    pub fn negated(&self) -> Point {
        Point(self.0.iter().map(Ext::neg).collect())
    }

    pub fn has_pos_inf(&self) -> bool {
        self.0.iter().any(Ext::is_pos_inf)
    }

    pub fn has_neg_inf(&self) -> bool {
        self.0.iter().any(Ext::is_neg_inf)
    }

    pub fn all_finite(&self) -> bool {
        self.0.iter().all(Ext::is_finite)
    }

    /// No +inf entry and at least one entry above -inf.
    pub fn is_generator_kind(&self) -> bool {
        !self.has_pos_inf() && self.0.iter().any(|x| !x.is_neg_inf())
    }
}

impl Deref for Point {
    type Target = [Ext];
    fn deref(&self) -> &[Ext] {
        &self.0
    }
}

impl Index<usize> for Point {
    type Output = Ext;
    fn index(&self, i: usize) -> &Ext {
        &self.0[i]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Accepts "1,2,-inf", "(1, 2, -inf)" or whitespace separated entries.
impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Point> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Ext>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse(format!("empty point {s:?}")));
        }
        Ok(Point(coords))
    }
}
