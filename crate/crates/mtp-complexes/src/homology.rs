//! Reduced simplicial homology by exact sparse rank computation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use mtp_core::{Error, Rational, Result};
use num::Zero;

use crate::complex::SimplicialComplex;

/// Coefficient field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        let is_prime = p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| p % k != 0);
        if !is_prime {
            return Err(Error::Parse(format!("{p} is not a prime")));
        }
        Ok(Field::Prime(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `q` for the rationals, `p:N` for the prime field of order N.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let n = s
            .strip_prefix("p:")
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}; use q or p:PRIME")))?;
        let p = n.parse::<u64>().map_err(|e| Error::Parse(format!("field {s:?}: {e}")))?;
        Field::prime(p)
    }
}

trait Arith {
    type T: Clone;
    fn lift(&self, x: i64) -> Self::T;
    fn is_zero(&self, x: &Self::T) -> bool;
    /// a - f * b
    fn axpy(&self, a: &Self::T, f: &Self::T, b: &Self::T) -> Self::T;
    fn div(&self, a: &Self::T, b: &Self::T) -> Self::T;
}

struct Q;

impl Arith for Q {
    type T = Rational;
    fn lift(&self, x: i64) -> Rational {
        Rational::from_integer(x.into())
    }
    fn is_zero(&self, x: &Rational) -> bool {
        x.is_zero()
    }
    fn axpy(&self, a: &Rational, f: &Rational, b: &Rational) -> Rational {
        a - f * b
    }
    fn div(&self, a: &Rational, b: &Rational) -> Rational {
        a / b
    }
}

struct Fp(u64);

impl Fp {
    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = (r as u128 * b as u128 % self.0 as u128) as u64;
            }
            b = (b as u128 * b as u128 % self.0 as u128) as u64;
            e >>= 1;
        }
        r
    }
}

impl Arith for Fp {
    type T = u64;
    fn lift(&self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn axpy(&self, a: &u64, f: &u64, b: &u64) -> u64 {
        let fb = (*f as u128 * *b as u128 % self.0 as u128) as u64;
        (*a + self.0 - fb) % self.0
    }
    fn div(&self, a: &u64, b: &u64) -> u64 {
        (*a as u128 * self.pow(*b, self.0 - 2) as u128 % self.0 as u128) as u64
    }
}

/// Rank of a sparse integer matrix given by rows of (column, entry).
fn rank_with<A: Arith>(ar: &A, rows: &[Vec<(usize, i64)>]) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, A::T)>> = HashMap::new();
    for r in rows {
        let mut row: Vec<(usize, A::T)> =
            r.iter().map(|&(c, x)| (c, ar.lift(x))).filter(|(_, x)| !ar.is_zero(x)).collect();
        row.sort_by_key(|e| e.0);
        while let Some((lead, f)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => {
                    // row - f * p, both sorted by column
                    let mut out = Vec::with_capacity(row.len() + p.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < p.len() {
                        if j == p.len() || (i < row.len() && row[i].0 < p[j].0) {
                            out.push(row[i].clone());
                            i += 1;
                        } else if i == row.len() || p[j].0 < row[i].0 {
                            let zero = ar.lift(0);
                            out.push((p[j].0, ar.axpy(&zero, &f, &p[j].1)));
                            j += 1;
                        } else {
                            out.push((row[i].0, ar.axpy(&row[i].1, &f, &p[j].1)));
                            i += 1;
                            j += 1;
                        }
                    }
                    out.retain(|(_, x)| !ar.is_zero(x));
                    row = out;
                }
                None => {
                    let norm = row.iter().map(|(c, x)| (*c, ar.div(x, &f))).collect();
                    pivots.insert(lead, norm);
                    break;
                }
            }
        }
    }
    pivots.len()
}

pub fn rank(field: Field, rows: &[Vec<(usize, i64)>]) -> usize {
    match field {
        Field::Rational => rank_with(&Q, rows),
        Field::Prime(p) => rank_with(&Fp(p), rows),
    }
}

/// Dimensions of reduced homology, keyed by degree; only nonzero degrees are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub field: Field,
    pub reduced_betti: BTreeMap<i64, usize>,
}

impl HomologyProfile {
    pub fn get(&self, k: i64) -> usize {
        self.reduced_betti.get(&k).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.reduced_betti.is_empty()
    }

    /// Homology of a k-sphere.
    pub fn is_sphere(&self, k: i64) -> bool {
        self.reduced_betti.len() == 1 && self.get(k) == 1
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.reduced_betti.iter().map(|(k, b)| format!("H~{k}={b}")).collect();
        if parts.is_empty() {
            write!(f, "acyclic over {}", self.field)
        } else {
            write!(f, "{} over {}", parts.join(" "), self.field)
        }
    }
}

/// Reduced homology over `field`, using the augmented chain complex.
pub fn reduced_homology(k: &SimplicialComplex, field: Field) -> Result<HomologyProfile> {
    let faces = k.faces_by_dim()?;
    let mut ranks = vec![0usize; faces.len() + 1];
    for d in 1..faces.len() {
        let index: HashMap<&Vec<usize>, usize> = faces[d - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
        let rows: Vec<Vec<(usize, i64)>> = faces[d]
            .iter()
            .map(|f| {
                (0..f.len())
                    .map(|j| {
                        let mut g = f.clone();
                        g.remove(j);
                        (index[&g], if j % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        ranks[d] = rank(field, &rows);
    }
    let mut reduced_betti = BTreeMap::new();
    for d in 0..faces.len() {
        let b = faces[d].len() - ranks[d] - ranks[d + 1];
        if b > 0 {
            reduced_betti.insert(d as i64 - 1, b);
        }
    }
    Ok(HomologyProfile { field, reduced_betti })
}
