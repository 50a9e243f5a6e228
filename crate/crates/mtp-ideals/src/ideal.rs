use std::fmt;
use std::str::FromStr;

use mtp_core::{Error, Ext, GeneratorSet, Point, Result};
use serde::{Deserialize, Serialize};

/// Exponent vector of a monomial.
pub type Exponent = Vec<u32>;

/// A nonzero proper monomial ideal in d variables, kept minimally generated.
/// Equality ignores generator order.
#[derive(Clone, Debug, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    pub nvars: usize,
    pub generators: Vec<Exponent>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        let mut a = self.generators.clone();
        let mut b = other.generators.clone();
        a.sort();
        b.sort();
        self.nvars == other.nvars && a == b
    }
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// a_i < c_i or a_i = c_i = 0 in every coordinate.
pub fn strictly_divides(a: &[u32], c: &[u32]) -> bool {
    a.iter().zip(c).all(|(x, y)| x < y || (*x == 0 && *y == 0))
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

impl MonomialIdeal {
    /// Drops duplicates and non-minimal generators; keeps first-seen order otherwise.
    pub fn new(nvars: usize, generators: Vec<Exponent>) -> Result<MonomialIdeal> {
        if nvars == 0 {
            return Err(Error::EmptyDimension);
        }
        if generators.is_empty() {
            return Err(Error::Parse("the zero ideal has no generators".into()));
        }
        for (k, g) in generators.iter().enumerate() {
            if g.len() != nvars {
                return Err(Error::DimMismatch { expected: nvars, found: g.len() });
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::InvalidGenerator { index: k, reason: "1 generates the whole ring".into() });
            }
        }
        let mut kept: Vec<Exponent> = Vec::new();
        for (k, g) in generators.iter().enumerate() {
            let dominated = generators
                .iter()
                .enumerate()
                .any(|(j, h)| j != k && divides(h, g) && (h != g || j < k));
            if !dominated {
                kept.push(g.clone());
            }
        }
        Ok(MonomialIdeal { nvars, generators: kept })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    pub fn lcm_all(&self) -> Exponent {
        self.generators.iter().fold(vec![0; self.nvars], |acc, g| lcm(&acc, g))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serialises")
    }

    pub fn from_json(s: &str) -> Result<MonomialIdeal> {
        let raw: MonomialIdeal = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        MonomialIdeal::new(raw.nvars, raw.generators)
    }

    /// Parses `x1^3*x2^2, x1*x3` (or x, y, z, w for the first four variables).
    /// Without `nvars` the largest variable index is used.
    pub fn parse(s: &str, nvars: Option<usize>) -> Result<MonomialIdeal> {
        let mut mons: Vec<Vec<(usize, u32)>> = Vec::new();
        for term in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let mut m = Vec::new();
            for f in term.split('*').map(str::trim) {
                if f == "1" {
                    continue;
                }
                let (var, exp) = match f.split_once('^') {
                    Some((v, e)) => (v.trim(), e.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{f}: {e}")))?),
                    None => (f, 1),
                };
                m.push((var_index(var)?, exp));
            }
            mons.push(m);
        }
        let d = nvars.unwrap_or_else(|| mons.iter().flatten().map(|(i, _)| i + 1).max().unwrap_or(0));
        let mut gens = Vec::new();
        for m in mons {
            let mut g = vec![0u32; d];
            for (i, e) in m {
                if i >= d {
                    return Err(Error::DimMismatch { expected: d, found: i + 1 });
                }
                g[i] += e;
            }
            gens.push(g);
        }
        MonomialIdeal::new(d, gens)
    }
}

fn var_index(v: &str) -> Result<usize> {
    match v {
        "x" => return Ok(0),
        "y" => return Ok(1),
        "z" => return Ok(2),
        "w" => return Ok(3),
        _ => {}
    }
    v.strip_prefix('x')
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .map(|n| n - 1)
        .ok_or_else(|| Error::Parse(format!("unknown variable {v:?}")))
}

pub fn monomial_string(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{x}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| monomial_string(g)).collect();
        write!(f, "{}", gens.join(", "))
    }
}

impl FromStr for MonomialIdeal {
    type Err = Error;
    fn from_str(s: &str) -> Result<MonomialIdeal> {
        MonomialIdeal::parse(s, None)
    }
}

/// ũ: zero exponents become -inf.
pub fn exponent_to_point(u: &[u32]) -> Point {
    Point(u.iter().map(|&x| if x == 0 { Ext::NegInf } else { Ext::int(x as i64) }).collect())
}

/// Inverse of `exponent_to_point` on points with entries in Z_{>0} ∪ {-inf}.
pub fn point_to_exponent(p: &Point) -> Result<Exponent> {
    p.iter()
        .map(|x| match x {
            Ext::NegInf => Ok(0),
            Ext::Finite(r) if !r.is_integer() => Err(Error::NotIntegral(x.to_string())),
            Ext::Finite(r) if *r <= num_zero() => Err(Error::NotPositive(x.to_string())),
            Ext::Finite(r) => u32::try_from(r.to_integer()).map_err(|_| Error::TooLarge(format!("exponent {x}"))),
            Ext::PosInf => Err(Error::NotIntegral(x.to_string())),
        })
        .collect()
}

fn num_zero() -> mtp_core::Rational {
    mtp_core::Rational::from_integer(0.into())
}

/// V_I, with generators labelled by their monomials.
pub fn polyhedron_from_ideal(i: &MonomialIdeal) -> GeneratorSet {
    let pts = i.generators.iter().map(|g| exponent_to_point(g)).collect();
    let labels = i.generators.iter().map(|g| monomial_string(g)).collect();
    GeneratorSet::with_labels(i.nvars, pts, labels).expect("nonzero exponents give valid generators")
}

pub fn ideal_from_polyhedron(v: &GeneratorSet) -> Result<MonomialIdeal> {
    let gens = v.points().iter().map(point_to_exponent).collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(v.dim(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let i: MonomialIdeal = "x1^3*x2^2*x3^2, x1^4*x2*x3".parse().unwrap();
        assert_eq!(i.generators, vec![vec![3, 2, 2], vec![4, 1, 1]]);
        assert_eq!(i.to_string(), "x1^3*x2^2*x3^2, x1^4*x2*x3");
        let j: MonomialIdeal = "x^2, y^3".parse().unwrap();
        assert_eq!(j.generators, vec![vec![2, 0], vec![0, 3]]);
        assert!("x1^a".parse::<MonomialIdeal>().is_err());
        assert!("1".parse::<MonomialIdeal>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let i = MonomialIdeal::new(2, vec![vec![1, 1], vec![2, 0]]).unwrap();
        assert_eq!(MonomialIdeal::from_json(&i.to_json()).unwrap(), i);
    }

    #[test]
    fn minimisation() {
        let i = MonomialIdeal::new(2, vec![vec![1, 1], vec![2, 1], vec![1, 1], vec![0, 3]]).unwrap();
        assert_eq!(i.generators, vec![vec![1, 1], vec![0, 3]]);
    }

    #[test]
    fn coordinate_ideal_polyhedron() {
        let i: MonomialIdeal = "x, y".parse().unwrap();
        let v = polyhedron_from_ideal(&i);
        assert_eq!(v.points(), &["1,-inf".parse().unwrap(), "-inf,1".parse().unwrap()]);
    }

    #[test]
    fn polyhedron_to_ideal() {
        let v = GeneratorSet::new(2, vec!["1,1".parse().unwrap(), "2,-inf".parse().unwrap()]).unwrap();
        let i = ideal_from_polyhedron(&v).unwrap();
        assert_eq!(i.generators, vec![vec![1, 1], vec![2, 0]]);
        let x = GeneratorSet::new(2, vec!["1,-inf".parse().unwrap()]).unwrap();
        assert_eq!(ideal_from_polyhedron(&x).unwrap().generators, vec![vec![1, 0]]);
        let bad = GeneratorSet::new(2, vec!["0,1".parse().unwrap()]).unwrap();
        let e = ideal_from_polyhedron(&bad).unwrap_err();
        assert_eq!(e.code(), "NotPositive");
        assert!(e.to_string().contains("isomorphic resolutions"));
        let frac = GeneratorSet::new(2, vec!["1/2,1".parse().unwrap()]).unwrap();
        assert_eq!(ideal_from_polyhedron(&frac).unwrap_err().code(), "NotIntegral");
    }
}
