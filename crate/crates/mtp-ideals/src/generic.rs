//! Genericity notions for generator sets and monomial ideals.

use std::collections::HashSet;

use mtp_core::{Error, Ext, GeneratorSet, Rational, Result};

use crate::ideal::{polyhedron_from_ideal, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genericity {
    StronglyGeneric,
    Generic,
    TropicallyGeneric,
}

/// Square minors scanned by the tropical test are refused above this count.
pub const MINOR_BUDGET: u128 = 2_000_000;

/// No two generators share a finite value on the same axis.
pub fn is_strongly_generic(v: &GeneratorSet) -> bool {
    (0..v.dim()).all(|i| {
        let mut seen = HashSet::new();
        v.points().iter().filter(|p| p[i].is_finite()).all(|p| seen.insert(p[i].clone()))
    })
}

/// Whenever two generators share a finite value on some axis, a third one lies
/// strictly below their max (or matches it at -inf).
pub fn is_generic(v: &GeneratorSet) -> bool {
    let pts = v.points();
    let n = pts.len();
    for a in 0..n {
        for b in a + 1..n {
            let shared = (0..v.dim()).any(|i| pts[a][i].is_finite() && pts[a][i] == pts[b][i]);
            if !shared {
                continue;
            }
            let m = pts[a].join(&pts[b]);
            let below = (0..n).filter(|&c| c != a && c != b).any(|c| {
                (0..v.dim()).all(|i| pts[c][i] < m[i] || (pts[c][i].is_neg_inf() && m[i].is_neg_inf()))
            });
            if !below {
                return false;
            }
        }
    }
    true
}

/// Max over permutations of the diagonal sums of the square submatrix, and
/// whether it is attained at least twice.
fn tropical_singular(entries: &[Vec<Ext>]) -> bool {
    let k = entries.len();
    let mut best: Option<Ext> = None;
    let mut count = 0;
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut s = Ext::Finite(Rational::from_integer(0.into()));
        for (r, &c) in perm.iter().enumerate() {
            s = s.tmul(&entries[r][c]).expect("generator entries are never +inf");
        }
        match &best {
            Some(b) if s < *b => {}
            Some(b) if s == *b => count += 1,
            _ => {
                best = Some(s);
                count = 1;
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    count >= 2
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn binom(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128)
}

/// The d x n matrix of generators has no tropically singular square minor.
pub fn is_tropically_generic(v: &GeneratorSet) -> Result<bool> {
    let (d, n) = (v.dim(), v.len());
    let work: u128 = (2..=d.min(n)).map(|k| binom(d, k) * binom(n, k) * (1..=k as u128).product::<u128>()).sum();
    if work > MINOR_BUDGET {
        return Err(Error::TooLarge(format!("{work} permutation terms in the minor scan")));
    }
    for k in 2..=d.min(n) {
        for rows in subsets(d, k) {
            for cols in subsets(n, k) {
                let m: Vec<Vec<Ext>> =
                    rows.iter().map(|&r| cols.iter().map(|&c| v.point(c)[r].clone()).collect()).collect();
                if tropical_singular(&m) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn genericity(v: &GeneratorSet, kind: Genericity) -> Result<bool> {
    match kind {
        Genericity::StronglyGeneric => Ok(is_strongly_generic(v)),
        Genericity::Generic => Ok(is_generic(v)),
        Genericity::TropicallyGeneric => is_tropically_generic(v),
    }
}

pub fn ideal_genericity(i: &MonomialIdeal, kind: Genericity) -> Result<bool> {
    genericity(&polyhedron_from_ideal(i), kind)
}
