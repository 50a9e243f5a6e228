//! Per-axis rank encoding of coordinates.
//!
//! Rank 0 is -inf, ranks 1..=m are the sorted distinct finite values of the
//! axis, rank m+1 is +inf. Joins and meets commute with the encoding.

use crate::ext::{Ext, Rational};
use crate::point::Point;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSpace {
    axes: Vec<Vec<Rational>>,
}

pub type Ranks = Vec<u16>;

impl RankSpace {
    pub fn from_points<'a>(d: usize, pts: impl IntoIterator<Item = &'a Point>) -> Self {
        let mut axes = vec![Vec::new(); d];
        for p in pts {
            for (i, x) in p.iter().enumerate() {
                if let Ext::Finite(r) = x {
                    axes[i].push(r.clone());
                }
            }
        }
        for a in &mut axes {
            a.sort();
            a.dedup();
        }
        RankSpace { axes }
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn top(&self, axis: usize) -> u16 {
        self.axes[axis].len() as u16 + 1
    }

    pub fn values(&self, axis: usize) -> &[Rational] {
        &self.axes[axis]
    }

    /// Panics if a finite coordinate is not among the recorded values.
    pub fn encode(&self, p: &Point) -> Ranks {
        p.iter()
            .enumerate()
            .map(|(i, x)| match x {
                Ext::NegInf => 0,
                Ext::PosInf => self.top(i),
                Ext::Finite(r) => {
                    let k = self.axes[i].binary_search(r).expect("value outside rank space");
                    k as u16 + 1
                }
            })
            .collect()
    }

    pub fn decode(&self, r: &[u16]) -> Point {
        Point(
            r.iter()
                .enumerate()
                .map(|(i, &k)| {
                    if k == 0 {
                        Ext::NegInf
                    } else if k == self.top(i) {
                        Ext::PosInf
                    } else {
                        Ext::Finite(self.axes[i][k as usize - 1].clone())
                    }
                })
                .collect(),
        )
    }
}

pub fn rank_join(a: &[u16], b: &[u16]) -> Ranks {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn rank_meet(a: &[u16], b: &[u16]) -> Ranks {
    a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
}

pub fn rank_leq(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}
