use crate::error::{Error, Result};
use crate::point::Point;

/// Generators of a monomial tropical polyhedron M(V) = V + R^d_{>=0}.
/// The rays e^(1..d) are implicit. Points keep their user labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    dim: usize,
    points: Vec<Point>,
    labels: Vec<String>,
    minimal: bool,
}

impl GeneratorSet {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        let labels = (1..=points.len()).map(|k| format!("v{k}")).collect();
        Self::with_labels(dim, points, labels)
    }

    pub fn with_labels(dim: usize, points: Vec<Point>, labels: Vec<String>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        if labels.len() != points.len() {
            return Err(Error::Parse(format!(
                "{} labels for {} generators",
                labels.len(),
                points.len()
            )));
        }
        for (index, p) in points.iter().enumerate() {
            p.check_dim(dim)?;
            if p.has_pos_inf() {
                return Err(Error::InvalidGenerator { index, reason: "contains +inf".into() });
            }
            if !p.is_generator_kind() {
                return Err(Error::InvalidGenerator { index, reason: "all entries are -inf".into() });
            }
        }
        let minimal = survivors(&points).len() == points.len();
        Ok(GeneratorSet { dim, points, labels, minimal })
    }

    /// Shorthand for integer data; `None` is -inf.
    pub fn from_ints(rows: &[&[Option<i64>]]) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.len());
        let pts = rows
            .iter()
            .map(|r| {
                Point(
                    r.iter()
                        .map(|x| x.map_or(crate::Ext::NegInf, crate::Ext::int))
                        .collect(),
                )
            })
            .collect();
        Self::new(dim, pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, k: usize) -> &Point {
        &self.points[k]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, k: usize) -> &str {
        &self.labels[k]
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn require_minimal(&self) -> Result<()> {
        if self.minimal {
            Ok(())
        } else {
            Err(Error::NotMinimized)
        }
    }

    /// Labels of V̄ = generators followed by the rays e1..ed.
    pub fn extended_labels(&self) -> Vec<String> {
        let mut out = self.labels.clone();
        out.extend((1..=self.dim).map(|i| format!("e{i}")));
        out
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// The domination antichain: v survives iff no other generator lies below it.
    /// Among equal points the first occurrence is kept.
    pub fn minimal_generators(&self) -> Result<GeneratorSet> {
        if self.dim == 0 {
            return Err(Error::EmptyDimension);
        }
        let keep = survivors(&self.points);
        Ok(GeneratorSet {
            dim: self.dim,
            points: keep.iter().map(|&k| self.points[k].clone()).collect(),
            labels: keep.iter().map(|&k| self.labels[k].clone()).collect(),
            minimal: true,
        })
    }

    /// p ∈ M(V) iff some generator is dominated by p.
    pub fn contains(&self, p: &Point) -> Result<bool> {
        p.check_dim(self.dim)?;
        Ok(self.points.iter().any(|v| v.leq(p)))
    }

    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Result<GeneratorSet> {
        GeneratorSet::with_labels(self.dim, self.points.iter().map(f).collect(), self.labels.clone())
    }
}

fn survivors(points: &[Point]) -> Vec<usize> {
    (0..points.len())
        .filter(|&k| {
            !points.iter().enumerate().any(|(j, w)| {
                j != k && w.leq(&points[k]) && (w != &points[k] || j < k)
            })
        })
        .collect()
}
