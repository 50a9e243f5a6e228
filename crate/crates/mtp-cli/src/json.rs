//! JSON forms of posets, complexes, homology and Betti tables.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use mtp_complexes::{HomologyProfile, SimplicialComplex};
use mtp_core::{Error, Point, Result};
use mtp_ideals::{monomial_string, BettiTable};
use mtp_posets::{Element, Poset};

pub fn point_strings(p: &Point) -> Vec<String> {
    p.iter().map(|x| x.to_string()).collect()
}

pub fn parse_point(s: &[String]) -> Result<Point> {
    Ok(Point(s.iter().map(|x| x.parse()).collect::<Result<_>>()?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub id: usize,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub apices: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub formal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub vertex_labels: Vec<String>,
    pub apex_labels: Vec<String>,
    pub elements: Vec<ElementJson>,
    pub hasse: Vec<[usize; 2]>,
}

impl PosetJson {
    pub fn from_poset(p: &Poset) -> PosetJson {
        let names = |ix: &Option<Vec<usize>>, labels: &[String]| {
            ix.as_ref().map(|v| v.iter().map(|&k| labels[k].clone()).collect())
        };
        let elements = p
            .elements
            .iter()
            .enumerate()
            .map(|(id, e)| ElementJson {
                id,
                name: p.name(id),
                point: e.point.as_ref().map(point_strings),
                vertices: names(&e.vertices, &p.left_labels),
                apices: names(&e.apices, &p.right_labels),
                formal: e.formal,
            })
            .collect();
        PosetJson {
            vertex_labels: p.left_labels.clone(),
            apex_labels: p.right_labels.clone(),
            elements,
            hasse: p.hasse().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// Rebuilds the poset; the order is the reflexive-transitive closure of `hasse`.
    pub fn to_poset(&self) -> Result<Poset> {
        let n = self.elements.len();
        let index = |labels: &[String], names: &Option<Vec<String>>| -> Result<Option<Vec<usize>>> {
            names
                .as_ref()
                .map(|v| {
                    v.iter()
                        .map(|s| {
                            labels.iter().position(|l| l == s).ok_or_else(|| Error::Parse(format!("unknown label {s}")))
                        })
                        .collect()
                })
                .transpose()
        };
        let mut elements = Vec::with_capacity(n);
        for (k, e) in self.elements.iter().enumerate() {
            if e.id != k {
                return Err(Error::Parse(format!("element {k} has id {}", e.id)));
            }
            elements.push(Element {
                point: e.point.as_deref().map(parse_point).transpose()?,
                vertices: index(&self.vertex_labels, &e.vertices)?,
                apices: index(&self.apex_labels, &e.apices)?,
                formal: e.formal,
            });
        }
        let mut up: Vec<FixedBitSet> = (0..n)
            .map(|a| {
                let mut s = FixedBitSet::with_capacity(n);
                s.insert(a);
                s
            })
            .collect();
        let mut succ = vec![Vec::new(); n];
        for &[a, b] in &self.hasse {
            if a >= n || b >= n {
                return Err(Error::Parse(format!("hasse edge ({a}, {b}) out of range")));
            }
            succ[a].push(b);
        }
        for a in 0..n {
            let mut stack = vec![a];
            while let Some(x) = stack.pop() {
                for &y in &succ[x] {
                    if y == a {
                        return Err(Error::Parse(format!("hasse relation has a cycle through {a}")));
                    }
                    if !up[a].put(y) {
                        stack.push(y);
                    }
                }
            }
        }
        Ok(Poset::from_up(elements, self.vertex_labels.clone(), self.apex_labels.clone(), up))
    }

    pub fn parse(text: &str) -> Result<PosetJson> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("poset: {e}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<Vec<usize>>,
}

impl ComplexJson {
    pub fn from_complex(k: &SimplicialComplex) -> ComplexJson {
        ComplexJson {
            vertices: k.vertices.clone(),
            facets: k.named_faces(),
            dim: k.dim(),
            f_vector: k.f_vector().ok(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let faces = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|s| {
                        self.vertices.iter().position(|v| v == s).ok_or_else(|| Error::Parse(format!("unknown vertex {s}")))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::new(self.vertices.clone(), faces))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyJson {
    pub field: String,
    /// Nonzero reduced Betti numbers keyed by degree.
    pub reduced_betti: BTreeMap<i64, usize>,
}

impl HomologyJson {
    pub fn from_profile(h: &HomologyProfile) -> HomologyJson {
        HomologyJson { field: h.field.to_string(), reduced_betti: h.reduced_betti.clone() }
    }

    pub fn to_profile(&self) -> Result<HomologyProfile> {
        Ok(HomologyProfile { field: self.field.parse()?, reduced_betti: self.reduced_betti.clone() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub degree: Vec<u32>,
    pub monomial: String,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub field: String,
    pub entries: Vec<BettiEntry>,
    pub totals: Vec<usize>,
}

impl BettiJson {
    pub fn from_table(t: &BettiTable) -> BettiJson {
        BettiJson {
            field: t.field.to_string(),
            entries: t
                .entries
                .iter()
                .map(|((i, u), &value)| BettiEntry { i: *i, degree: u.clone(), monomial: monomial_string(u), value })
                .collect(),
            totals: t.totals(),
        }
    }

    pub fn to_table(&self) -> Result<BettiTable> {
        Ok(BettiTable {
            field: self.field.parse()?,
            entries: self.entries.iter().map(|e| ((e.i, e.degree.clone()), e.value)).collect(),
        })
    }
}

pub fn pretty<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("serialisable");
    s.push('\n');
    s
}
