//! Instance files: generator sets, optional apex names, optional rays.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use mtp_core::{Error, Ext, GeneratorSet, Point, Result};
use mtp_ideals::MonomialIdeal;
use mtp_transform::TropicalPolyhedron;

/// A coordinate: a JSON integer or a string such as "-inf", "+inf", "3/2".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    pub fn to_ext(&self) -> Result<Ext> {
        match self {
            Entry::Int(n) => Ok(Ext::int(*n)),
            Entry::Text(s) => s.parse(),
        }
    }

    pub fn from_ext(x: &Ext) -> Entry {
        Entry::Text(x.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPoint {
    pub label: String,
    pub point: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub dim: usize,
    pub generators: Vec<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Names for facet-apices, matched by coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub apices: Option<Vec<NamedPoint>>,
    /// Rays of a general tropical polyhedron (decompose only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<Vec<Entry>>>,
}

pub fn to_point(dim: usize, row: &[Entry]) -> Result<Point> {
    let p = Point(row.iter().map(Entry::to_ext).collect::<Result<_>>()?);
    p.check_dim(dim)?;
    Ok(p)
}

pub fn from_point(p: &Point) -> Vec<Entry> {
    p.iter().map(Entry::from_ext).collect()
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<InstanceFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("instance file: {e}")))
    }

    pub fn load(path: &Path) -> Result<InstanceFile> {
        Self::parse(&read(path)?)
    }

    pub fn generator_set(&self) -> Result<GeneratorSet> {
        let pts = self.generators.iter().map(|r| to_point(self.dim, r)).collect::<Result<Vec<_>>>()?;
        match &self.labels {
            Some(l) => GeneratorSet::with_labels(self.dim, pts, l.clone()),
            None => GeneratorSet::new(self.dim, pts),
        }
    }

    pub fn apex_names(&self) -> Result<Vec<(String, Point)>> {
        self.apices
            .iter()
            .flatten()
            .map(|a| Ok((a.label.clone(), to_point(self.dim, &a.point)?)))
            .collect()
    }

    pub fn polyhedron(&self) -> Result<TropicalPolyhedron> {
        let pts = self.generators.iter().map(|r| to_point(self.dim, r)).collect::<Result<Vec<_>>>()?;
        let rays = self.rays.iter().flatten().map(|r| to_point(self.dim, r)).collect::<Result<Vec<_>>>()?;
        TropicalPolyhedron::new(self.dim, pts, rays)
    }

    pub fn from_generator_set(v: &GeneratorSet) -> InstanceFile {
        InstanceFile {
            dim: v.dim(),
            generators: v.points().iter().map(from_point).collect(),
            labels: Some(v.labels().to_vec()),
            apices: None,
            rays: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serialises")
    }
}

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// An ideal as exponent JSON ({"nvars", "generators"}), an instance file
/// (converted through the inverse Čech hull) or a plain monomial list.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let t = text.trim();
    if t.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
        if v.get("nvars").is_some() {
            return MonomialIdeal::from_json(t);
        }
        return mtp_ideals::ideal_from_polyhedron(&InstanceFile::parse(t)?.generator_set()?);
    }
    t.parse()
}
