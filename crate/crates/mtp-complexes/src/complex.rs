use std::collections::HashSet;
use std::fmt;

use mtp_core::{Error, Result};

/// Refuse to list more faces than this.
pub const FACE_BUDGET: u128 = 4_000_000;

/// A finite abstract simplicial complex given by its maximal faces.
/// No maximal faces is the void complex; a single empty maximal face is {∅}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertices: Vec<String>,
    pub maximal_faces: Vec<Vec<usize>>,
}

fn is_sub(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

impl SimplicialComplex {
    /// Reduces `faces` to an inclusion antichain.
    pub fn new(vertices: Vec<String>, faces: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut fs: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        fs.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        fs.dedup();
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for f in fs {
            if !kept.iter().any(|g| is_sub(&f, g)) {
                kept.push(f);
            }
        }
        kept.sort();
        SimplicialComplex { vertices, maximal_faces: kept }
    }

    pub fn void(vertices: Vec<String>) -> Self {
        SimplicialComplex { vertices, maximal_faces: vec![] }
    }

    /// The full simplex on the given vertices.
    pub fn simplex(vertices: Vec<String>) -> Self {
        let all = (0..vertices.len()).collect();
        SimplicialComplex::new(vertices, [all])
    }

    pub fn is_void(&self) -> bool {
        self.maximal_faces.is_empty()
    }

    /// None for the void complex, -1 for {∅}.
    pub fn dim(&self) -> Option<i64> {
        self.maximal_faces.iter().map(|f| f.len() as i64 - 1).max()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.maximal_faces.iter().any(|g| is_sub(&f, g))
    }

    /// Subcomplex of faces using only vertices passing `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Self {
        let fs = self.maximal_faces.iter().map(|f| f.iter().copied().filter(|&x| keep(x)).collect());
        SimplicialComplex::new(self.vertices.clone(), fs)
    }

    /// All faces grouped by dimension; entry k holds the (k-1)-faces, so
    /// entry 0 is [∅] unless the complex is void.
    pub fn faces_by_dim(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        let bound: u128 = self.maximal_faces.iter().map(|f| 1u128 << f.len().min(100)).sum();
        if bound > FACE_BUDGET {
            return Err(Error::TooLarge(format!("complex may have up to {bound} faces")));
        }
        let Some(top) = self.dim() else { return Ok(vec![]) };
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new(); (top + 2) as usize];
        for f in &self.maximal_faces {
            for mask in 0u64..1 << f.len() {
                let s: Vec<usize> = (0..f.len()).filter(|&k| mask >> k & 1 == 1).map(|k| f[k]).collect();
                if seen.insert(s.clone()) {
                    out[s.len()].push(s);
                }
            }
        }
        for v in &mut out {
            v.sort();
        }
        Ok(out)
    }

    /// Number of faces per dimension, starting at dimension -1.
    pub fn f_vector(&self) -> Result<Vec<usize>> {
        Ok(self.faces_by_dim()?.iter().map(Vec::len).collect())
    }

    pub fn named_faces(&self) -> Vec<Vec<String>> {
        self.maximal_faces
            .iter()
            .map(|f| f.iter().map(|&x| self.vertices[x].clone()).collect())
            .collect()
    }

    /// Same complex up to relabelling vertices by name.
    pub fn same_faces(&self, other: &SimplicialComplex) -> bool {
        let key = |c: &SimplicialComplex| {
            let mut fs: Vec<Vec<String>> = c
                .named_faces()
                .into_iter()
                .map(|mut f| {
                    f.sort();
                    f
                })
                .collect();
            fs.sort();
            fs
        };
        key(self) == key(other)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let faces: Vec<String> = self.named_faces().iter().map(|s| format!("{{{}}}", s.join(","))).collect();
        write!(f, "[{}]", faces.join(", "))
    }
}
