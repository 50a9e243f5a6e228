use mtp_core::{Error, Ext, GeneratorSet, Point, Result};

/// Candidate scans larger than this are refused.
pub const CANDIDATE_BUDGET: u128 = 20_000_000;

/// a is a principal apex of M(V) iff
/// (1) no generator is strictly below a, and
/// (2) every finite coordinate a_i is pinned by a generator v with v_i = a_i and v_k < a_k for k != i.
pub fn is_principal_apex(v: &GeneratorSet, a: &Point) -> bool {
    if v.points().iter().any(|w| w.lt_all(a)) {
        return false;
    }
    (0..a.dim()).all(|i| a[i].is_pos_inf() || v.points().iter().any(|w| pins(w, a, i)))
}

/// w_i = a_i and w_k < a_k for every k != i.
pub fn pins(w: &Point, a: &Point, i: usize) -> bool {
    w[i] == a[i] && (0..a.dim()).all(|k| k == i || w[k] < a[k])
}

/// All principal apices, sorted.
pub fn principal_apices(v: &GeneratorSet) -> Result<Vec<Point>> {
    v.require_minimal()?;
    let d = v.dim();
    let cands: Vec<Vec<Ext>> = (0..d)
        .map(|i| {
            let mut c: Vec<Ext> = v.points().iter().map(|p| p[i].clone()).filter(Ext::is_finite).collect();
            c.sort();
            c.dedup();
            c.push(Ext::PosInf);
            c
        })
        .collect();
    let total = cands.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if total > CANDIDATE_BUDGET {
        return Err(Error::TooLarge(format!("{total} apex candidates")));
    }
    let mut out = Vec::new();
    if v.is_empty() {
        return Ok(out);
    }
    let mut idx = vec![0usize; d];
    loop {
        let a = Point(idx.iter().zip(&cands).map(|(&k, c)| c[k].clone()).collect());
        if is_principal_apex(v, &a) {
            out.push(a);
        }
        let mut k = 0;
        loop {
            if k == d {
                out.sort();
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < cands[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Principal apices, boundary apex markers and the far-apex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexSet {
    pub dim: usize,
    pub principal: Vec<Point>,
    pub labels: Vec<String>,
    /// Axes (0-based) carrying a boundary apex.
    pub boundary: Vec<usize>,
    pub boundary_labels: Vec<String>,
    pub far_label: String,
}

impl ApexSet {
    pub fn num_coord(&self) -> usize {
        self.principal.len() + self.boundary.len()
    }

    /// Principal, then boundary, then far.
    pub fn len(&self) -> usize {
        self.num_coord() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn far_index(&self) -> usize {
        self.num_coord()
    }

    /// The coordinate point of right node r, or None for the far-apex.
    pub fn point(&self, r: usize) -> Option<Point> {
        let p = self.principal.len();
        if r < p {
            Some(self.principal[r].clone())
        } else if r < self.num_coord() {
            Some(Point::boundary_apex(self.dim, self.boundary[r - p]))
        } else {
            None
        }
    }

    pub fn all_labels(&self) -> Vec<String> {
        let mut out = self.labels.clone();
        out.extend(self.boundary_labels.iter().cloned());
        out.push(self.far_label.clone());
        out
    }

    pub fn index_of_label(&self, l: &str) -> Option<usize> {
        self.all_labels().iter().position(|x| x == l)
    }

    pub fn index_of_point(&self, q: &Point) -> Option<usize> {
        (0..self.num_coord()).find(|&r| self.point(r).as_ref() == Some(q))
    }

    /// Replace default labels by user labels, matched by coordinates.
    pub fn relabel(&mut self, names: &[(String, Point)]) -> Result<()> {
        for (name, q) in names {
            let r = self.index_of_point(q).ok_or_else(|| {
                Error::IdentificationFailure(format!("{name} = {q} is not a facet-apex"))
            })?;
            if r < self.principal.len() {
                self.labels[r] = name.clone();
            } else {
                self.boundary_labels[r - self.principal.len()] = name.clone();
            }
        }
        Ok(())
    }
}

pub fn apex_set(v: &GeneratorSet) -> Result<ApexSet> {
    let principal = principal_apices(v)?;
    let labels = (1..=principal.len()).map(|k| format!("a{k}")).collect();
    let boundary: Vec<usize> = (0..v.dim())
        .filter(|&i| v.points().iter().any(|w| w[i].is_neg_inf()))
        .collect();
    let boundary_labels = boundary.iter().map(|i| format!("B{}", i + 1)).collect();
    Ok(ApexSet {
        dim: v.dim(),
        principal,
        labels,
        boundary,
        boundary_labels,
        far_label: "inf".into(),
    })
}
