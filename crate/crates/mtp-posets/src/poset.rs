use fixedbitset::FixedBitSet;
use mtp_core::{Error, Point, Result};

/// One element of a face poset. The coordinate point is the identity used
/// across posets; the subset labels are metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub point: Option<Point>,
    /// Indices into `Poset::left_labels` (elements of V̄).
    pub vertices: Option<Vec<usize>>,
    /// Indices into `Poset::right_labels` (facet-apices).
    pub apices: Option<Vec<usize>>,
    /// Formal extreme element added by convention rather than by the construction.
    pub formal: bool,
}

impl Element {
    pub fn at(point: Point) -> Self {
        Element { point: Some(point), vertices: None, apices: None, formal: false }
    }

    pub fn formal_at(point: Point) -> Self {
        Element { point: Some(point), vertices: None, apices: None, formal: true }
    }

    pub fn with_vertices(mut self, v: Vec<usize>) -> Self {
        self.vertices = Some(v);
        self
    }

    pub fn with_apices(mut self, a: Vec<usize>) -> Self {
        self.apices = Some(a);
        self
    }
}

#[derive(Clone, Debug)]
pub struct Poset {
    pub elements: Vec<Element>,
    pub left_labels: Vec<String>,
    pub right_labels: Vec<String>,
    /// up[a] = { b : a <= b }.
    up: Vec<FixedBitSet>,
    hasse: Vec<(usize, usize)>,
}

fn covers_from_up(up: &[FixedBitSet]) -> Vec<(usize, usize)> {
    let n = up.len();
    let mut out = Vec::new();
    for a in 0..n {
        let mut strict = up[a].clone();
        strict.set(a, false);
        let mut above = FixedBitSet::with_capacity(n);
        for c in strict.ones() {
            let mut s = up[c].clone();
            s.set(c, false);
            above.union_with(&s);
        }
        strict.difference_with(&above);
        out.extend(strict.ones().map(|b| (a, b)));
    }
    out
}

impl Poset {
    /// Builds the poset from an order relation `leq(a, b)`.
    pub fn new(
        elements: Vec<Element>,
        left_labels: Vec<String>,
        right_labels: Vec<String>,
        leq: impl Fn(&Element, &Element) -> bool,
    ) -> Self {
        let n = elements.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for a in 0..n {
            for b in 0..n {
                if a == b || leq(&elements[a], &elements[b]) {
                    up[a].insert(b);
                }
            }
        }
        Self::from_up(elements, left_labels, right_labels, up)
    }

    pub fn from_up(
        elements: Vec<Element>,
        left_labels: Vec<String>,
        right_labels: Vec<String>,
        up: Vec<FixedBitSet>,
    ) -> Self {
        let hasse = covers_from_up(&up);
        Poset { elements, left_labels, right_labels, up, hasse }
    }

    /// Componentwise order on points; a missing point is only below itself.
    pub fn by_points(elements: Vec<Element>, left: Vec<String>, right: Vec<String>) -> Self {
        Self::new(elements, left, right, |a, b| match (&a.point, &b.point) {
            (Some(p), Some(q)) => p.leq(q),
            _ => false,
        })
    }

    /// Inclusion of vertex labels.
    pub fn by_vertices(elements: Vec<Element>, left: Vec<String>, right: Vec<String>) -> Self {
        Self::new(elements, left, right, |a, b| match (&a.vertices, &b.vertices) {
            (Some(x), Some(y)) => x.iter().all(|k| y.contains(k)),
            _ => false,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn up_set(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    pub fn down_set(&self, a: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.len());
        for b in 0..self.len() {
            if self.up[b].contains(a) {
                s.insert(b);
            }
        }
        s
    }

    /// Cover pairs (a, b) with a ⋖ b.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.hasse.binary_search(&(a, b)).is_ok()
    }

    /// Least upper bound of a and b, if unique.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let mut common = self.up[a].clone();
        common.intersect_with(&self.up[b]);
        common.ones().find(|&c| common.is_subset(&self.up[c]))
    }

    /// Greatest lower bound of a and b, if unique.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let mut common = self.down_set(a);
        common.intersect_with(&self.down_set(b));
        common.ones().find(|&c| common.is_subset(&self.down_set(c)))
    }

    /// Elements covering a.
    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        self.hasse.iter().filter(|e| e.0 == a).map(|e| e.1).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| b == a || !self.leq(b, a)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| b == a || !self.leq(a, b)))
            .collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&a| self.up[a].count_ones(..) == self.len())
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq(b, a)))
    }

    pub fn atoms(&self) -> Vec<usize> {
        match self.bottom() {
            Some(z) => self.hasse.iter().filter(|e| e.0 == z).map(|e| e.1).collect(),
            None => Vec::new(),
        }
    }

    pub fn find_point(&self, p: &Point) -> Option<usize> {
        self.elements.iter().position(|e| e.point.as_ref() == Some(p))
    }

    pub fn find_vertices(&self, v: &[usize]) -> Option<usize> {
        let mut v = v.to_vec();
        v.sort_unstable();
        self.elements.iter().position(|e| e.vertices.as_deref() == Some(&v[..]))
    }

    /// Induced subposet on `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let m = keep.len();
        let elements = keep.iter().map(|&k| self.elements[k].clone()).collect();
        let up = keep
            .iter()
            .map(|&a| {
                let mut s = FixedBitSet::with_capacity(m);
                for (j, &b) in keep.iter().enumerate() {
                    if self.leq(a, b) {
                        s.insert(j);
                    }
                }
                s
            })
            .collect();
        Poset::from_up(elements, self.left_labels.clone(), self.right_labels.clone(), up)
    }

    /// Closed interval [a, b].
    pub fn interval(&self, a: usize, b: usize) -> Poset {
        let keep: Vec<usize> = (0..self.len()).filter(|&x| self.leq(a, x) && self.leq(x, b)).collect();
        self.induced(&keep)
    }

    /// A human-readable name: the vertex label if present, else the point.
    pub fn name(&self, a: usize) -> String {
        let e = &self.elements[a];
        match (&e.vertices, &e.point) {
            (Some(v), _) if v.is_empty() => "∅".into(),
            (Some(v), _) => v.iter().map(|&k| self.left_labels[k].as_str()).collect(),
            (None, Some(p)) => p.to_string(),
            (None, None) => format!("#{a}"),
        }
    }

    /// True iff there is a bottom, a top, and every pair has a least upper bound.
    /// With both extremes present this also gives all meets.
    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        if n == 0 || self.bottom().is_none() || self.top().is_none() {
            return false;
        }
        let sizes: Vec<usize> = self.up.iter().map(|u| u.count_ones(..)).collect();
        for a in 0..n {
            for b in a + 1..n {
                let mut ub = self.up[a].clone();
                ub.intersect_with(&self.up[b]);
                let least = ub.ones().max_by_key(|&x| sizes[x]).expect("top is an upper bound");
                if !ub.is_subset(&self.up[least]) {
                    return false;
                }
            }
        }
        true
    }

    /// Indices of non-formal elements.
    pub fn proper(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| !self.elements[a].formal).collect()
    }
}

/// Result of comparing P against Q through coordinate points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub subposet: bool,
    pub cover_preserving: bool,
    pub equal: bool,
}

/// Options for `poset_compare`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompareOpts {
    /// Ignore the points (-inf,...) and (+inf,...) on both sides.
    pub ignore_extremes: bool,
}

fn is_extreme(p: &Point) -> bool {
    p.iter().all(|x| x.is_neg_inf()) || p.iter().all(|x| x.is_pos_inf())
}

/// Identifies the non-formal elements of P with elements of Q by point.
pub fn poset_compare(p: &Poset, q: &Poset, opts: CompareOpts) -> Result<Comparison> {
    let usable = |s: &Poset, a: usize| {
        let e = &s.elements[a];
        !e.formal && !(opts.ignore_extremes && e.point.as_ref().is_some_and(is_extreme))
    };
    let ps: Vec<usize> = (0..p.len()).filter(|&a| usable(p, a)).collect();
    let mut map = Vec::with_capacity(ps.len());
    for &a in &ps {
        let pt = p.elements[a]
            .point
            .as_ref()
            .ok_or_else(|| Error::IdentificationFailure(format!("element {} has no point", p.name(a))))?;
        let b = (0..q.len())
            .find(|&b| q.elements[b].point.as_ref() == Some(pt) && usable(q, b))
            .ok_or_else(|| Error::IdentificationFailure(pt.to_string()))?;
        map.push(b);
    }
    let mut subposet = true;
    for (i, &a) in ps.iter().enumerate() {
        for (j, &b) in ps.iter().enumerate() {
            if p.leq(a, b) != q.leq(map[i], map[j]) {
                subposet = false;
            }
        }
    }
    let pp = p.induced(&ps);
    let cover_preserving = subposet && pp.hasse().iter().all(|&(a, b)| q.covers(map[a], map[b]));
    let qn = (0..q.len()).filter(|&b| usable(q, b)).count();
    let equal = subposet && qn == ps.len() && cover_preserving;
    Ok(Comparison { subposet, cover_preserving, equal })
}

/// A bijective order isomorphism by backtracking, matching Hasse degrees.
pub fn find_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() || p.hasse().len() != q.hasse().len() {
        return None;
    }
    let sig = |s: &Poset, a: usize| {
        (
            s.up_set(a).count_ones(..),
            s.down_set(a).count_ones(..),
            s.hasse().iter().filter(|e| e.0 == a).count(),
            s.hasse().iter().filter(|e| e.1 == a).count(),
        )
    };
    let sp: Vec<_> = (0..n).map(|a| sig(p, a)).collect();
    let sq: Vec<_> = (0..n).map(|a| sig(q, a)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| sp[a].1);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        order: &[usize],
        p: &Poset,
        q: &Poset,
        sp: &[(usize, usize, usize, usize)],
        sq: &[(usize, usize, usize, usize)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let a = order[k];
        for b in 0..q.len() {
            if used[b] || sp[a] != sq[b] {
                continue;
            }
            let ok = order[..k].iter().all(|&c| {
                p.leq(c, a) == q.leq(map[c], b) && p.leq(a, c) == q.leq(b, map[c])
            });
            if !ok {
                continue;
            }
            map[a] = b;
            used[b] = true;
            if go(k + 1, order, p, q, sp, sq, map, used) {
                return true;
            }
            used[b] = false;
            map[a] = usize::MAX;
        }
        false
    }
    if go(0, &order, p, q, &sp, &sq, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}
