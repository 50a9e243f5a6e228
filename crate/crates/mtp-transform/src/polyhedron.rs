//! General tropical polyhedra tconv(V) ⊕ tcone(W) and their monomial decomposition.

use mtp_core::sector::{hom_point, hom_ray, hom_sector, Sym};
use mtp_core::{Error, Ext, GeneratorSet, Point, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalPolyhedron {
    pub dim: usize,
    pub points: Vec<Point>,
    pub rays: Vec<Point>,
}

impl TropicalPolyhedron {
    pub fn new(dim: usize, points: Vec<Point>, rays: Vec<Point>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        for p in points.iter().chain(&rays) {
            p.check_dim(dim)?;
            if p.has_pos_inf() {
                return Err(Error::Parse(format!("generator {p} has a +inf entry")));
            }
        }
        Ok(TropicalPolyhedron { dim, points, rays })
    }

    /// M(V) = tconv(V) ⊕ tcone(e^(1), ..., e^(d)).
    pub fn monomial(v: &GeneratorSet) -> Self {
        let rays = (0..v.dim()).map(|i| Point::unit(v.dim(), i)).collect();
        TropicalPolyhedron { dim: v.dim(), points: v.points().to_vec(), rays }
    }

    fn homogenised(&self) -> Vec<Vec<Sym<Rational>>> {
        self.points.iter().map(hom_point).chain(self.rays.iter().map(hom_ray)).collect()
    }
}

/// The i-th monomial polyhedron: for i = 0 all units join the rays; for i ≥ 1
/// the point (-inf, ..., -inf) joins the points and every unit except e^(i)
/// joins the rays.
pub fn ith_monomial_polyhedron(p: &TropicalPolyhedron, i: usize) -> Result<TropicalPolyhedron> {
    let d = p.dim;
    if i > d {
        return Err(Error::DimMismatch { expected: d, found: i });
    }
    let mut points = p.points.clone();
    let mut rays = p.rays.clone();
    if i > 0 {
        points.push(Point::neg_inf(d));
    }
    for k in 1..=d {
        if k != i {
            rays.push(Point::unit(d, k - 1));
        }
    }
    Ok(TropicalPolyhedron { dim: d, points, rays })
}

/// Tropical Farkas on the homogenisation: (0, x) lies in the cone iff for every
/// node i in 0..=d some homogenised generator has it in its i-th sector.
pub fn membership(p: &TropicalPolyhedron, x: &Point) -> Result<bool> {
    x.check_dim(p.dim)?;
    let z = hom_point(x);
    let gens = p.homogenised();
    Ok((0..=p.dim).all(|i| gens.iter().any(|u| hom_sector(u, &z, i))))
}

/// (0, x) lies in the union of the i-th sectors of the homogenised generators.
pub fn in_sector_union(p: &TropicalPolyhedron, x: &Point, i: usize) -> Result<bool> {
    x.check_dim(p.dim)?;
    let z = hom_point(x);
    Ok(p.homogenised().iter().any(|u| hom_sector(u, &z, i)))
}

/// Checks P = ∩_i M_i(P) on the given samples, with membership in each M_i(P)
/// taken as membership in the union of i-th sectors.
pub fn decomposition_check(p: &TropicalPolyhedron, samples: &[Point]) -> Result<bool> {
    for x in samples {
        let whole = membership(p, x)?;
        let mut parts = true;
        for i in 0..=p.dim {
            parts &= in_sector_union(p, x, i)?;
        }
        if whole != parts {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The integer box [min - 2, max + 2]^d around the finite generator entries,
/// with -inf added as a coordinate value, plus the points of P.
pub fn sample_grid(p: &TropicalPolyhedron) -> Vec<Point> {
    let vals: Vec<i64> = p
        .points
        .iter()
        .chain(&p.rays)
        .flat_map(|q| q.iter().filter_map(|x| x.finite()).map(|r| r.floor().to_integer().try_into().unwrap_or(0)))
        .collect();
    let lo = vals.iter().min().copied().unwrap_or(0) - 2;
    let hi = vals.iter().max().copied().unwrap_or(0) + 2;
    let axis: Vec<Ext> = std::iter::once(Ext::NegInf).chain((lo..=hi).map(Ext::int)).collect();
    let mut out: Vec<Point> = vec![Point(vec![])];
    for _ in 0..p.dim {
        out = out
            .into_iter()
            .flat_map(|q| {
                axis.iter().map(move |x| {
                    let mut c = q.0.clone();
                    c.push(x.clone());
                    Point(c)
                })
            })
            .collect();
    }
    out.extend(p.points.iter().cloned());
    out
}
