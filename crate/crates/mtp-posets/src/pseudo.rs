//! Pseudovertex poset by integer grid scan.
//!
//! Finite pseudovertices of integer data are searched in the box
//! [min - d·R, max + d·R]^d, R the range of the finite coordinates. Points
//! with infinite coordinates are found by scanning the same box on the finite
//! axes of every ±inf pattern.
//!
//! Along a -inf axis the covector rule no longer pins the finite coordinates,
//! so a connected graph can persist on a whole segment. A point is kept only
//! if a half-step along each finite axis changes its covector graph.

use mtp_core::covector::covector_hom;
use mtp_core::sector::Sym;
use mtp_core::{Error, Ext, GeneratorSet, Point, Result};

use crate::poset::{Element, Poset};

#[derive(Clone, Copy, Debug)]
pub struct GridOptions {
    /// Largest number of cells scanned, over all patterns.
    pub budget: u128,
    /// Overrides the padding d·R on each side of the box.
    pub pad: Option<i64>,
}

impl Default for GridOptions {
    fn default() -> Self {
        GridOptions { budget: 5_000_000, pad: None }
    }
}

fn integer_data(v: &GeneratorSet) -> Result<Vec<Vec<Option<i64>>>> {
    v.points()
        .iter()
        .map(|p| {
            p.iter()
                .map(|x| match x {
                    Ext::NegInf => Ok(None),
                    Ext::Finite(r) if r.is_integer() => {
                        i64::try_from(r.to_integer()).map(Some).map_err(|_| Error::TooLarge(format!("coordinate {x}")))
                    }
                    _ => Err(Error::NonIntegerInput(format!(
                        "coordinate {x} of {p}; multiply all data by a common denominator"
                    ))),
                })
                .collect()
        })
        .collect()
}

/// The scan box per axis, as (low, high).
pub fn grid_box(v: &GeneratorSet, opts: &GridOptions) -> Result<(i64, i64)> {
    let data = integer_data(v)?;
    let vals: Vec<i64> = data.iter().flatten().flatten().copied().collect();
    let lo = *vals.iter().min().unwrap_or(&0);
    let hi = *vals.iter().max().unwrap_or(&0);
    let pad = opts.pad.unwrap_or(v.dim() as i64 * (hi - lo));
    Ok((lo - pad, hi + pad))
}

pub fn grid_cells(v: &GeneratorSet, opts: &GridOptions) -> Result<u128> {
    let (lo, hi) = grid_box(v, opts)?;
    let width = (hi - lo + 1) as u128 + 2;
    Ok((0..v.dim()).fold(1u128, |acc, _| acc.saturating_mul(width)))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Fin,
    Neg,
    Pos,
}

/// All pseudovertices found by the grid scan, plus the formal bottom.
pub fn pseudovertex_points(v: &GeneratorSet, opts: &GridOptions) -> Result<Vec<Point>> {
    let data = integer_data(v)?;
    let d = v.dim();
    let cells = grid_cells(v, opts)?;
    if cells > opts.budget {
        return Err(Error::GridBudgetExceeded { cells, budget: opts.budget });
    }
    let (lo, hi) = grid_box(v, opts)?;
    // doubled data, so half-steps stay integral
    let hom: Vec<Vec<Sym<i64>>> = data
        .iter()
        .map(|r| std::iter::once(Sym::zero()).chain(r.iter().map(|x| x.map_or(Sym::NegInf, |a| Sym::fin(2 * a)))).collect())
        .collect();
    let mut out = Vec::new();
    let npat = 3usize.pow(d as u32);
    for pat in 0..npat {
        let slots: Vec<Slot> = (0..d)
            .map(|i| match pat / 3usize.pow(i as u32) % 3 {
                0 => Slot::Fin,
                1 => Slot::Neg,
                _ => Slot::Pos,
            })
            .collect();
        if slots.iter().all(|s| *s == Slot::Neg) {
            continue;
        }
        let fin: Vec<usize> = (0..d).filter(|&i| slots[i] == Slot::Fin).collect();
        let any_pos = slots.contains(&Slot::Pos);
        let mut cur = vec![lo; fin.len()];
        loop {
            let mut z: Vec<Sym<i64>> = vec![Sym::zero(); d + 1];
            for i in 0..d {
                z[i + 1] = match slots[i] {
                    Slot::Neg => Sym::NegInf,
                    Slot::Pos => Sym::big(),
                    Slot::Fin => Sym::fin(0),
                };
            }
            for (k, &i) in fin.iter().enumerate() {
                z[i + 1] = Sym::fin(2 * cur[k]);
            }
            let below = any_pos
                || data.iter().any(|r| {
                    (0..d).all(|i| match (r[i], &z[i + 1]) {
                        (None, _) => true,
                        (Some(_), Sym::NegInf) => false,
                        (Some(a), Sym::Val(m, b)) => *m > 0 || 2 * a <= *b,
                    })
                });
            if below && is_zero_cell(&hom, &z, &fin) {
                out.push(Point(
                    (0..d)
                        .map(|i| match &z[i + 1] {
                            Sym::NegInf => Ext::NegInf,
                            Sym::Val(0, b) => Ext::int(*b / 2),
                            Sym::Val(_, _) => Ext::PosInf,
                        })
                        .collect(),
                ));
            }
            let mut k = 0;
            loop {
                if k == fin.len() {
                    break;
                }
                cur[k] += 1;
                if cur[k] <= hi {
                    break;
                }
                cur[k] = lo;
                k += 1;
            }
            if k == fin.len() {
                break;
            }
        }
    }
    out.push(Point::neg_inf(d));
    out.sort();
    Ok(out)
}

fn is_zero_cell(hom: &[Vec<Sym<i64>>], z: &[Sym<i64>], fin: &[usize]) -> bool {
    let g = covector_hom(hom, z);
    if !g.is_connected() {
        return false;
    }
    fin.iter().all(|&i| {
        [-1, 1].iter().all(|&t| {
            let mut y = z.to_vec();
            if let Sym::Val(_, b) = &mut y[i + 1] {
                *b += t;
            }
            covector_hom(hom, &y) != g
        })
    })
}

pub fn pseudovertex_poset(v: &GeneratorSet, opts: &GridOptions) -> Result<Poset> {
    let pts = pseudovertex_points(v, opts)?;
    let elements = pts
        .into_iter()
        .map(|p| {
            if p.iter().all(Ext::is_neg_inf) {
                Element::formal_at(p)
            } else {
                Element::at(p)
            }
        })
        .collect();
    Ok(Poset::by_points(elements, v.extended_labels(), vec![]))
}
