//! Deformations of generator sets and strong generification.

use num::{BigInt, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mtp_complexes::facet_complex;
use mtp_core::{Error, GeneratorSet, Point, Rational, Result};
use mtp_facets::{principal_apices, point_incident};

use crate::pattern::{apex_from_pattern, order_pattern, pattern_type};

/// One perturbation vector per generator.
pub type Perturbation = Vec<Vec<Rational>>;

fn check_shape(v: &GeneratorSet, eps: &Perturbation) -> Result<()> {
    if eps.len() != v.len() {
        return Err(Error::DimMismatch { expected: v.len(), found: eps.len() });
    }
    for e in eps {
        if e.len() != v.dim() {
            return Err(Error::DimMismatch { expected: v.dim(), found: e.len() });
        }
    }
    Ok(())
}

/// v^(j) + ε^(j); -inf entries stay -inf.
pub fn apply_deformation(v: &GeneratorSet, eps: &Perturbation) -> Result<GeneratorSet> {
    check_shape(v, eps)?;
    let pts = v
        .points()
        .iter()
        .zip(eps)
        .map(|(p, e)| Point(p.iter().zip(e).map(|(x, t)| x.shift(t)).collect()))
        .collect();
    GeneratorSet::with_labels(v.dim(), pts, v.labels().to_vec())
}

/// Every strict inequality between generator coordinates on an axis survives the shift.
pub fn is_valid_deformation(v: &GeneratorSet, eps: &Perturbation) -> Result<bool> {
    check_shape(v, eps)?;
    let n = v.len();
    for i in 0..v.dim() {
        for j in 0..n {
            for k in 0..n {
                let (a, b) = (&v.point(j)[i], &v.point(k)[i]);
                if a < b && a.shift(&eps[j][i]) >= b.shift(&eps[k][i]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Smallest positive difference between finite values on each axis (1 if none).
fn axis_gaps(v: &GeneratorSet) -> Vec<Rational> {
    (0..v.dim())
        .map(|i| {
            let mut vals: Vec<&Rational> = v.points().iter().filter_map(|p| p[i].finite()).collect();
            vals.sort();
            vals.dedup();
            vals.windows(2).map(|w| w[1] - w[0]).min().unwrap_or_else(|| Rational::from_integer(BigInt::from(1)))
        })
        .collect()
}

/// Seeded strong generification. Members of each finite tie block on axis i
/// receive distinct shifts g_i·r/(n·d+1), r a shuffled 0..block size and g_i the
/// smallest gap on the axis, so strict orders survive and ties break. Entries
/// outside tie blocks are not moved.
pub fn strong_generification(v: &GeneratorSet, seed: u64) -> Result<(GeneratorSet, Perturbation)> {
    let (n, d) = (v.len(), v.dim());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gaps = axis_gaps(v);
    let denom = Rational::from_integer(BigInt::from(n * d + 1));
    let mut eps = vec![vec![Rational::zero(); d]; n];
    let pattern = order_pattern(v);
    for i in 0..d {
        for block in &pattern.axes[i] {
            if block.len() < 2 || !v.point(block[0])[i].is_finite() {
                continue;
            }
            let mut r: Vec<usize> = (0..block.len()).collect();
            r.shuffle(&mut rng);
            for (&j, &rj) in block.iter().zip(&r) {
                eps[j][i] = &gaps[i] * Rational::from_integer(BigInt::from(rj)) / &denom;
            }
        }
    }
    Ok((apply_deformation(v, &eps)?, eps))
}

/// Checks the facet complex of V_ε against that of V, identifying generator j
/// with generator j. For each principal apex b of V_ε the apex a read from its
/// pattern type on V must be valid for M(V), and every element of V̄ incident
/// with b must be incident with a. Finally each maximal face of F(V_ε) must lie
/// in a maximal face of F(V).
pub fn deformation_subcomplex_check(v: &GeneratorSet, eps: &Perturbation) -> Result<bool> {
    if !is_valid_deformation(v, eps)? {
        return Ok(false);
    }
    let w = apply_deformation(v, eps)?;
    for b in principal_apices(&w)? {
        let a = apex_from_pattern(&pattern_type(&b, &w)?, v);
        if v.points().iter().any(|p| p.lt_all(&a)) {
            return Ok(false);
        }
        for j in 0..v.len() {
            if point_incident(w.point(j), &b) && !point_incident(v.point(j), &a) {
                return Ok(false);
            }
        }
        if (0..v.dim()).any(|i| b[i].is_pos_inf() && !a[i].is_pos_inf()) {
            return Ok(false);
        }
    }
    let big = facet_complex(v)?;
    let small = facet_complex(&w)?;
    Ok(small.maximal_faces.iter().all(|t| big.maximal_faces.iter().any(|s| t.iter().all(|x| s.contains(x)))))
}

/// ε = 0 of the right shape.
pub fn zero_perturbation(v: &GeneratorSet) -> Perturbation {
    vec![vec![Rational::zero(); v.dim()]; v.len()]
}
