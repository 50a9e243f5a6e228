use mtp_core::{covector, Ext, GeneratorSet, Point, Rational};
use num::BigInt;
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = Option<i64>> {
    prop_oneof![1 => Just(None), 6 => (-5i64..=5).prop_map(Some)]
}

fn to_point(xs: &[Option<i64>]) -> Point {
    Point(xs.iter().map(|x| x.map_or(Ext::NegInf, Ext::int)).collect())
}

fn instance() -> impl Strategy<Value = (Vec<Vec<Option<i64>>>, Vec<Option<i64>>)> {
    (1usize..=4).prop_flat_map(|d| {
        (
            prop::collection::vec(prop::collection::vec(coord(), d), 1..=5)
                .prop_filter("generator kind", |rows| rows.iter().all(|r| r.iter().any(Option::is_some))),
            prop::collection::vec(coord(), d),
        )
    })
}

/// p ∈ tconv(V) ⊕ tcone(e) by brute force over λ ∈ {-inf} ∪ {p_k - v_k} ∪ {0},
/// with max λ = 0 and max_j (λ_j + v_j) <= p; the rays fill the rest.
fn lambda_grid_oracle(v: &[Vec<Option<i64>>], p: &[Option<i64>]) -> bool {
    let cands: Vec<Vec<Option<i64>>> = v
        .iter()
        .map(|row| {
            let mut c: Vec<Option<i64>> = vec![None, Some(0)];
            for (x, y) in p.iter().zip(row) {
                if let (Some(x), Some(y)) = (x, y) {
                    if x - y <= 0 {
                        c.push(Some(x - y));
                    }
                }
            }
            c.sort();
            c.dedup();
            c
        })
        .collect();
    let mut idx = vec![0usize; v.len()];
    loop {
        let lam: Vec<Option<i64>> = idx.iter().zip(&cands).map(|(&k, c)| c[k]).collect();
        if lam.iter().any(|l| *l == Some(0)) {
            let ok = (0..p.len()).all(|i| {
                let x = v
                    .iter()
                    .zip(&lam)
                    .filter_map(|(row, l)| match (l, row[i]) {
                        (Some(a), Some(b)) => Some(a + b),
                        _ => None,
                    })
                    .max();
                match (x, p[i]) {
                    (None, _) => true,
                    (Some(_), None) => false,
                    (Some(a), Some(b)) => a <= b,
                }
            });
            if ok {
                return true;
            }
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return false;
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

fn gs(rows: &[Vec<Option<i64>>]) -> GeneratorSet {
    let d = rows[0].len();
    GeneratorSet::new(d, rows.iter().map(|r| to_point(r)).collect()).unwrap()
}

proptest! {
    #[test]
    fn domination_matches_lambda_grid((rows, p) in instance()) {
        let v = gs(&rows);
        prop_assert_eq!(v.contains(&to_point(&p)).unwrap(), lambda_grid_oracle(&rows, &p));
    }

    #[test]
    fn covector_translation_invariant((rows, p) in instance(), c in -7i64..=7) {
        let v = gs(&rows);
        let shift = Rational::from_integer(BigInt::from(c));
        let tr = |q: &Point| Point(q.iter().map(|x| x.shift(&shift)).collect());
        let vt = v.map_points(tr).unwrap();
        let pp = to_point(&p);
        prop_assert_eq!(covector(&v, &pp).unwrap(), covector(&vt, &tr(&pp)).unwrap());
    }

    #[test]
    fn covector_scaling_invariant((rows, p) in instance(), num in 1i64..=9, den in 1i64..=9) {
        let v = gs(&rows);
        let lam = Rational::new(BigInt::from(num), BigInt::from(den));
        let sc = |q: &Point| Point(q.iter().map(|x| x.scale(&lam)).collect());
        let vs = v.map_points(sc).unwrap();
        let pp = to_point(&p);
        prop_assert_eq!(covector(&v, &pp).unwrap(), covector(&vs, &sc(&pp)).unwrap());
    }

    #[test]
    fn ray_adjacent_to_own_axis((rows, p) in instance(), top in prop::collection::vec(any::<bool>(), 4)) {
        let v = gs(&rows);
        let mut pp = to_point(&p);
        for (i, t) in top.iter().enumerate().take(pp.dim()) {
            if *t {
                pp.0[i] = Ext::PosInf;
            }
        }
        let g = covector(&v, &pp).unwrap();
        for j in 0..v.dim() {
            prop_assert!(g.has_edge(v.len() + j, j + 1));
        }
    }

    #[test]
    fn generator_edges_respect_coordinates((rows, p) in instance()) {
        let v = gs(&rows);
        let pp = to_point(&p);
        let g = covector(&v, &pp).unwrap();
        for (x, i) in g.edges() {
            if x < v.len() && i >= 1 {
                prop_assert!(pp[i - 1] <= v.point(x)[i - 1]);
            }
        }
    }
}

#[test]
fn contains_on_first_degenerate_set() {
    let v = GeneratorSet::from_ints(&[
        &[Some(1), Some(0), Some(0)],
        &[Some(0), Some(1), Some(0)],
        &[Some(0), Some(0), Some(1)],
    ])
    .unwrap();
    let p = Point::ints(&[1, 1, 0]);
    let expected = v.points().iter().any(|w| w.leq(&p));
    assert!(expected);
    assert_eq!(v.contains(&p).unwrap(), expected);
}
