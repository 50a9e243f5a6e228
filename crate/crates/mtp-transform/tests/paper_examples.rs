use mtp_complexes::facet_complex;
use mtp_core::{Ext, GeneratorSet, Point};
use mtp_transform::*;

fn cols(rows: &[&[&str]], labels: &[&str]) -> GeneratorSet {
    let n = rows[0].len();
    let pts = (0..n).map(|j| Point(rows.iter().map(|r| r[j].parse().unwrap()).collect())).collect();
    GeneratorSet::with_labels(rows.len(), pts, labels.iter().map(|s| s.to_string()).collect()).unwrap()
}

fn first_degenerate() -> GeneratorSet {
    cols(&[&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]], &["a", "b", "c"])
}

fn second_degenerate() -> GeneratorSet {
    cols(&[&["0", "1", "1"], &["1", "0", "1"], &["1", "1", "0"]], &["u", "v", "w"])
}

fn pt(s: &str) -> Point {
    s.parse().unwrap()
}

#[test]
fn equal_rows_give_equal_patterns() {
    let v = cols(&[&["3", "4", "1", "2"], &["2", "1", "4", "3"], &["2", "1", "4", "3"]], &["m1", "m2", "m3", "m4"]);
    let p = order_pattern(&v);
    assert_eq!(p.axes[1], p.axes[2]);
    assert_ne!(p.axes[0], p.axes[1]);
    assert!(p.is_strict());
    assert!(p.is_valid_generator_pattern());
}

#[test]
fn identity_matrix_pattern() {
    let p = order_pattern(&first_degenerate());
    assert_eq!(p.axes[0], vec![vec![1, 2], vec![0]]);
    assert_eq!(p.axes[1], vec![vec![0, 2], vec![1]]);
    assert_eq!(p.axes[2], vec![vec![0, 1], vec![2]]);
}

#[test]
fn generification_of_second_degenerate_example() {
    let v = second_degenerate();
    let (w, eps) = strong_generification(&v, 1).unwrap();
    assert!(is_valid_deformation(&v, &eps).unwrap());
    for i in 0..3 {
        let mut vals: Vec<&Ext> = w.points().iter().map(|p| &p[i]).collect();
        vals.sort();
        vals.dedup();
        assert_eq!(vals.len(), 3, "axis {i}");
    }
    assert!(order_pattern(&w).refines(&order_pattern(&v)));
    assert!(deformation_subcomplex_check(&v, &eps).unwrap());
    let (fv, fw) = (facet_complex(&v).unwrap(), facet_complex(&w).unwrap());
    assert!(fw.maximal_faces.iter().all(|t| fv.maximal_faces.iter().any(|s| t.iter().all(|x| s.contains(x)))));
    assert_eq!(strong_generification(&v, 1).unwrap().0, w);
}

#[test]
fn pattern_types_in_the_plane() {
    let v = cols(&[&["1", "2"], &["2", "-inf"]], &["v1", "v2"]);
    let p = pattern_type(&pt("2,2"), &v).unwrap();
    assert_eq!(p.edge_labels(), vec![("v1".into(), "2".into()), ("v2".into(), "1".into())]);
    let q = pattern_type(&pt("1,+inf"), &v).unwrap();
    assert_eq!(q.edge_labels(), vec![("v1".to_string(), "1".to_string())]);
    let s = GeneratorSet::new(2, vec![pt("0,0")]).unwrap();
    let r = pattern_type(&pt("0,+inf"), &s).unwrap();
    assert_eq!(r.edges(), vec![(0, 0)]);
    assert_eq!(apex_from_pattern(&r, &s), pt("0,+inf"));
}

#[test]
fn ith_polyhedra_of_a_point() {
    let p = TropicalPolyhedron::new(2, vec![pt("0,0")], vec![]).unwrap();
    let p1 = ith_monomial_polyhedron(&p, 1).unwrap();
    assert_eq!(p1.points, vec![pt("0,0"), pt("-inf,-inf")]);
    assert_eq!(p1.rays, vec![Point::unit(2, 1)]);
    // only the point survives the intersection of the three monomial pieces
    for x in sample_grid(&p) {
        let all = (0..=2).all(|i| in_sector_union(&p, &x, i).unwrap());
        assert_eq!(all, x == pt("0,0"), "{x}");
    }
    assert!(decomposition_check(&p, &sample_grid(&p)).unwrap());
}

#[test]
fn monomial_polyhedron_is_its_own_zeroth_piece() {
    let v = cols(&[&["1", "2"], &["2", "-inf"]], &["v1", "v2"]);
    let m = TropicalPolyhedron::monomial(&v);
    for x in sample_grid(&m) {
        assert_eq!(in_sector_union(&m, &x, 0).unwrap(), membership(&m, &x).unwrap());
        assert_eq!(membership(&m, &x).unwrap(), v.contains(&x).unwrap());
    }
}

#[test]
fn ith_polyhedron_is_the_dehomogenised_cone() {
    let p = TropicalPolyhedron::new(2, vec![pt("0,0"), pt("2,1")], vec![pt("-inf,0")]).unwrap();
    for i in 0..=2 {
        let q = ith_monomial_polyhedron(&p, i).unwrap();
        for x in sample_grid(&p) {
            assert_eq!(membership(&q, &x).unwrap(), in_sector_union(&p, &x, i).unwrap(), "i={i}, x={x}");
        }
    }
}

#[test]
fn segment_membership_against_combinations() {
    // x = max(l1 + (0,0), l2 + (2,1)) with max(l1, l2) = 0, l on a half-integer grid
    let p = TropicalPolyhedron::new(2, vec![pt("0,0"), pt("2,1")], vec![]).unwrap();
    let half = |k: i64| Ext::ratio(k, 2);
    let lams: Vec<Ext> = std::iter::once(Ext::NegInf).chain((-8..=0).map(half)).collect();
    let mut hits = std::collections::BTreeSet::new();
    for l1 in &lams {
        for l2 in &lams {
            if l1.clone().max(l2.clone()) != Ext::zero() {
                continue;
            }
            let t = |a: i64, b: i64| l1.tmul(&Ext::int(a)).unwrap().max(l2.tmul(&Ext::int(b)).unwrap());
            hits.insert(Point(vec![t(0, 2), t(0, 1)]));
        }
    }
    for a in -2..=6 {
        for b in -2..=4 {
            let x = Point(vec![half(a), half(b)]);
            assert_eq!(membership(&p, &x).unwrap(), hits.contains(&x), "{x}");
        }
    }
    assert!(!membership(&p, &Point(vec![Ext::int(1), half(1)])).unwrap());
}
