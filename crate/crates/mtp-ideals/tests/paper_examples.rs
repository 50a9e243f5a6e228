mod common;

use std::collections::BTreeSet;

use mtp_complexes::{scarf_complex, Field};
use mtp_core::{covector, Error, GeneratorSet, Point};
use mtp_ideals::*;
use mtp_posets::{cp_order, max_lattice};

fn strongly_generic_example() -> MonomialIdeal {
    "x^3*y^2*z^2, x^4*y*z, x*y^4*z^4, x^2*y^3*z^3".parse().unwrap()
}

fn point_set(p: &mtp_posets::Poset) -> BTreeSet<Point> {
    p.elements.iter().filter_map(|e| e.point.clone()).collect()
}

#[test]
fn cech_hull_matrix() {
    let i = strongly_generic_example();
    let v = polyhedron_from_ideal(&i);
    let want = [[3, 4, 1, 2], [2, 1, 4, 3], [2, 1, 4, 3]];
    let mut cols: Vec<Point> = (0..4).map(|j| Point::ints(&[want[0][j], want[1][j], want[2][j]])).collect();
    let mut got = v.points().to_vec();
    cols.sort();
    got.sort();
    assert_eq!(got, cols);
    assert_eq!(ideal_from_polyhedron(&v).unwrap(), i);
}

#[test]
fn cech_hull_of_variables() {
    let i: MonomialIdeal = "x, y".parse().unwrap();
    let mut got = polyhedron_from_ideal(&i).points().to_vec();
    got.sort();
    assert_eq!(got, vec!["-inf,1".parse::<Point>().unwrap(), "1,-inf".parse().unwrap()]);
}

#[test]
fn inverse_cech_hull() {
    let v = GeneratorSet::new(2, vec!["1,-inf".parse().unwrap()]).unwrap();
    assert_eq!(ideal_from_polyhedron(&v).unwrap().to_string(), "x1");
    let w = GeneratorSet::new(2, vec!["1,1".parse().unwrap(), "2,-inf".parse().unwrap()]).unwrap();
    let i = ideal_from_polyhedron(&w).unwrap();
    assert_eq!(i, MonomialIdeal::new(2, vec![vec![1, 1], vec![2, 0]]).unwrap());
    let z = GeneratorSet::new(2, vec!["0,1".parse().unwrap()]).unwrap();
    assert_eq!(ideal_from_polyhedron(&z).unwrap_err().code(), "NotPositive");
    let h = GeneratorSet::new(2, vec!["1/2,1".parse().unwrap()]).unwrap();
    assert_eq!(ideal_from_polyhedron(&h).unwrap_err().code(), "NotIntegral");
}

#[test]
fn strongly_but_not_tropically_generic() {
    let i = strongly_generic_example();
    assert!(ideal_genericity(&i, Genericity::StronglyGeneric).unwrap());
    assert!(ideal_genericity(&i, Genericity::Generic).unwrap());
    assert!(!ideal_genericity(&i, Genericity::TropicallyGeneric).unwrap());
}

#[test]
fn four_hyperplanes_meet() {
    // every generator is tied at (4,2,2), so the point lies on all four hyperplanes
    let v = polyhedron_from_ideal(&strongly_generic_example());
    let g = covector(&v, &Point::ints(&[4, 2, 2])).unwrap();
    for x in 0..v.len() {
        assert!(g.n_left(x).count_ones() >= 2, "generator {x}");
    }
}

#[test]
fn small_genericity_cases() {
    let i: MonomialIdeal = "x^2*y, x*y^2".parse().unwrap();
    assert!(ideal_genericity(&i, Genericity::StronglyGeneric).unwrap());
    let pts = ["0,1,1", "1,0,1", "1,1,0"].iter().map(|s| s.parse().unwrap()).collect();
    let v2 = GeneratorSet::new(3, pts).unwrap();
    assert!(!is_strongly_generic(&v2));
}

#[test]
fn decompositions() {
    let i: MonomialIdeal = "x^2, y^3".parse().unwrap();
    assert_eq!(irreducible_decomposition(&i).unwrap(), vec![vec![2, 3]]);
    let j: MonomialIdeal = "x*y".parse().unwrap();
    assert_eq!(irreducible_decomposition(&j).unwrap(), vec![vec![0, 1], vec![1, 0]]);
}

#[test]
fn alexander_dual_of_two_powers() {
    let i: MonomialIdeal = "x^2, y^3".parse().unwrap();
    let d = alexander_dual(&i, &[3, 4]).unwrap();
    assert_eq!(d.to_string(), "x1*x2");
    assert_eq!(alexander_dual(&d, &[3, 4]).unwrap(), i);
    assert_eq!(
        alexander_dual(&i, &[3, 3]).unwrap_err(),
        Error::NotStrictlyDividing { generator: 1, coordinate: 1 }
    );
}

#[test]
fn lcm_lattices() {
    assert_eq!(lcm_lattice(&"x^2, y^3".parse().unwrap()).unwrap().len(), 4);
    assert_eq!(lcm_lattice(&"x*y, y*z, z*x".parse().unwrap()).unwrap().len(), 5);
}

#[test]
fn lcm_lattice_is_the_finite_part_of_the_max_lattice() {
    let i = strongly_generic_example();
    let l = lcm_lattice(&i).unwrap();
    let m = max_lattice(&polyhedron_from_ideal(&i)).unwrap();
    let finite: BTreeSet<Point> = point_set(&m).into_iter().filter(|p| !p.has_pos_inf()).collect();
    assert_eq!(point_set(&l), finite);
}

#[test]
fn betti_of_two_powers() {
    let i: MonomialIdeal = "x^2, y^3".parse().unwrap();
    let t = betti_numbers(&i, BettiMethod::LcmInterval, Field::Rational).unwrap();
    for u in [vec![2, 0], vec![0, 3], vec![2, 3]] {
        assert_eq!(t.column(&u), common::taylor_column(&i, &u, Field::Rational));
        assert_eq!(t.column(&u), common::koszul_column(&i, &u, Field::Rational));
    }
    assert_eq!(t.get(1, &[2, 0]), 1);
    assert_eq!(t.get(1, &[0, 3]), 1);
    assert_eq!(t.get(2, &[2, 3]), 1);
    let b = betti_poset(&i, Field::Rational).unwrap();
    assert_eq!(b.len(), 3);
}

#[test]
fn betti_of_triangle_ideal() {
    let i: MonomialIdeal = "x*y, y*z, z*x".parse().unwrap();
    for m in [BettiMethod::LcmInterval, BettiMethod::Koszul] {
        let t = betti_numbers(&i, m, Field::Rational).unwrap();
        assert_eq!(t.totals(), vec![1, 3, 2]);
        assert_eq!(t.get(2, &[1, 1, 1]), 2);
    }
    assert_eq!(common::taylor_column(&i, &[1, 1, 1], Field::Rational).get(&2), Some(&2));
}

#[test]
fn strongly_generic_betti_numbers_come_from_scarf_faces() {
    let i = strongly_generic_example();
    let t = betti_numbers(&i, BettiMethod::LcmInterval, Field::Rational).unwrap();
    let f = scarf_complex(&polyhedron_from_ideal(&i)).unwrap().f_vector().unwrap();
    // f[k] counts faces with k vertices; β_k(S/I) counts the k-element Scarf faces
    let mut want: Vec<usize> = f.iter().map(|&x| x as usize).collect();
    while want.last() == Some(&0) {
        want.pop();
    }
    assert_eq!(t.totals(), want);
    assert_eq!(t, betti_numbers(&i, BettiMethod::Koszul, Field::Rational).unwrap());
}

#[test]
fn betti_poset_sits_in_characteristic_points() {
    let i = strongly_generic_example();
    let b = point_set(&betti_poset(&i, Field::Rational).unwrap());
    let cp = point_set(&cp_order(&polyhedron_from_ideal(&i)).unwrap());
    assert!(b.is_subset(&cp));
    assert_eq!(b, point_set(&syzygy_poset(&i, Field::Rational).unwrap()));
}
