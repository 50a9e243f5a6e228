mod common;

use std::collections::BTreeSet;

use mtp_complexes::Field;
use mtp_core::{GeneratorSet, Point};
use mtp_facets::complementary_polyhedron;
use mtp_ideals::*;
use mtp_posets::{cp_order, scarf_poset};
use proptest::prelude::*;

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=3)
        .prop_flat_map(|d| prop::collection::vec(prop::collection::vec(0u32..=3, d), 1..=5).prop_map(move |g| (d, g)))
        .prop_filter_map("unit generator", |(d, g)| {
            let g: Vec<Exponent> = g.into_iter().filter(|e| e.iter().any(|&x| x > 0)).collect();
            MonomialIdeal::new(d, g).ok()
        })
}

/// Distinct exponents per variable, so no two generators share a value.
fn strongly_generic_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=3, 1usize..=5)
        .prop_flat_map(|(d, n)| {
            prop::collection::vec(Just((1..=n as u32).collect::<Vec<u32>>()).prop_shuffle(), d).prop_map(move |cols| (d, n, cols))
        })
        .prop_filter_map("minimization", |(d, n, cols)| {
            let gens = (0..n).map(|k| (0..d).map(|i| cols[i][k]).collect()).collect();
            MonomialIdeal::new(d, gens).ok()
        })
}

fn points(p: &mtp_posets::Poset) -> BTreeSet<Point> {
    p.elements.iter().filter(|e| !e.formal).filter_map(|e| e.point.clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn betti_methods_agree_with_oracles(i in ideal_strategy()) {
        let f = Field::Rational;
        let t = betti_numbers(&i, BettiMethod::LcmInterval, f).unwrap();
        prop_assert_eq!(&t, &betti_numbers(&i, BettiMethod::Koszul, f).unwrap());
        let top = betti_numbers(&i, BettiMethod::FacetCrosscutTop, f).unwrap();
        prop_assert_eq!(top.column(&i.lcm_all()), t.column(&i.lcm_all()));
        for b in common::box_points(&i.lcm_all()) {
            let taylor = common::taylor_column(&i, &b, f);
            prop_assert_eq!(&t.column(&b), &taylor, "multidegree {:?}", b);
            prop_assert_eq!(&common::koszul_column(&i, &b, f), &taylor, "multidegree {:?}", b);
        }
    }

    #[test]
    fn betti_methods_agree_over_gf2(i in ideal_strategy()) {
        let f = Field::prime(2).unwrap();
        let t = betti_numbers(&i, BettiMethod::LcmInterval, f).unwrap();
        prop_assert_eq!(&t, &betti_numbers(&i, BettiMethod::Koszul, f).unwrap());
        for b in common::box_points(&i.lcm_all()) {
            prop_assert_eq!(t.column(&b), common::taylor_column(&i, &b, f));
        }
    }

    #[test]
    fn decomposition_matches_membership(i in ideal_strategy()) {
        let comps = irreducible_decomposition(&i).unwrap();
        let hi: Vec<u32> = i.lcm_all().iter().map(|x| x + 1).collect();
        for m in common::box_points(&hi) {
            prop_assert_eq!(i.contains(&m), comps.iter().all(|a| in_component(a, &m)), "monomial {:?}", m);
        }
    }

    #[test]
    fn support_is_lattice_points_of_polyhedron(i in ideal_strategy()) {
        let v = polyhedron_from_ideal(&i);
        let hi: Vec<u32> = i.lcm_all().iter().map(|x| x + 1).collect();
        for m in common::box_points(&hi) {
            let p = Point::ints(&m.iter().map(|&x| x as i64).collect::<Vec<_>>());
            prop_assert_eq!(i.contains(&m), v.contains(&p).unwrap());
        }
        prop_assert_eq!(ideal_from_polyhedron(&v).unwrap(), i);
    }

    #[test]
    fn alexander_duality(i in ideal_strategy(), extra in prop::collection::vec(1u32..=2, 3)) {
        let c: Vec<u32> = i.lcm_all().iter().zip(&extra).map(|(x, e)| x + e).collect();
        let dual = alexander_dual(&i, &c).unwrap();
        prop_assert_eq!(&alexander_dual(&dual, &c).unwrap(), &i);
        // b ∈ supp(I^[c]) iff b - c lies in M(-A)
        let neg: GeneratorSet = complementary_polyhedron(&polyhedron_from_ideal(&i)).unwrap().negated;
        for b in common::box_points(&c) {
            let diff = Point::ints(&b.iter().zip(&c).map(|(&x, &y)| x as i64 - y as i64).collect::<Vec<_>>());
            prop_assert_eq!(dual.contains(&b), neg.contains(&diff).unwrap(), "monomial {:?}", b);
        }
    }

    #[test]
    fn lcm_lattice_is_a_lattice(i in ideal_strategy()) {
        let l = lcm_lattice(&i).unwrap();
        prop_assert!(l.is_lattice());
        for g in &i.generators {
            prop_assert!(l.find_point(&exponent_to_point(g)).is_some());
        }
    }

    #[test]
    fn betti_poset_is_syzygy_poset_inside_cp(i in ideal_strategy()) {
        let b = points(&betti_poset(&i, Field::Rational).unwrap());
        prop_assert_eq!(&b, &points(&syzygy_poset(&i, Field::Rational).unwrap()));
        prop_assert!(b.is_subset(&points(&cp_order(&polyhedron_from_ideal(&i)).unwrap())));
        for g in &i.generators {
            prop_assert!(b.contains(&exponent_to_point(g)));
        }
    }

    #[test]
    fn strongly_generic_betti_poset_is_finite_scarf(i in strongly_generic_strategy()) {
        prop_assert!(ideal_genericity(&i, Genericity::StronglyGeneric).unwrap());
        prop_assert!(ideal_genericity(&i, Genericity::Generic).unwrap());
        let b = points(&betti_poset(&i, Field::Rational).unwrap());
        let s: BTreeSet<Point> =
            points(&scarf_poset(&polyhedron_from_ideal(&i)).unwrap()).into_iter().filter(|p| !p.has_pos_inf()).collect();
        prop_assert_eq!(b, s);
    }

    #[test]
    fn strongly_generic_implies_generic(i in ideal_strategy()) {
        if ideal_genericity(&i, Genericity::StronglyGeneric).unwrap() {
            prop_assert!(ideal_genericity(&i, Genericity::Generic).unwrap());
        }
    }
}
