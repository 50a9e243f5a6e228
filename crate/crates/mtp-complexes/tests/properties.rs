use std::collections::BTreeSet;

use mtp_complexes::*;
use mtp_core::GeneratorSet;
use mtp_posets::{affine_part, max_lattice, scarf_poset, vertex_facet_lattice, Poset};
use proptest::prelude::*;

fn arb_generators(max_d: usize, max_n: usize, hi: i64) -> impl Strategy<Value = GeneratorSet> {
    (2..=max_d, 1..=max_n).prop_flat_map(move |(d, n)| {
        prop::collection::vec(
            prop::collection::vec(prop_oneof![1 => Just(None), 6 => (0..=hi).prop_map(Some)], d),
            n,
        )
        .prop_filter_map("all -inf generator", |rows| {
            if rows.iter().any(|r| r.iter().all(Option::is_none)) {
                return None;
            }
            let refs: Vec<&[Option<i64>]> = rows.iter().map(|r| r.as_slice()).collect();
            GeneratorSet::from_ints(&refs).ok()?.minimal_generators().ok()
        })
    })
}

fn h(k: &SimplicialComplex) -> HomologyProfile {
    reduced_homology(k, Field::Rational).unwrap()
}

fn same_homology_on_lattice(l: &Poset) -> bool {
    h(&order_complex(l).unwrap()).reduced_betti == h(&crosscut_complex(l, None).unwrap()).reduced_betti
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn facet_complex_is_a_homology_sphere(v in arb_generators(4, 8, 6)) {
        prop_assert!(sphere_check(&v, Field::Rational).unwrap());
    }

    #[test]
    fn crosscut_of_affine_part_is_bounded_complex(v in arb_generators(4, 7, 6)) {
        let aff = affine_part(&vertex_facet_lattice(&v).unwrap(), v.len());
        let cc = crosscut_complex(&aff, None).unwrap();
        prop_assert!(cc.same_faces(&bounded_complex(&v).unwrap()), "{} vs {}", cc, bounded_complex(&v).unwrap());
    }

    #[test]
    fn crosscut_homology_matches_order_complex(v in arb_generators(3, 5, 4)) {
        let vf = vertex_facet_lattice(&v).unwrap();
        prop_assert!(same_homology_on_lattice(&vf));
        prop_assert!(same_homology_on_lattice(&affine_part(&vf, v.len())));
        prop_assert!(same_homology_on_lattice(&max_lattice(&v).unwrap()));
    }

    #[test]
    fn scarf_complex_lies_in_facet_complex(v in arb_generators(4, 7, 6)) {
        let s = scarf_complex(&v).unwrap();
        let k = facet_complex(&v).unwrap();
        for f in &s.maximal_faces {
            prop_assert!(k.contains(f));
        }
    }

    #[test]
    fn scarf_faces_are_the_ray_free_scarf_points(v in arb_generators(3, 6, 4)) {
        let s = scarf_complex(&v).unwrap();
        let faces: BTreeSet<Vec<usize>> = s.faces_by_dim().unwrap().into_iter().flatten().filter(|f| !f.is_empty()).collect();
        let sp = scarf_poset(&v).unwrap();
        let points: BTreeSet<Vec<usize>> = sp.elements.iter()
            .filter(|e| !e.point.as_ref().unwrap().has_pos_inf())
            .map(|e| e.vertices.clone().unwrap())
            .collect();
        prop_assert_eq!(faces, points);
    }

    #[test]
    fn homology_agrees_across_large_primes(v in arb_generators(3, 6, 4)) {
        let aff = affine_part(&vertex_facet_lattice(&v).unwrap(), v.len());
        let oc = order_complex(&aff).unwrap();
        let q = h(&oc);
        let p = reduced_homology(&oc, Field::Prime(1_000_003)).unwrap();
        prop_assert_eq!(q.reduced_betti, p.reduced_betti);
    }
}
