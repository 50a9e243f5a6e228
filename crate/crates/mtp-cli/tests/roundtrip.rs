use mtp_cli::dot::{parse_dot_edges, poset_dot};
use mtp_cli::io::parse_ideal;
use mtp_cli::{verify, BettiJson, ComplexJson, Entry, InstanceFile, PosetJson, VerifyOptions};
use mtp_complexes::{facet_complex, reduced_homology, Field};
use mtp_core::{Ext, GeneratorSet, Point};
use mtp_ideals::{betti_numbers, BettiMethod, MonomialIdeal};
use mtp_posets::{cp_order, max_lattice, min_lattice, vertex_facet_lattice, Poset};
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = Ext> {
    prop_oneof![1 => Just(Ext::NegInf), 5 => (-4i64..=4).prop_map(Ext::int), 1 => (-9i64..=9, 1i64..=4).prop_map(|(p, q)| Ext::ratio(p, q))]
}

fn generators(d: usize, n: usize) -> impl Strategy<Value = GeneratorSet> {
    prop::collection::vec(prop::collection::vec(entry(), d), 1..=n).prop_filter_map("degenerate", move |rows| {
        let pts: Vec<Point> = rows.into_iter().map(Point).filter(|p| p.iter().any(Ext::is_finite)).collect();
        GeneratorSet::new(d, pts).ok()?.minimal_generators().ok()
    })
}

fn same_poset(a: &Poset, b: &Poset) -> bool {
    a.elements == b.elements && a.hasse() == b.hasse() && a.left_labels == b.left_labels && a.right_labels == b.right_labels
}

fn round_trip(p: &Poset) -> Poset {
    let text = serde_json::to_string(&PosetJson::from_poset(p)).unwrap();
    PosetJson::parse(&text).unwrap().to_poset().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn instance_files_round_trip(v in generators(3, 5)) {
        let f = InstanceFile::from_generator_set(&v);
        let back = InstanceFile::parse(&f.to_json()).unwrap();
        prop_assert_eq!(&back, &f);
        let w = back.generator_set().unwrap();
        prop_assert_eq!(w.points(), v.points());
        prop_assert_eq!(w.labels(), v.labels());
    }

    #[test]
    fn integer_entries_read_like_strings(x in -50i64..50) {
        prop_assert_eq!(Entry::Int(x).to_ext().unwrap(), Entry::Text(x.to_string()).to_ext().unwrap());
    }

    #[test]
    fn posets_round_trip(v in generators(3, 4)) {
        for p in [vertex_facet_lattice(&v).unwrap(), max_lattice(&v).unwrap(), min_lattice(&v).unwrap(), cp_order(&v).unwrap()] {
            prop_assert!(same_poset(&round_trip(&p), &p));
        }
    }

    #[test]
    fn dot_edges_are_hasse_edges(v in generators(3, 4)) {
        let p = max_lattice(&v).unwrap();
        prop_assert_eq!(parse_dot_edges(&poset_dot(&p, "p")), p.hasse().to_vec());
    }

    #[test]
    fn complexes_and_homology_round_trip(v in generators(3, 5)) {
        let k = facet_complex(&v).unwrap();
        let j = ComplexJson::from_complex(&k);
        let back: ComplexJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        prop_assert_eq!(back.to_complex().unwrap(), k.clone());
        let h = reduced_homology(&k, Field::Rational).unwrap();
        let hj = mtp_cli::HomologyJson::from_profile(&h);
        let back: mtp_cli::HomologyJson = serde_json::from_str(&serde_json::to_string(&hj).unwrap()).unwrap();
        prop_assert_eq!(back.to_profile().unwrap(), h);
    }

    #[test]
    fn betti_tables_and_ideals_round_trip(gens in prop::collection::vec(prop::collection::vec(0u32..=3, 2), 1..=4)) {
        let gens: Vec<Vec<u32>> = gens.into_iter().filter(|g| g.iter().any(|&x| x > 0)).collect();
        prop_assume!(!gens.is_empty());
        let i = MonomialIdeal::new(2, gens).unwrap();
        // the text form infers the ring from the highest variable, so pass it explicitly
        prop_assert_eq!(&MonomialIdeal::parse(&i.to_string(), Some(2)).unwrap(), &i);
        prop_assert_eq!(&parse_ideal(&i.to_json()).unwrap(), &i);
        let t = betti_numbers(&i, BettiMethod::LcmInterval, Field::Rational).unwrap();
        let j = BettiJson::from_table(&t);
        let back: BettiJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        prop_assert_eq!(back.to_table().unwrap(), t);
    }

    #[test]
    fn verify_is_deterministic(v in generators(3, 4), seed in 0u64..1000) {
        let opts = VerifyOptions { seed, budget: 200_000, ..VerifyOptions::default() };
        prop_assert_eq!(verify(&v, &opts), verify(&v, &opts));
    }
}
