use hyperchordal::betti::{has_linear_resolution, hochster_betti};
use hyperchordal::chordality::{
    find_peo, is_chordal, is_chordal_search, is_generalized_chordal_search, random_generalized_chordal, replay_script,
    rotate_non_isolated_first, verify_elimination_order, MoveMix, SearchOutcome,
};
use hyperchordal::complex::{alexander_dual, flag_complex_of, uniform_hypergraph_of};
use hyperchordal::io::{complex_from_value, complex_to_value, hypergraph_from_value, hypergraph_to_value};
use hyperchordal::{FieldSpec, Hypergraph, Limits, VertexSet};
use proptest::prelude::*;

fn hypergraph(n: usize, d: usize, mask: u64) -> Hypergraph {
    let all: Vec<VertexSet> = VertexSet::range(n).unwrap().subsets_of_size(d).collect();
    let edges = all.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
    Hypergraph::on_range(n, d, edges).unwrap()
}

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..=7, 2usize..=3, any::<u64>()).prop_map(|(n, d, mask)| hypergraph(n, d, mask))
}

fn arb_generated() -> impl Strategy<Value = (usize, usize, u64, u32, u32)> {
    (2usize..=8, 2usize..=4, any::<u64>(), 0u32..=3, 0u32..=3).prop_filter("some move weight", |t| t.3 + t.4 > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn chordality_is_hereditary(h in arb_hypergraph(), sub in any::<u64>()) {
        prop_assume!(is_chordal(&h));
        let v = VertexSet::range(h.n()).unwrap().deposit(sub);
        prop_assert!(is_chordal(&h.induced(v).unwrap()));
    }

    #[test]
    fn found_orders_verify_and_rotate(h in arb_hypergraph()) {
        if let Ok(peo) = find_peo(&h) {
            prop_assert!(verify_elimination_order(&h, &peo.order).is_ok());
            if let Some(r) = rotate_non_isolated_first(&peo) {
                prop_assert!(verify_elimination_order(&h, &r.order).is_ok());
            }
        }
    }

    #[test]
    fn glue_only_scripts_are_chordal((n, d, seed, _, _) in arb_generated()) {
        prop_assume!(n >= d);
        let (h, s) = random_generalized_chordal(n, d, seed, MoveMix { glue: 1, add_edge: 0 }).unwrap();
        prop_assert!(s.is_chordal());
        prop_assert_eq!(replay_script(&s).unwrap(), h.clone());
        prop_assert!(is_chordal(&h));
        prop_assert!(is_chordal_search(&h, 100_000).is_yes());
    }

    #[test]
    fn generated_hypergraphs_are_found_and_linear((n, d, seed, glue, add) in arb_generated()) {
        prop_assume!(n >= d);
        let (h, s) = random_generalized_chordal(n, d, seed, MoveMix { glue, add_edge: add }).unwrap();
        prop_assert_eq!(replay_script(&s).unwrap(), h.clone());
        match is_generalized_chordal_search(&h, 200_000) {
            SearchOutcome::Yes { script, vertex_map } => {
                let rebuilt = replay_script(&script).unwrap();
                prop_assert_eq!(hyperchordal::chordality::script::relabel(&rebuilt, &vertex_map).unwrap(), h.clone());
            }
            other => prop_assert!(false, "search said {:?}", other),
        }
        let lim = Limits::default();
        let flag = flag_complex_of(&h, &lim).unwrap();
        for f in [FieldSpec::GF2, FieldSpec::gf(3).unwrap(), FieldSpec::Rationals] {
            prop_assert!(has_linear_resolution(&flag, f, &lim).unwrap().linear);
        }
    }

    #[test]
    fn betti_tables_ignore_worker_count(h in arb_hypergraph(), workers in 2usize..=4) {
        let one = Limits::default();
        let many = Limits { workers, ..Limits::default() };
        let flag = flag_complex_of(&h, &one).unwrap();
        prop_assert_eq!(hochster_betti(&flag, FieldSpec::GF2, &one).unwrap(), hochster_betti(&flag, FieldSpec::GF2, &many).unwrap());
        prop_assert_eq!(
            has_linear_resolution(&flag, FieldSpec::GF2, &one).unwrap().linear,
            has_linear_resolution(&flag, FieldSpec::GF2, &many).unwrap().linear
        );
    }

    #[test]
    fn involutions(h in arb_hypergraph()) {
        prop_assert_eq!(h.complement().complement(), h.clone());
        let lim = Limits::default();
        let flag = flag_complex_of(&h, &lim).unwrap();
        prop_assert_eq!(alexander_dual(&alexander_dual(&flag, &lim).unwrap(), &lim).unwrap(), flag.clone());
        prop_assert_eq!(uniform_hypergraph_of(&flag, h.d()).unwrap(), h.clone());
    }

    #[test]
    fn json_round_trips(h in arb_hypergraph()) {
        prop_assert_eq!(hypergraph_from_value(hypergraph_to_value(&h, None)).unwrap().hypergraph, h.clone());
        let flag = flag_complex_of(&h, &Limits::default()).unwrap();
        prop_assert_eq!(complex_from_value(complex_to_value(&flag, None)).unwrap().complex, flag);
    }
}

/// Linear resolution never fails for a generalized chordal hypergraph. The
/// converse holds on four vertices and first breaks on five: K_5^3 minus an
/// edge has a principal ideal but no construction.
#[test]
fn linear_versus_generalized_chordal_on_small_vertex_sets() {
    let lim = Limits::default();
    for n in 3..=5 {
        let d = 3;
        let subsets = VertexSet::range(n).unwrap().subsets_of_size(d).count();
        let mut counterexamples = Vec::new();
        for mask in 0..1u64 << subsets {
            let h = hypergraph(n, d, mask);
            let flag = flag_complex_of(&h, &lim).unwrap();
            let lin = has_linear_resolution(&flag, FieldSpec::GF2, &lim).unwrap().linear;
            let gc = is_generalized_chordal_search(&h, 1_000_000);
            assert!(!matches!(gc, SearchOutcome::Inconclusive { .. }));
            assert!(lin || !gc.is_yes(), "{h:?}");
            if lin && !gc.is_yes() {
                counterexamples.push(h);
            }
        }
        println!("n = {n}: {} linear but not generalized chordal", counterexamples.len());
        if n < 5 {
            assert!(counterexamples.is_empty(), "{counterexamples:?}");
        } else {
            let k5 = hypergraph(5, 3, (1 << subsets) - 1);
            let minus_one = k5.remove_edge(VertexSet::from_iter([2, 3, 4]));
            assert!(counterexamples.contains(&minus_one));
        }
    }
}
