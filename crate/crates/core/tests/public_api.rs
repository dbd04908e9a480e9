use certdom::analysis::{edge_effects, nordhaus_gaddum, BoundStatus, EdgeScope};
use certdom::domination::{is_certified_dominating, is_dd2_pair};
use certdom::graph::{encode_graph6, parse_edge_list, parse_graph6, to_edge_list, FamilySpec};
use certdom::harness::check_graph;
use certdom::solver::{find_dd2_pair, gamma_cer_oracle, gamma_cer_solve, gamma_solve, SolverConfig};
use certdom::structure::recognize_corona;
use certdom::Graph;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..=n * 2)
            .prop_map(move |pairs| Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap())
    })
}

#[test]
fn corona_of_fig2_base() {
    // K3 ∪ K2 as the base: the corona has every vertex in every certified set.
    let base = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
    let spec: FamilySpec = format!("corona(g6:{}, complete 1)", encode_graph6(&base))
        .parse()
        .unwrap();
    let g = spec.build().unwrap();
    assert_eq!(g.order(), 10);
    assert_eq!(gamma_cer_solve(&g, &SolverConfig::default()).value, 10);
    assert_eq!(recognize_corona(&g).map(|b| b.len()), Some(5));
}

#[test]
fn large_graph_solves() {
    let g = FamilySpec::corona(FamilySpec::Cycle(20), FamilySpec::Complete(1))
        .build()
        .unwrap();
    let r = gamma_cer_solve(&g, &SolverConfig::default());
    assert_eq!(r.value, 40);
    let g = FamilySpec::Cycle(60).build().unwrap();
    assert_eq!(gamma_cer_solve(&g, &SolverConfig::default()).value, 20);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn formats_round_trip(g in arb_graph(40)) {
        prop_assert_eq!(&parse_graph6(&encode_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_edge_list(&to_edge_list(&g)).unwrap(), &g);
    }

    #[test]
    fn solver_certificates(g in arb_graph(11)) {
        let cer = gamma_cer_solve(&g, &SolverConfig::default());
        prop_assert!(is_certified_dominating(&g, &cer.certificate));
        prop_assert_eq!(cer.value, gamma_cer_oracle(&g).unwrap().value);
        prop_assert!(gamma_solve(&g, &SolverConfig::plain()).value <= cer.value);
    }

    #[test]
    fn complement_values_bounded(g in arb_graph(9)) {
        let r = nordhaus_gaddum(&g).unwrap();
        let n = g.order();
        prop_assert_eq!(r.sum, r.gcer_g + r.gcer_gbar);
        prop_assert!(r.sum <= 2 * n);
        prop_assert!(n < 5 || r.checks.iter().all(|c| c.holds));
    }

    #[test]
    fn edge_additions_on_connected_graphs(g in arb_graph(8)) {
        let r = edge_effects(&g, EdgeScope::AllAdditions).unwrap();
        prop_assert_eq!(r.violations, 0);
        if g.is_connected() {
            prop_assert!(r.records.iter().all(|m| m.bound == BoundStatus::Holds));
        }
    }

    #[test]
    fn dd2_pairs_are_valid(g in arb_graph(10)) {
        if let Some(p) = find_dd2_pair(&g, None) {
            prop_assert!(is_dd2_pair(&g, &p));
            prop_assert!(p.d.len() >= gamma_solve(&g, &SolverConfig::default()).value);
        }
    }

    #[test]
    fn claims_other_than_errata_hold(g in arb_graph(7)) {
        let r = check_graph(&g, &[]);
        for c in r.failures() {
            prop_assert!(matches!(c.claim.as_str(), "LEM4.3" | "COR4.4" | "OBS7.2"), "{} on {}", c.claim, r.graph_id);
        }
    }
}
