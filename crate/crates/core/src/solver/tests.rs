use super::*;
use crate::graph::FamilySpec::{self, *};
use crate::harness::enumerate_labeled_graphs;

fn vs(xs: &[usize]) -> VertexSet {
    xs.iter().copied().collect()
}

fn build(spec: FamilySpec) -> Graph {
    spec.build().unwrap()
}

#[test]
fn oracle_examples() {
    assert_eq!(gamma_oracle(&build(Path(4))).unwrap().value, 2);
    assert_eq!(gamma_oracle(&build(Complete(5))).unwrap().value, 1);
    let c6 = gamma_oracle(&build(Cycle(6))).unwrap();
    assert_eq!((c6.value, c6.certificate), (2, vs(&[0, 3])));

    assert_eq!(gamma_cer_oracle(&build(Path(4))).unwrap().value, 4);
    let k22 = gamma_cer_oracle(&build(CompleteBipartite(2, 2))).unwrap();
    assert_eq!((k22.value, k22.certificate), (2, vs(&[0, 1])));
    assert!(!is_certified_dominating(&build(CompleteBipartite(2, 2)), &vs(&[0, 2])));
    assert_eq!(gamma_cer_oracle(&build(Wheel(6))).unwrap().value, 1);
}

#[test]
fn all_min_dominating_sets_examples() {
    assert_eq!(all_min_dominating_sets(&build(Path(3))).unwrap(), vec![vs(&[1])]);
    let c4: Vec<Vec<usize>> = all_min_dominating_sets(&build(Cycle(4)))
        .unwrap()
        .iter()
        .map(VertexSet::to_vec)
        .collect();
    assert_eq!(
        c4,
        vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
    );
    assert_eq!(
        all_min_dominating_sets(&build(Complete(3))).unwrap(),
        vec![vs(&[0]), vs(&[1]), vs(&[2])]
    );
}

#[test]
fn solver_examples() {
    let cfg = SolverConfig::default();
    assert_eq!(gamma_cer_solve(&build(Fig1(2)), &cfg).value, 5);
    assert_eq!(gamma_cer_solve(&build(Fig3a(3)), &cfg).value, 4);
    assert_eq!(
        gamma_cer_solve(&build(FamilySpec::corona(Cycle(5), Complete(1))), &cfg).value,
        10
    );
    assert_eq!(gamma_cer_solve(&build(EmptyGraph(7)), &cfg).value, 7);

    assert_eq!(gamma_solve(&build(Cycle(9)), &cfg).value, 3);
    assert_eq!(gamma_solve(&build(CompleteBipartite(1, 5)), &cfg).value, 1);
    let p7 = gamma_solve(&build(Path(7)), &cfg);
    assert_eq!((p7.value, p7.certificate), (3, vs(&[0, 2, 5])));
    let p7 = gamma_cer_solve(&build(Path(7)), &cfg);
    assert_eq!((p7.value, p7.certificate), (3, vs(&[1, 3, 5])));
    let c7 = gamma_cer_solve(&build(Cycle(7)), &cfg);
    assert_eq!(c7.certificate, vs(&[0, 2, 4]));
}

#[test]
fn null_graph() {
    let g = Graph::empty(0).unwrap();
    for cfg in [SolverConfig::default(), SolverConfig::plain()] {
        assert_eq!(gamma_cer_solve(&g, &cfg).value, 0);
        assert_eq!(gamma_solve(&g, &cfg).value, 0);
    }
    assert_eq!(gamma_cer_oracle(&g).unwrap().value, 0);
}

#[test]
fn dd2_examples() {
    let c4 = find_dd2_pair(&build(Cycle(4)), None).unwrap();
    assert_eq!(c4.d.len(), 2);
    assert!(is_dd2_pair(&build(Cycle(4)), &c4));
    assert_eq!(find_dd2_pair(&build(Complete(2)), None), None);

    let fig1 = build(Fig1(3));
    assert_eq!(find_dd2_pair(&fig1, Some(6)), None);
    let pair = find_dd2_pair(&fig1, None).unwrap();
    assert_eq!(pair.d.len(), 7);
    assert!(is_dd2_pair(&fig1, &pair));
    assert_eq!(find_dd2_pair_oracle(&fig1, Some(6), 20).unwrap(), None);
    assert_eq!(
        find_dd2_pair_oracle(&fig1, None, 20).unwrap().map(|p| p.d.len()),
        Some(7)
    );
}

#[test]
fn node_limit_marks_result_unproven() {
    let g = build(Cycle(40));
    let cfg = SolverConfig {
        use_closed_forms: false,
        node_limit: NonZeroU64::new(3),
        ..SolverConfig::default()
    };
    let r = gamma_cer_solve(&g, &cfg);
    assert!(!r.proven);
    assert!(is_certified_dominating(&g, &r.certificate));
    assert_eq!(r.value, r.certificate.len());
    assert!(gamma_cer_solve(&g, &SolverConfig::default()).proven);
}

#[test]
fn certified_incumbent_is_certified() {
    for g in enumerate_labeled_graphs(6, false).unwrap().step_by(7) {
        for (_, h) in g.components() {
            let gamma = gamma_oracle(&h).unwrap();
            let d = certified_incumbent(&h, &gamma.certificate);
            assert!(is_certified_dominating(&h, &d), "{h:?}");
            if h.order() >= 3 {
                assert!(d.len() <= gamma.value + h.weak_supports().len(), "{h:?}");
            }
        }
    }
}

/// Identical value and certificate to the subset-enumeration oracles, with
/// and without reductions.
#[test]
fn oracle_equivalence_exhaustive() {
    for n in 0..=5 {
        for g in enumerate_labeled_graphs(n, false).unwrap() {
            let cer = gamma_cer_oracle(&g).unwrap();
            let dom = gamma_oracle(&g).unwrap();
            for cfg in [SolverConfig::default(), SolverConfig::plain()] {
                let s = gamma_cer_solve(&g, &cfg);
                assert_eq!((s.value, s.certificate), (cer.value, cer.certificate), "{g:?} {cfg:?}");
                assert!(s.proven);
                let s = gamma_solve(&g, &cfg);
                assert_eq!((s.value, s.certificate), (dom.value, dom.certificate), "{g:?} {cfg:?}");
            }
        }
    }
}

#[test]
fn dd2_matches_oracle() {
    for n in 0..=5 {
        for g in enumerate_labeled_graphs(n, false).unwrap() {
            let fast = find_dd2_pair(&g, None);
            let slow = find_dd2_pair_oracle(&g, None, 20).unwrap();
            assert_eq!(
                fast.as_ref().map(|p| p.d.len()),
                slow.as_ref().map(|p| p.d.len()),
                "{g:?}"
            );
            if let Some(p) = fast {
                assert!(is_dd2_pair(&g, &p));
            }
        }
    }
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn solver_matches_oracle(g in arb_graph(10)) {
            let s = gamma_cer_solve(&g, &SolverConfig::default());
            let o = gamma_cer_oracle(&g).unwrap();
            prop_assert_eq!(s.value, o.value);
            prop_assert_eq!(s.certificate, o.certificate);
            prop_assert_eq!(gamma_solve(&g, &SolverConfig::default()).certificate, gamma_oracle(&g).unwrap().certificate);
        }

        #[test]
        fn bounds_hold(g in arb_graph(12)) {
            let n = g.order();
            let cer = gamma_cer_solve(&g, &SolverConfig::default());
            let gamma = gamma_solve(&g, &SolverConfig::default()).value;
            prop_assert!(is_certified_dominating(&g, &cer.certificate));
            prop_assert!(g.supports().is_subset(&cer.certificate));
            prop_assert!(gamma <= cer.value && cer.value <= n);
            prop_assert!(n == 0 || cer.value != n - 1);
            prop_assert!(cer.value <= gamma + g.weak_supports().len());
            prop_assert!(cer.value <= 2 * gamma);
            prop_assert!(cer.value + g.strong_support_leaf_count() <= n);
            if g.min_degree().is_some_and(|d| d >= 2) || g.weak_supports().is_empty() {
                prop_assert_eq!(cer.value, gamma);
            }
        }

        #[test]
        fn additive_over_disjoint_union(a in arb_graph(7), b in arb_graph(7)) {
            let cfg = SolverConfig::default();
            let u = a.disjoint_union(&b).unwrap();
            prop_assert_eq!(
                gamma_cer_solve(&u, &cfg).value,
                gamma_cer_solve(&a, &cfg).value + gamma_cer_solve(&b, &cfg).value
            );
        }
    }
}
