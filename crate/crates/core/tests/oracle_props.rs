mod common;

use common::Matrix;
use macaulify::oracle::{clique_summary, has_cut_point_property};
use macaulify::ordering::{find_pi_ordering, DEFAULT_BUDGET};
use macaulify::{is_closed_labeled, satisfies_pi_ordering, CmStatus, Graph, Oracle, OrderingStatus, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut b = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[b] {
                        edges.push((u, v));
                    }
                    b += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(250))]

    #[test]
    fn cut_point_family_matches_naive(g in graph_strategy(8)) {
        let m = Matrix::of(&g);
        let recs = Oracle::default().cut_point_sets(&g).unwrap();
        let sets: Vec<Vec<usize>> = recs.iter().map(|r| r.set.to_vec()).collect();
        prop_assert_eq!(&sets, &common::cut_point_family(&m));
        for r in &recs {
            let t = r.set.to_vec();
            prop_assert_eq!(r.c, common::c_of(&m, &t));
            prop_assert_eq!(r.height, common::height(&m, &t));
            prop_assert_eq!(r.components.len(), r.c);
        }
    }

    #[test]
    fn cut_point_predicate_on_arbitrary_sets(g in graph_strategy(8), mask in any::<u64>()) {
        let t = VertexSet::from_bits(mask) & g.vertices();
        let m = Matrix::of(&g);
        prop_assert_eq!(has_cut_point_property(&g, t), common::has_cut_point_property(&m, &t.to_vec()));
    }

    #[test]
    fn unmixed_matches_naive(g in graph_strategy(8)) {
        let oracle = Oracle::default();
        let m = Matrix::of(&g);
        if g.is_connected() {
            prop_assert_eq!(oracle.is_unmixed(&g).unwrap(), common::unmixed(&m));
        } else {
            prop_assert!(oracle.is_unmixed(&g).is_err());
        }
    }

    #[test]
    fn equal_heights_iff_components_unmixed(g in graph_strategy(8)) {
        let oracle = Oracle::default();
        let all_unmixed = oracle.component_verdicts(&g).unwrap().iter().all(|v| v.unmixed);
        prop_assert_eq!(oracle.heights_equal(&g).unwrap(), all_unmixed);
    }

    #[test]
    fn clique_complex_matches_naive(g in graph_strategy(8)) {
        let m = Matrix::of(&g);
        let summary = clique_summary(&g);
        let mut facets: Vec<Vec<usize>> = summary.facets.iter().map(|f| f.to_vec()).collect();
        facets.sort();
        prop_assert_eq!(facets, common::maximal_cliques(&m));
        prop_assert_eq!(summary.free_vertices.to_vec(), common::free_vertices(&m));
    }

    #[test]
    fn ordering_search_matches_brute_force(g in graph_strategy(7)) {
        let m = Matrix::of(&g);
        let res = find_pi_ordering(&g, DEFAULT_BUDGET);
        let exists = common::has_pi_labeling(&m);
        match res.status {
            OrderingStatus::Found => {
                prop_assert!(exists);
                let relabeled = g.permuted(&res.permutation().unwrap());
                prop_assert!(common::pi_ordering(&Matrix::of(&relabeled)));
            }
            OrderingStatus::CertifiedNone => prop_assert!(!exists),
            OrderingStatus::Unknown => prop_assert!(false, "n <= 7 must be decided"),
        }
    }

    #[test]
    fn cm_status_is_consistent(g in graph_strategy(7)) {
        prop_assume!(g.is_connected());
        let oracle = Oracle::default();
        let m = Matrix::of(&g);
        let status = oracle.cm_status(&g).unwrap();
        let unmixed = common::unmixed(&m);
        if !unmixed {
            prop_assert_eq!(status, CmStatus::NotCm);
        } else if is_closed_labeled(&g) || common::has_pi_labeling(&m) {
            prop_assert_eq!(status, CmStatus::Cm);
        } else {
            prop_assert_eq!(status, CmStatus::Unknown);
        }
        if satisfies_pi_ordering(&g) {
            prop_assert_eq!(unmixed, common::condition_iv(&m));
        }
    }

    #[test]
    fn audit_matches_direct_deletion(g in graph_strategy(7)) {
        prop_assume!(g.is_connected() && g.n() >= 2);
        let oracle = Oracle::default();
        let report = oracle.audit_subgraphs(&g).unwrap();
        prop_assert_eq!(report.entries.len(), g.n());
        let m = Matrix::of(&g);
        let free = common::free_vertices(&m);
        for e in &report.entries {
            let d = m.delete_vertex(e.vertex);
            prop_assert_eq!(e.deleted_graph_closed, common::closed(&d));
            prop_assert_eq!(e.deleted_connected, common::is_connected(&d));
            let comps = common::components(&d, &d.vertices());
            let unmixed = comps.iter().all(|c| common::unmixed(&d.induced(c)));
            prop_assert_eq!(e.deleted_unmixed, unmixed);
            prop_assert_eq!(e.v_free, free.contains(&e.vertex));
        }
    }
}

#[test]
fn cap_is_enforced() {
    let big = Graph::path(10).unwrap();
    let oracle = Oracle::new(8);
    assert!(oracle.cut_point_sets(&big).is_err());
    assert!(oracle.is_unmixed(&big).is_err());
    assert!(Oracle::new(10).is_unmixed(&big).unwrap());
}

// Bull graph: deleting the free vertex 3 leaves a CM path, yet F\{3} = {1,2}
// is itself a cut set. The facet condition is not forced by CM deletions.
#[test]
fn bull_deletion_keeps_cm_without_facet_condition() {
    let bull = Graph::from_edges(5, &[(1, 2), (1, 3), (1, 5), (2, 3), (2, 4)]).unwrap();
    let oracle = Oracle::default();
    assert_eq!(oracle.cm_status(&bull).unwrap(), CmStatus::Cm);
    let deleted = bull.induced_delete(3).unwrap();
    assert!(deleted.is_connected());
    assert_eq!(oracle.cm_status(&deleted).unwrap(), CmStatus::Cm);
    let facet = clique_summary(&bull).facet_of_free(3).unwrap();
    assert_eq!(facet.to_vec(), vec![1, 2, 3]);
    let sets: Vec<Vec<usize>> = oracle
        .cut_point_sets(&bull)
        .unwrap()
        .iter()
        .map(|r| r.set.to_vec())
        .collect();
    assert!(sets.contains(&vec![1, 2]));
    assert!(!oracle.audit_subgraphs(&bull).unwrap().entries[2].facet_condition);
}
