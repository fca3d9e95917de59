mod common;

use common::graph_pair;
use proptest::prelude::*;
use vava_core::graph::{
    complete_graph_criterion, confirm_witness, edge_ideal, is_complete_multipartite_spanning, vv_vanishes_graph, Graph,
};
use vava_core::vv::{vv_component, vv_vanishes};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn predicate_matches_algebra((sub, g) in graph_pair(2, 7)) {
        prop_assume!(sub.edge_count() > 0);
        let class = vv_vanishes_graph(&sub, &g).unwrap();
        let (j, i) = (edge_ideal(&sub), edge_ideal(&g));
        let rep = vv_vanishes(&j, &i).unwrap();
        prop_assert_eq!(class.vanishes, rep.vanishes);
        if !rep.vanishes {
            prop_assert_eq!(rep.indeg, Some(2));
            prop_assert!(vv_component(&j, &i, 1).unwrap().is_empty());
            let w = class.witness(g.n()).unwrap();
            prop_assert!(confirm_witness(&sub, &g, &w).unwrap(), "witness {} not confirmed", w);
        }
    }

    #[test]
    fn complete_graph_specialization((sub, _) in graph_pair(2, 6)) {
        let n = sub.n();
        let k = Graph::complete(n);
        let a = complete_graph_criterion(&sub, n);
        let b = vv_vanishes_graph(&sub, &k).unwrap().vanishes;
        prop_assert_eq!(a, b);
        if sub.edge_count() > 0 {
            prop_assert_eq!(b, is_complete_multipartite_spanning(&sub, n));
        }
    }

    #[test]
    fn bipartite_hosts_always_vanish(a in 1usize..=4, b in 1usize..=4, keep in prop::collection::vec(any::<bool>(), 16)) {
        let g = Graph::complete_bipartite(a, b);
        let edges: Vec<_> = g.edges().zip(&keep).filter(|(_, k)| **k).map(|(e, _)| e).collect();
        let sub = Graph::new(g.n(), edges).unwrap();
        prop_assert!(vv_vanishes_graph(&sub, &g).unwrap().vanishes);
        if sub.edge_count() > 0 {
            prop_assert!(vv_vanishes(&edge_ideal(&sub), &edge_ideal(&g)).unwrap().vanishes);
        }
    }
}
