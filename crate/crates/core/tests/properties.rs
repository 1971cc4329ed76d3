use maxmatch_core::coloring::{chromatic_index, vizing_coloring};
use maxmatch_core::enumeration::{are_isomorphic, canonical_form};
use maxmatch_core::format::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use maxmatch_core::matching::{max_matching, nu};
use maxmatch_core::{Budget, Graph};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        subsequence(pairs, 0..=len).prop_map(move |edges| Graph::new(n, edges).unwrap())
    })
}

fn relabeled(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.n(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #[test]
    fn handshake(g in graph(12)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn deleting_a_vertex_removes_its_edges(g in graph(10), pick in any::<usize>()) {
        let v = pick % g.n();
        let sub = g.delete_vertex(v).unwrap();
        prop_assert_eq!(sub.graph.edge_count(), g.edge_count() - g.degree(v).unwrap());
        prop_assert_eq!(sub.graph.n(), g.n() - 1);
    }

    #[test]
    fn graph6_round_trip(g in graph(14)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(14)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn components_partition_vertices_and_edges(g in graph(12)) {
        let comps = g.components();
        let mut vertices: Vec<usize> = comps.iter().flat_map(|c| c.vertices.clone()).collect();
        vertices.sort();
        prop_assert_eq!(vertices, (0..g.n()).collect::<Vec<_>>());
        let mut edges: Vec<_> = comps
            .iter()
            .flat_map(|c| c.graph.edges().iter().map(|&e| c.lift_edge(e)).collect::<Vec<_>>())
            .collect();
        edges.sort();
        prop_assert_eq!(edges.as_slice(), g.edges());
        prop_assert!(comps.iter().all(|c| c.graph.is_connected()));
    }

    #[test]
    fn matching_is_valid_and_bounded(g in graph(14)) {
        let m = max_matching(&g);
        prop_assert!(m.is_valid_for(&g));
        prop_assert!(2 * m.len() <= g.n());
    }

    #[test]
    fn vizing_bounds(g in graph(9)) {
        prop_assume!(g.edge_count() > 0);
        let delta = g.max_degree();
        let vz = vizing_coloring(&g).unwrap();
        prop_assert!(vz.is_proper());
        prop_assert!(vz.k() <= delta + 1);
        let ci = chromatic_index(&g, Budget::default()).unwrap();
        prop_assert!(ci.chi == delta || ci.chi == delta + 1);
        prop_assert!(g.edge_count() <= ci.chi * nu(&g));
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(10), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = relabeled(&g, &perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
    }
}
