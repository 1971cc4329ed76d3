use std::collections::BTreeSet;

use maxmatch_core::enumeration::verify::{canonical_graph6_set, canonical_hits, verify_uniqueness};
use maxmatch_core::enumeration::{enumerate_graphs, EnumFilter};
use maxmatch_core::extremal::edge_bound;
use maxmatch_core::matching::nu;

/// Attaining classes found by direct generation on `n` vertices, pruned by
/// maximum degree and edge count, with isolated vertices stripped.
fn by_generation(delta: usize, target_nu: usize, n: usize) -> BTreeSet<String> {
    let m = edge_bound(delta, target_nu).unwrap();
    let filter = EnumFilter {
        max_degree: Some(delta),
        max_edges: Some(m),
        ..Default::default()
    };
    let graphs: Vec<_> = enumerate_graphs(n, &filter)
        .unwrap()
        .into_iter()
        .filter(|g| g.edge_count() == m && g.max_degree() == delta && nu(g) == target_nu)
        .map(|g| g.strip_isolated().graph)
        .collect();
    canonical_graph6_set(&graphs)
}

#[test]
fn skeleton_enumeration_matches_direct_generation() {
    for (delta, target_nu, n) in [(2, 2, 8), (2, 3, 9), (3, 2, 8), (4, 2, 8), (3, 3, 10)] {
        let report = verify_uniqueness(delta, target_nu).unwrap();
        assert_eq!(
            canonical_hits(&report),
            by_generation(delta, target_nu, n),
            "delta {delta}, nu {target_nu}"
        );
    }
}
