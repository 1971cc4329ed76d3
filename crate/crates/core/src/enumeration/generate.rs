//! Orderly generation: every canonical graph on `k` vertices is extended by
//! a new vertex with each possible neighborhood, and a child is kept only
//! when deleting its last canonical vertex gives back the parent's class.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{canonical_form, canonicalize, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUM_VERTICES: usize = 10;

/// Restrictions on generated graphs.
///
/// `max_degree` and `max_edges` are inherited by induced subgraphs and prune
/// the generation tree; `connected` and `no_isolated` only filter output.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumFilter {
    pub max_degree: Option<usize>,
    pub max_edges: Option<usize>,
    pub connected: bool,
    pub no_isolated: bool,
}

impl EnumFilter {
    fn hereditary_ok(&self, g: &Graph) -> bool {
        self.max_degree.is_none_or(|d| g.max_degree() <= d)
            && self.max_edges.is_none_or(|m| g.edge_count() <= m)
    }

    fn output_ok(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected())
            && (!self.no_isolated || g.isolated_vertices().is_empty())
    }
}

fn children(
    parent: &Graph,
    form: &CanonicalForm,
    filter: &EnumFilter,
) -> Vec<(CanonicalForm, Graph)> {
    let k = parent.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << k {
        let new_edges = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k));
        let child = Graph::new(k + 1, parent.edges().iter().copied().chain(new_edges))
            .expect("extension is simple");
        if !filter.hereditary_ok(&child) {
            continue;
        }
        let c = canonicalize(&child);
        if seen.contains(&c.form) {
            continue;
        }
        let last = c.graph.delete_vertex(k).expect("k is a vertex").graph;
        if canonical_form(&last) == *form {
            seen.insert(c.form.clone());
            out.push((c.form, c.graph));
        }
    }
    out
}

/// Every graph on exactly `n` vertices passing `filter`, one per isomorphism
/// class, canonically labeled and sorted by canonical form.
pub fn enumerate_canonical(n: usize, filter: &EnumFilter) -> Result<Vec<(CanonicalForm, Graph)>> {
    if n > MAX_ENUM_VERTICES {
        return Err(Error::InvalidParameters(format!(
            "enumeration is capped at {MAX_ENUM_VERTICES} vertices, got {n}"
        )));
    }
    let seed = Graph::empty(n.min(1));
    let mut level = vec![(canonical_form(&seed), seed)];
    for _ in 1..n {
        let mut next: Vec<(CanonicalForm, Graph)> = level
            .par_iter()
            .flat_map_iter(|(form, g)| children(g, form, filter))
            .collect();
        next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        level = next;
    }
    level.retain(|(_, g)| filter.output_ok(g));
    Ok(level)
}

/// [`enumerate_canonical`] without the forms.
pub fn enumerate_graphs(n: usize, filter: &EnumFilter) -> Result<Vec<Graph>> {
    Ok(enumerate_canonical(n, filter)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let all = EnumFilter::default();
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_graphs(n, &all).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn connected_on_three() {
        let f = EnumFilter {
            connected: true,
            ..Default::default()
        };
        let gs = enumerate_graphs(3, &f).unwrap();
        let mut ms: Vec<usize> = gs.iter().map(Graph::edge_count).collect();
        ms.sort();
        assert_eq!(ms, vec![2, 3]);
    }

    #[test]
    fn pruning_matches_filtering() {
        let f = EnumFilter {
            max_degree: Some(2),
            max_edges: Some(4),
            ..Default::default()
        };
        let pruned = enumerate_graphs(6, &f).unwrap();
        let filtered: Vec<Graph> = enumerate_graphs(6, &EnumFilter::default())
            .unwrap()
            .into_iter()
            .filter(|g| g.max_degree() <= 2 && g.edge_count() <= 4)
            .collect();
        assert_eq!(pruned, filtered);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(enumerate_graphs(11, &EnumFilter::default()).is_err());
    }
}
