//! Maximum matchings in general graphs, essential vertices and
//! factor-criticality.
//!
//! The search is Edmonds' augmenting-path algorithm with blossom
//! contraction. Roots, queue order and adjacency are all scanned in
//! ascending vertex order, so results are reproducible.

use std::collections::VecDeque;

use crate::graph::{Edge, Graph};

const NONE: usize = usize::MAX;

/// A matching of some host graph, stored as a mate table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    pub fn empty(n: usize) -> Matching {
        Matching {
            mate: vec![NONE; n],
        }
    }

    /// Builds a matching from edges. Returns `None` if two edges share an
    /// endpoint or an endpoint is out of range.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Option<Matching> {
        let mut m = Matching::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v || m.mate[u] != NONE || m.mate[v] != NONE {
                return None;
            }
            m.mate[u] = v;
            m.mate[v] = u;
        }
        Some(m)
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        match self.mate[v] {
            NONE => None,
            w => Some(w),
        }
    }

    pub fn is_covered(&self, v: usize) -> bool {
        self.mate[v] != NONE
    }

    pub fn len(&self) -> usize {
        self.mate.iter().filter(|&&w| w != NONE).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Matching edges sorted by (min endpoint, max endpoint).
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.mate.len())
            .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
            .map(|v| (v, self.mate[v]))
            .collect()
    }

    /// Every matching edge is an edge of `g` and the mate table is symmetric.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && (0..g.n()).all(|v| match self.mate[v] {
                NONE => true,
                w => w < g.n() && self.mate[w] == v && g.has_edge(v, w),
            })
    }
}

/// Augmenting-path search over a graph with an optional deleted vertex.
struct Blossom<'a> {
    g: &'a Graph,
    removed: usize,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, removed: usize, mate: Vec<usize>) -> Blossom<'a> {
        let n = g.n();
        Blossom {
            g,
            removed,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from the free vertex `root`; returns
    /// its other endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if to == self.removed || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn try_augment_from(&mut self, root: usize) -> bool {
        match self.find_path(root) {
            Some(end) => {
                self.augment(end);
                true
            }
            None => false,
        }
    }

    /// One pass over all free roots; a root without an augmenting path
    /// never gains one later, so the result is maximum.
    fn run(&mut self, limit: Option<usize>) {
        let mut gained = 0;
        for root in 0..self.g.n() {
            if limit == Some(gained) {
                return;
            }
            if root != self.removed
                && self.mate[root] == NONE
                && !self.g.neighbors(root).is_empty()
                && self.try_augment_from(root)
            {
                gained += 1;
            }
        }
    }
}

fn greedy(g: &Graph) -> Vec<usize> {
    let mut mate = vec![NONE; g.n()];
    for &(u, v) in g.edges() {
        if mate[u] == NONE && mate[v] == NONE {
            mate[u] = v;
            mate[v] = u;
        }
    }
    mate
}

/// A maximum matching of `g`.
pub fn max_matching(g: &Graph) -> Matching {
    let mut b = Blossom::new(g, NONE, greedy(g));
    b.run(None);
    Matching { mate: b.mate }
}

/// `ν(g)`, the size of a maximum matching.
pub fn nu(g: &Graph) -> usize {
    max_matching(g).len()
}

/// A maximum matching of `g \ x`, in `g`'s vertex ids (`x` left uncovered).
///
/// Restarts from the maximum matching `base` of `g`: dropping the edge at
/// `x` loses at most one edge, so at most one augmentation is needed.
pub fn max_matching_without(g: &Graph, base: &Matching, x: usize) -> Matching {
    let mut mate = base.mate.clone();
    if mate[x] == NONE {
        return Matching { mate };
    }
    let y = mate[x];
    mate[x] = NONE;
    mate[y] = NONE;
    let mut b = Blossom::new(g, x, mate);
    b.run(Some(1));
    Matching { mate: b.mate }
}

/// Vertices `x` with `ν(g \ x) = ν(g) - 1`, i.e. covered by every maximum
/// matching. Ascending order.
pub fn essential_vertices(g: &Graph) -> Vec<usize> {
    let base = max_matching(g);
    let nu = base.len();
    (0..g.n())
        .filter(|&x| max_matching_without(g, &base, x).len() < nu)
        .collect()
}

/// Outcome of a factor-criticality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorCritical {
    /// `certificates[x]` is a perfect matching of `g \ x`, in `g`'s ids.
    Yes {
        certificates: Vec<Vec<Edge>>,
    },
    No,
}

impl FactorCritical {
    pub fn is_yes(&self) -> bool {
        matches!(self, FactorCritical::Yes { .. })
    }
}

/// Tests whether `g` is connected, of odd order, and `g \ x` has a perfect
/// matching for every vertex `x`. `K_1` qualifies with an empty matching.
pub fn factor_critical(g: &Graph) -> FactorCritical {
    let n = g.n();
    if n.is_multiple_of(2) || !g.is_connected() {
        return FactorCritical::No;
    }
    let base = max_matching(g);
    let half = (n - 1) / 2;
    if base.len() != half {
        return FactorCritical::No;
    }
    let mut certificates = Vec::with_capacity(n);
    for x in 0..n {
        let m = max_matching_without(g, &base, x);
        if m.len() != half {
            return FactorCritical::No;
        }
        certificates.push(m.edges());
    }
    FactorCritical::Yes { certificates }
}

pub fn is_factor_critical(g: &Graph) -> bool {
    factor_critical(g).is_yes()
}

/// Checks that `edges` is a perfect matching of `g \ x`.
pub fn is_perfect_matching_without(g: &Graph, x: usize, edges: &[Edge]) -> bool {
    let Some(m) = Matching::from_edges(g.n(), edges) else {
        return false;
    };
    m.is_valid_for(g) && !m.is_covered(x) && (0..g.n()).all(|v| v == x || m.is_covered(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive maximum over edge subsets that form matchings.
    fn brute_nu(g: &Graph) -> usize {
        let e = g.edges();
        let mut best = 0;
        for mask in 0u32..(1 << e.len()) {
            let mut used = vec![false; g.n()];
            let mut ok = true;
            for (i, &(u, v)) in e.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if used[u] || used[v] {
                        ok = false;
                        break;
                    }
                    used[u] = true;
                    used[v] = true;
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn brute_force_reference_values() {
        assert_eq!(brute_nu(&Graph::petersen()), 5);
        assert_eq!(brute_nu(&Graph::cycle(5)), 2);
    }

    #[test]
    fn max_matching_examples() {
        assert_eq!(max_matching(&Graph::complete(4)).len(), 2);
        assert_eq!(max_matching(&Graph::cycle(5)).len(), 2);
        let p = max_matching(&Graph::petersen());
        assert_eq!(p.len(), 5);
        assert!(p.is_valid_for(&Graph::petersen()));
    }

    #[test]
    fn nu_examples() {
        for k in 1..8 {
            assert_eq!(nu(&Graph::star(k)), 1);
        }
        assert_eq!(nu(&Graph::empty(0)), 0);
        assert_eq!(nu(&Graph::empty(5)), 0);
        assert_eq!(nu(&Graph::complete(7)), 3);
    }

    #[test]
    fn blossom_needed() {
        // Triangle with a tail on both sides: greedy picks the wrong edges.
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4), (0, 5)]).unwrap();
        assert_eq!(nu(&g), brute_nu(&g));
        let g = Graph::new(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (5, 6),
                (2, 7),
                (7, 8),
                (8, 9),
            ],
        )
        .unwrap();
        assert_eq!(nu(&g), brute_nu(&g));
    }

    #[test]
    fn essential_vertex_examples() {
        assert_eq!(essential_vertices(&Graph::star(3)), vec![0]);
        assert_eq!(essential_vertices(&Graph::complete(3)), Vec::<usize>::new());
        assert_eq!(essential_vertices(&Graph::path(4)), vec![0, 1, 2, 3]);
    }

    #[test]
    fn essential_vertices_match_deletion() {
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        let nu_g = brute_nu(&g);
        let expected: Vec<usize> = (0..7)
            .filter(|&x| brute_nu(&g.delete_vertex(x).unwrap().graph) < nu_g)
            .collect();
        assert_eq!(essential_vertices(&g), expected);
    }

    #[test]
    fn factor_critical_examples() {
        assert!(is_factor_critical(&Graph::cycle(5)));
        assert!(!is_factor_critical(&Graph::complete(4)));
        assert!(!is_factor_critical(&Graph::star(3)));
        assert!(is_factor_critical(&Graph::empty(1)));
        assert!(!is_factor_critical(&Graph::empty(0)));
        assert!(!is_factor_critical(&Graph::empty(3)));
        let two_triangles = Graph::disjoint_union([&Graph::complete(3), &Graph::complete(3)]);
        assert!(!is_factor_critical(&two_triangles));
    }

    #[test]
    fn factor_critical_certificates_check_out() {
        let g = Graph::petersen().delete_vertex(0).unwrap().graph;
        assert!(is_factor_critical(&g));
        let FactorCritical::Yes { certificates } = factor_critical(&g) else {
            unreachable!()
        };
        assert_eq!(certificates.len(), 9);
        for (x, cert) in certificates.iter().enumerate() {
            assert!(is_perfect_matching_without(&g, x, cert));
        }
    }

    #[test]
    fn matching_from_edges_rejects_overlap() {
        assert!(Matching::from_edges(3, &[(0, 1), (1, 2)]).is_none());
        let m = Matching::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(m.edges(), vec![(0, 1), (2, 3)]);
        assert!(m.is_valid_for(&Graph::path(4)));
        assert!(!m.is_valid_for(&Graph::star(3)));
        assert!(m.is_valid_for(&Graph::complete(4)));
    }
}
