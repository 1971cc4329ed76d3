//! Proper edge colorings: the constructive `Δ+1` bound, the exact chromatic
//! index by backtracking, and Vizing's class.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching;

/// Node cap for exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 50_000_000;

    pub fn new(nodes: u64) -> Budget {
        Budget { nodes }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::DEFAULT_NODES)
    }
}

/// A proper edge coloring. `colors[i]` is the color of `host.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    host: Graph,
    colors: Vec<usize>,
    k: usize,
}

impl EdgeColoring {
    /// Wraps raw colors, checking that every edge is colored with a value
    /// below `k` and that adjacent edges differ.
    pub fn new(host: Graph, colors: Vec<usize>, k: usize) -> Result<EdgeColoring> {
        let c = EdgeColoring { host, colors, k };
        if c.colors.len() != c.host.edge_count() || c.colors.iter().any(|&x| x >= k) {
            return Err(Error::Violation(
                "coloring does not cover the edge set".into(),
            ));
        }
        if !c.is_proper() {
            return Err(Error::Violation("coloring is not proper".into()));
        }
        Ok(c)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Palette size.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_of(&self, e: Edge) -> Option<usize> {
        let idx = self.host.edges().binary_search(&e).ok()?;
        Some(self.colors[idx])
    }

    /// Edges of color `c`, sorted.
    pub fn class(&self, c: usize) -> Vec<Edge> {
        self.host
            .edges()
            .iter()
            .zip(&self.colors)
            .filter(|&(_, &x)| x == c)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn classes(&self) -> Vec<Vec<Edge>> {
        (0..self.k).map(|c| self.class(c)).collect()
    }

    pub fn is_proper(&self) -> bool {
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        for (&(u, v), &c) in self.host.edges().iter().zip(&self.colors) {
            if seen.insert((u, c), ()).is_some() || seen.insert((v, c), ()).is_some() {
                return false;
            }
        }
        true
    }
}

/// Class sizes, largest first.
pub fn color_class_sizes(c: &EdgeColoring) -> Vec<usize> {
    let mut sizes = vec![0; c.k];
    for &x in &c.colors {
        sizes[x] += 1;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VizingClass {
    #[serde(rename = "I")]
    ClassI,
    #[serde(rename = "II")]
    ClassII,
}

/// Relabels colors densely in order of first appearance along the edge list.
fn compact(colors: &mut [usize]) -> usize {
    let mut map: HashMap<usize, usize> = HashMap::new();
    for c in colors.iter_mut() {
        let next = map.len();
        *c = *map.entry(*c).or_insert(next);
    }
    map.len()
}

/// Misra–Gries state: `at[v][c]` is the neighbor joined to `v` by an edge of
/// color `c`.
struct FanColorer {
    at: Vec<Vec<Option<usize>>>,
    palette: usize,
}

impl FanColorer {
    fn color(&self, u: usize, w: usize) -> Option<usize> {
        self.at[u].iter().position(|&x| x == Some(w))
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn free(&self, v: usize) -> usize {
        (0..self.palette)
            .find(|&c| self.is_free(v, c))
            .expect("a vertex of degree <= Δ always has a free color among Δ+1")
    }

    fn set(&mut self, u: usize, w: usize, c: usize) {
        debug_assert!(self.is_free(u, c) && self.is_free(w, c));
        self.at[u][c] = Some(w);
        self.at[w][c] = Some(u);
    }

    fn unset(&mut self, u: usize, w: usize, c: usize) {
        self.at[u][c] = None;
        self.at[w][c] = None;
    }

    /// Swaps colors `c` and `d` along the alternating path that leaves `u`
    /// on color `d`. `c` must be free at `u`.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut cur, mut col) = (u, d);
        while let Some(next) = self.at[cur][col] {
            path.push((cur, next, col));
            cur = next;
            col = if col == c { d } else { c };
        }
        for &(a, b, x) in &path {
            self.unset(a, b, x);
        }
        for &(a, b, x) in &path {
            self.set(a, b, if x == c { d } else { c });
        }
    }

    fn is_fan(&self, u: usize, fan: &[usize]) -> bool {
        fan.windows(2).all(|w| match self.color(u, w[1]) {
            Some(c) => self.is_free(w[0], c),
            None => false,
        })
    }

    fn color_edge(&mut self, g: &Graph, u: usize, v: usize) {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = g.neighbors(u).iter().copied().find(|&w| {
                !fan.contains(&w) && self.color(u, w).is_some_and(|c| self.is_free(last, c))
            });
            match next {
                Some(w) => fan.push(w),
                None => break,
            }
        }
        let c = self.free(u);
        let d = self.free(*fan.last().unwrap());
        if c != d {
            self.invert_path(u, c, d);
        }
        let end = (0..fan.len())
            .find(|&i| self.is_free(fan[i], d) && self.is_fan(u, &fan[..=i]))
            .expect("Misra–Gries: some fan prefix ends at a vertex missing d");
        // Rotate: each fan edge takes the color of its successor.
        let shifted: Vec<usize> = (0..end)
            .map(|i| self.color(u, fan[i + 1]).unwrap())
            .collect();
        for i in 0..end {
            self.unset(u, fan[i + 1], shifted[i]);
        }
        for i in 0..end {
            self.set(u, fan[i], shifted[i]);
        }
        self.set(u, fan[end], d);
    }
}

/// A proper coloring with at most `Δ+1` colors, inserting edges one at a
/// time in sorted order and repairing with fan rotations and alternating
/// path flips.
pub fn vizing_coloring(g: &Graph) -> Result<EdgeColoring> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let palette = g.max_degree() + 1;
    let mut st = FanColorer {
        at: vec![vec![None; palette]; g.n()],
        palette,
    };
    for &(u, v) in g.edges() {
        st.color_edge(g, u, v);
    }
    let mut colors: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(u, v)| st.color(u, v).expect("every edge colored"))
        .collect();
    let k = compact(&mut colors);
    EdgeColoring::new(g.clone(), colors, k)
}

/// Result of the exact chromatic-index computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticIndex {
    pub chi: usize,
    pub class: VizingClass,
    pub witness: EdgeColoring,
}

/// Backtracking search for a proper `k`-coloring.
struct ColorSearch<'a> {
    g: &'a Graph,
    k: usize,
    nu: usize,
    order: Vec<usize>,
    /// Bitmask of colors used at each vertex.
    used: Vec<u128>,
    class_size: Vec<usize>,
    colors: Vec<usize>,
    /// Edge ids incident to each vertex.
    incident: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

const UNCOLORED: usize = usize::MAX;

impl ColorSearch<'_> {
    fn assign(&mut self, e: usize, c: usize) {
        let (u, v) = self.g.edges()[e];
        self.used[u] |= 1 << c;
        self.used[v] |= 1 << c;
        self.class_size[c] += 1;
        self.colors[e] = c;
    }

    fn unassign(&mut self, e: usize, c: usize) {
        let (u, v) = self.g.edges()[e];
        self.used[u] &= !(1 << c);
        self.used[v] &= !(1 << c);
        self.class_size[c] -= 1;
        self.colors[e] = UNCOLORED;
    }

    fn full_mask(&self) -> u128 {
        if self.k == 128 {
            u128::MAX
        } else {
            (1u128 << self.k) - 1
        }
    }

    /// Every uncolored edge at `u` or `v` still has a color available.
    fn forward_ok(&self, u: usize, v: usize) -> bool {
        let full = self.full_mask();
        for w in [u, v] {
            for &f in &self.incident[w] {
                if self.colors[f] == UNCOLORED {
                    let (a, b) = self.g.edges()[f];
                    if (self.used[a] | self.used[b]) & full == full {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Each color class is a matching, so holds at most `ν` edges.
    fn capacity_ok(&self, remaining: usize) -> bool {
        let room: usize = self
            .class_size
            .iter()
            .map(|&s| self.nu - s.min(self.nu))
            .sum();
        remaining <= room
    }

    fn search(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let e = self.order[depth];
        let (u, v) = self.g.edges()[e];
        let blocked = self.used[u] | self.used[v];
        for c in 0..self.k {
            if blocked >> c & 1 == 1 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Undecided {
                    budget: self.budget,
                });
            }
            self.assign(e, c);
            if self.capacity_ok(self.order.len() - depth - 1)
                && self.forward_ok(u, v)
                && self.search(depth + 1)?
            {
                return Ok(true);
            }
            self.unassign(e, c);
        }
        Ok(false)
    }
}

/// Searches for a proper coloring with exactly `k` available colors.
///
/// The edges of the lowest-id maximum-degree vertex are pre-colored
/// `0..d-1`; the rest are tried in order of descending endpoint-degree sum,
/// ties broken by the edge itself, with colors in ascending order.
pub fn find_k_coloring(g: &Graph, k: usize, budget: Budget) -> Result<Option<EdgeColoring>> {
    let delta = g.max_degree();
    if k < delta {
        return Ok(None);
    }
    if k > 128 {
        return Err(Error::InvalidParameters(format!(
            "exact search supports at most 128 colors, got {k}"
        )));
    }
    let m = g.edge_count();
    let mut incident = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let deg = g.degrees();
    let mut search = ColorSearch {
        g,
        k,
        nu: matching::nu(g),
        order: Vec::with_capacity(m),
        used: vec![0; g.n()],
        class_size: vec![0; k],
        colors: vec![UNCOLORED; m],
        incident,
        nodes: 0,
        budget: budget.nodes,
    };
    if m == 0 {
        return Ok(Some(EdgeColoring::new(g.clone(), Vec::new(), k)?));
    }
    let hub = (0..g.n()).find(|&v| deg[v] == delta).unwrap();
    let fixed = search.incident[hub].clone();
    for (c, &e) in fixed.iter().enumerate() {
        search.assign(e, c);
    }
    let mut rest: Vec<usize> = (0..m).filter(|e| !fixed.contains(e)).collect();
    rest.sort_by_key(|&e| {
        let (u, v) = g.edges()[e];
        (std::cmp::Reverse(deg[u] + deg[v]), (u, v))
    });
    search.order = rest;
    if !search.capacity_ok(search.order.len()) || !search.forward_ok(hub, hub) {
        return Ok(None);
    }
    if search.search(0)? {
        let colors = search.colors.clone();
        Ok(Some(EdgeColoring::new(g.clone(), colors, k)?))
    } else {
        Ok(None)
    }
}

/// The exact edge chromatic index, with a witness coloring and the class.
pub fn chromatic_index(g: &Graph, budget: Budget) -> Result<ChromaticIndex> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let delta = g.max_degree();
    if let Some(witness) = find_k_coloring(g, delta, budget)? {
        return Ok(ChromaticIndex {
            chi: delta,
            class: VizingClass::ClassI,
            witness,
        });
    }
    let mut witness = vizing_coloring(g)?;
    if witness.k() != delta + 1 {
        return Err(Error::Violation(format!(
            "no {delta}-coloring exists but the constructive coloring used {} colors",
            witness.k()
        )));
    }
    witness.k = delta + 1;
    Ok(ChromaticIndex {
        chi: delta + 1,
        class: VizingClass::ClassII,
        witness,
    })
}

/// Outcome of enumerating every proper `k`-coloring up to color permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringEnumeration {
    /// Number of colorings visited.
    pub count: u64,
    /// False when the node budget ran out before the enumeration finished.
    pub complete: bool,
}

/// Visits every proper coloring using all of `0..k`, one representative per
/// color permutation (colors appear in first-use order along `g.edges()`).
/// The visitor returns `false` to stop early.
pub fn for_each_k_coloring<F>(
    g: &Graph,
    k: usize,
    budget: Budget,
    mut visit: F,
) -> ColoringEnumeration
where
    F: FnMut(&[usize]) -> bool,
{
    struct State<'a, F> {
        edges: &'a [Edge],
        k: usize,
        colors: Vec<usize>,
        at: HashMap<(usize, usize), ()>,
        nodes: u64,
        budget: u64,
        count: u64,
        stopped: bool,
        out_of_budget: bool,
        visit: F,
    }
    fn rec<F: FnMut(&[usize]) -> bool>(st: &mut State<'_, F>, i: usize, max_used: usize) {
        if st.stopped {
            return;
        }
        if i == st.edges.len() {
            if max_used == st.k {
                st.count += 1;
                if !(st.visit)(&st.colors) {
                    st.stopped = true;
                }
            }
            return;
        }
        let (u, v) = st.edges[i];
        let remaining = st.edges.len() - i;
        // Colors not yet used must still fit in the remaining edges.
        if st.k - max_used > remaining {
            return;
        }
        for c in 0..(max_used + 1).min(st.k) {
            if st.at.contains_key(&(u, c)) || st.at.contains_key(&(v, c)) {
                continue;
            }
            st.nodes += 1;
            if st.nodes > st.budget {
                st.stopped = true;
                st.out_of_budget = true;
                return;
            }
            st.at.insert((u, c), ());
            st.at.insert((v, c), ());
            st.colors.push(c);
            rec(st, i + 1, max_used.max(c + 1));
            st.colors.pop();
            st.at.remove(&(u, c));
            st.at.remove(&(v, c));
            if st.stopped {
                return;
            }
        }
    }
    let mut st = State {
        edges: g.edges(),
        k,
        colors: Vec::new(),
        at: HashMap::new(),
        nodes: 0,
        budget: budget.nodes,
        count: 0,
        stopped: false,
        out_of_budget: false,
        visit: &mut visit,
    };
    rec(&mut st, 0, 0);
    ColoringEnumeration {
        count: st.count,
        complete: !st.out_of_budget,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_proper(c: &EdgeColoring) {
        let g = c.host();
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            for (j, &(x, y)) in g.edges().iter().enumerate() {
                if i < j && (a == x || a == y || b == x || b == y) {
                    assert_ne!(
                        c.colors()[i],
                        c.colors()[j],
                        "edges {:?} {:?}",
                        (a, b),
                        (x, y)
                    );
                }
            }
        }
    }

    #[test]
    fn vizing_examples() {
        let c = vizing_coloring(&Graph::complete(4)).unwrap();
        assert_proper(&c);
        assert!(c.k() <= 4);
        let c = vizing_coloring(&Graph::cycle(7)).unwrap();
        assert_proper(&c);
        assert!(c.k() <= 3);
        let c = vizing_coloring(&Graph::star(5)).unwrap();
        assert_proper(&c);
        assert_eq!(c.k(), 5);
        assert_eq!(vizing_coloring(&Graph::empty(3)), Err(Error::Edgeless));
    }

    #[test]
    fn vizing_on_dense_graphs() {
        for n in 2..12 {
            let g = Graph::complete(n);
            let c = vizing_coloring(&g).unwrap();
            assert_proper(&c);
            assert!(c.k() <= g.max_degree() + 1);
        }
        let c = vizing_coloring(&Graph::petersen()).unwrap();
        assert_proper(&c);
        assert!(c.k() <= 4);
    }

    #[test]
    fn chromatic_index_examples() {
        let b = Budget::default();
        let r = chromatic_index(&Graph::complete(3), b).unwrap();
        assert_eq!((r.chi, r.class), (3, VizingClass::ClassII));
        let r = chromatic_index(&Graph::complete(4), b).unwrap();
        assert_eq!((r.chi, r.class), (3, VizingClass::ClassI));
        assert_proper(&r.witness);
        let r = chromatic_index(&Graph::petersen(), b).unwrap();
        assert_eq!((r.chi, r.class), (4, VizingClass::ClassII));
        assert_proper(&r.witness);
        assert_eq!(chromatic_index(&Graph::empty(2), b), Err(Error::Edgeless));
    }

    #[test]
    fn complete_graph_parity() {
        for n in 2..10 {
            let r = chromatic_index(&Graph::complete(n), Budget::default()).unwrap();
            let expected = if n % 2 == 0 { n - 1 } else { n };
            assert_eq!(r.chi, expected, "K_{n}");
        }
    }

    #[test]
    fn tiny_budget_is_undecided_not_wrong() {
        let r = chromatic_index(&Graph::petersen(), Budget::new(3));
        assert_eq!(r, Err(Error::Undecided { budget: 3 }));
    }

    #[test]
    fn class_size_examples() {
        let b = Budget::default();
        let c = chromatic_index(&Graph::complete(3), b).unwrap().witness;
        assert_eq!(color_class_sizes(&c), vec![1, 1, 1]);
        let c = chromatic_index(&Graph::cycle(6), b).unwrap().witness;
        assert_eq!(color_class_sizes(&c), vec![3, 3]);
        let c = chromatic_index(&Graph::complete(4), b).unwrap().witness;
        assert_eq!(color_class_sizes(&c), vec![2, 2, 2]);
    }

    #[test]
    fn each_class_is_a_matching() {
        let g = Graph::petersen();
        let c = chromatic_index(&g, Budget::default()).unwrap().witness;
        for class in c.classes() {
            let m = matching::Matching::from_edges(g.n(), &class).unwrap();
            assert!(m.is_valid_for(&g));
        }
    }

    #[test]
    fn enumerate_colorings_of_small_graphs() {
        // C_6 has exactly one 2-coloring up to swapping the colors.
        let r = for_each_k_coloring(&Graph::cycle(6), 2, Budget::default(), |_| true);
        assert_eq!(
            r,
            ColoringEnumeration {
                count: 1,
                complete: true
            }
        );
        // K_3: one 3-coloring up to permutation.
        let r = for_each_k_coloring(&Graph::complete(3), 3, Budget::default(), |_| true);
        assert_eq!(r.count, 1);
        // K_4 has a unique 1-factorization.
        let r = for_each_k_coloring(&Graph::complete(4), 3, Budget::default(), |_| true);
        assert_eq!(r.count, 1);
        // P_3 with 3 colors: both edges must differ, but only 2 colors can be used.
        let r = for_each_k_coloring(&Graph::path(3), 3, Budget::default(), |_| true);
        assert_eq!(r.count, 0);
        let r = for_each_k_coloring(&Graph::petersen(), 4, Budget::new(10), |_| true);
        assert!(!r.complete);
    }
}
