//! Canonical labeling by equitable refinement and individualization.
//!
//! The search explores a tree of ordered partitions: each node is refined to
//! an equitable partition, and the first non-singleton cell is split by
//! individualizing each of its vertices in turn. Leaves are discrete
//! partitions, i.e. vertex orderings; the canonical form is the
//! lexicographically largest relabeled adjacency matrix over all leaves.
//! Subtrees that are images of explored ones under a discovered automorphism
//! are skipped.

use std::cmp::Ordering;

use crate::graph::Graph;

/// Canonical encoding of a graph: equal bytes iff the graphs are isomorphic.
///
/// Layout: the vertex count as 4 big-endian bytes, then the upper triangle of
/// the canonically relabeled adjacency matrix packed row by row, 8 bits per
/// byte, most significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub bytes: Vec<u8>,
}

/// The canonical form together with the labeling that produces it.
#[derive(Debug, Clone)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `order[i]` is the input vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// The input graph relabeled by `order`.
    pub graph: Graph,
}

type Matrix = Vec<Vec<u64>>;

struct Search<'a> {
    n: usize,
    words: usize,
    adj: &'a Matrix,
    first: Option<(Matrix, Vec<usize>)>,
    best: Option<(Matrix, Vec<usize>)>,
    first_path: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
}

enum Outcome {
    Continue,
    /// Abandon the current path back up to this depth.
    Jump(usize),
}

fn has(adj: &Matrix, u: usize, v: usize) -> bool {
    adj[u][v / 64] >> (v % 64) & 1 == 1
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

impl Search<'_> {
    /// Splits cells by neighbor counts into every other cell until stable.
    /// All choices depend only on counts and cell positions, so the result
    /// is invariant under relabeling.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let mut changed = false;
            let mut w = 0;
            while w < cells.len() {
                let mut mask = vec![0u64; self.words];
                for &v in &cells[w] {
                    mask[v / 64] |= 1 << (v % 64);
                }
                let mut x = 0;
                while x < cells.len() {
                    if cells[x].len() > 1 {
                        let count = |v: usize| -> u32 {
                            self.adj[v]
                                .iter()
                                .zip(&mask)
                                .map(|(a, b)| (a & b).count_ones())
                                .sum()
                        };
                        let mut keyed: Vec<(u32, usize)> =
                            cells[x].iter().map(|&v| (count(v), v)).collect();
                        if keyed.iter().any(|&(c, _)| c != keyed[0].0) {
                            keyed.sort_by_key(|&(c, _)| c);
                            let mut parts: Vec<Vec<usize>> = Vec::new();
                            let mut last = None;
                            for (c, v) in keyed {
                                if last != Some(c) {
                                    parts.push(Vec::new());
                                    last = Some(c);
                                }
                                parts.last_mut().unwrap().push(v);
                            }
                            let added = parts.len() - 1;
                            cells.splice(x..=x, parts);
                            if w > x {
                                w += added;
                            }
                            changed = true;
                        }
                    }
                    x += 1;
                }
                w += 1;
            }
            if !changed {
                return;
            }
        }
    }

    fn relabel(&self, order: &[usize]) -> Matrix {
        let mut m = vec![vec![0u64; self.words]; self.n];
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate() {
                if has(self.adj, u, v) {
                    // Column 0 in the most significant position so that
                    // row comparison is lexicographic by column.
                    let bit = 63 - j % 64;
                    m[i][j / 64] |= 1 << bit;
                }
            }
        }
        m
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Outcome {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let form = self.relabel(&order);
        let Some((first_form, first_order)) = &self.first else {
            self.first = Some((form.clone(), order.clone()));
            self.best = Some((form, order));
            return Outcome::Continue;
        };
        if form == *first_form {
            let mut gamma = vec![0; self.n];
            for i in 0..self.n {
                gamma[first_order[i]] = order[i];
            }
            self.automorphisms.push(gamma);
            // The current subtree is the image of the first path's subtree.
            return Outcome::Jump(self.first_path_depth(path));
        }
        let (best_form, best_order) = self.best.as_ref().unwrap();
        match form.cmp(best_form) {
            Ordering::Greater => self.best = Some((form, order)),
            Ordering::Equal => {
                let mut gamma = vec![0; self.n];
                for i in 0..self.n {
                    gamma[best_order[i]] = order[i];
                }
                self.automorphisms.push(gamma);
            }
            Ordering::Less => {}
        }
        Outcome::Continue
    }

    /// Length of the common prefix between `path` and the first leaf's path.
    fn first_path_depth(&self, path: &[usize]) -> usize {
        let first = &self.first_path;
        path.iter().zip(first).take_while(|(a, b)| a == b).count()
    }

    fn explore(&mut self, mut cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Outcome {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            if self.first.is_none() {
                self.first_path = path.clone();
            }
            return self.leaf(&cells, path);
        };
        let depth = path.len();
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, path) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(candidates.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            let outcome = self.explore(child, path);
            path.pop();
            explored.push(v);
            if let Outcome::Jump(to) = outcome {
                if to < depth {
                    return outcome;
                }
            }
        }
        Outcome::Continue
    }

    /// Is `v` in the orbit of an explored sibling under the automorphisms
    /// found so far that fix the current path pointwise?
    fn equivalent_to_explored(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        for gamma in &self.automorphisms {
            if path.iter().all(|&p| gamma[p] == p) {
                for (x, &gx) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn run(g: &Graph) -> (Matrix, Vec<usize>) {
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut adj = vec![vec![0u64; words]; n];
        for &(u, v) in g.edges() {
            adj[u][v / 64] |= 1 << (v % 64);
            adj[v][u / 64] |= 1 << (u % 64);
        }
        let mut search = Search {
            n,
            words,
            adj: &adj,
            first: None,
            best: None,
            automorphisms: Vec::new(),
            first_path: Vec::new(),
        };
        if n == 0 {
            return (Vec::new(), Vec::new());
        }
        // Start from the degree partition so refinement has a head start;
        // cells ordered by ascending degree.
        let mut by_degree: Vec<(usize, usize)> =
            (0..n).map(|v| (g.degree(v).unwrap(), v)).collect();
        by_degree.sort();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut last = None;
        for (d, v) in by_degree {
            if last != Some(d) {
                cells.push(Vec::new());
                last = Some(d);
            }
            cells.last_mut().unwrap().push(v);
        }
        search.explore(cells, &mut Vec::new());
        search.best.unwrap()
    }
}

fn pack(n: usize, m: &Matrix) -> Vec<u8> {
    let mut bytes = Vec::with_capacity(4 + n * n / 16);
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, row) in m.iter().enumerate() {
        for j in i + 1..n {
            let bit = (row[j / 64] >> (63 - j % 64)) & 1;
            acc = (acc << 1) | bit as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    bytes
}

/// Canonical form plus labeling.
pub fn canonicalize(g: &Graph) -> Canonical {
    let (matrix, order) = Search::run(g);
    let n = g.n();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| crate::graph::edge(position[u], position[v]));
    let graph = Graph::new(n, edges).expect("relabeling preserves simplicity");
    Canonical {
        form: CanonicalForm {
            bytes: pack(n, &matrix),
        },
        order,
        graph,
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonicalize(g).form
}

/// Isomorphism test: cheap invariants first, then canonical forms.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db || a.component_count() != b.component_count() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}
