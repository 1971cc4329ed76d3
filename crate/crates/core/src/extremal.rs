//! The edge bound in terms of maximum degree and matching number, the
//! connected extremal graph `C(Δ)`, and graphs attaining the bound.
//!
//! For `Δ ≥ 1`, `ν ≥ 1` every simple graph satisfies
//!
//! ```text
//! |E| ≤ Δν + ⌊ν/⌈Δ/2⌉⌋·⌊Δ/2⌋ ≤ ν(Δ + ⌊Δ/2⌋/⌈Δ/2⌉)
//! ```
//!
//! and the attaining graph is unique up to isomorphism (for `Δ, ν ≥ 2`)
//! exactly when `⌈Δ/2⌉` divides `ν`.

use num_rational::Ratio;

use crate::enumeration::are_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::matching::{self, is_factor_critical};

/// Parameters of an attaining construction.
///
/// `half = ⌈Δ/2⌉`, `copies = ⌊ν/half⌋` and `t = ν - half·copies`, so
/// `0 ≤ t < half` and `t = 0` iff `half` divides `ν`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalSpec {
    pub delta: usize,
    pub nu: usize,
    pub half: usize,
    pub copies: usize,
    pub t: usize,
}

impl ExtremalSpec {
    pub fn new(delta: usize, nu: usize) -> Result<ExtremalSpec> {
        if delta == 0 || nu == 0 {
            return Err(Error::InvalidParameters(format!(
                "delta and nu must be positive (got delta={delta}, nu={nu})"
            )));
        }
        let half = delta.div_ceil(2);
        let copies = nu / half;
        Ok(ExtremalSpec {
            delta,
            nu,
            half,
            copies,
            t: nu - half * copies,
        })
    }

    pub fn divisible(&self) -> bool {
        self.t == 0
    }

    pub fn edge_bound(&self) -> usize {
        self.delta * self.nu + self.copies * (self.delta / 2)
    }
}

/// `Δν + ⌊ν/⌈Δ/2⌉⌋·⌊Δ/2⌋`.
pub fn edge_bound(delta: usize, nu: usize) -> Result<usize> {
    Ok(ExtremalSpec::new(delta, nu)?.edge_bound())
}

/// `ν(Δ + ⌊Δ/2⌋/⌈Δ/2⌉)` as an exact fraction.
pub fn edge_bound_relaxed(delta: usize, nu: usize) -> Result<Ratio<usize>> {
    let spec = ExtremalSpec::new(delta, nu)?;
    let half = spec.half;
    Ok(Ratio::new(nu * (delta * half + delta / 2), half))
}

fn check_stats(g: &Graph, delta: usize, nu: usize, m: usize, what: &str) -> Result<()> {
    let got = (g.max_degree(), matching::nu(g), g.edge_count());
    if got != (delta, nu, m) {
        return Err(Error::Violation(format!(
            "{what}: expected (Δ, ν, |E|) = ({delta}, {nu}, {m}), got {got:?}"
        )));
    }
    if !g.isolated_vertices().is_empty() {
        return Err(Error::Violation(format!("{what}: has isolated vertices")));
    }
    Ok(())
}

/// The connected graph with `ν = ⌈Δ/2⌉`, maximum degree `Δ` and
/// `⌊(2⌈Δ/2⌉+1)Δ/2⌋` edges.
///
/// Even `Δ`: `K_{Δ+1}`. Odd `Δ = 2j-1`: `K_{2j}` on `0..2j` minus the
/// matching `{2i, 2i+1}`, plus an apex `2j` joined to `0..2j-1`.
pub fn construct_c(delta: usize) -> Result<Graph> {
    if delta < 2 {
        return Err(Error::InvalidParameters(format!(
            "C(delta) needs delta >= 2, got {delta}"
        )));
    }
    let g = if delta.is_multiple_of(2) {
        Graph::complete(delta + 1)
    } else {
        let order = delta + 1;
        let apex = order;
        let mut edges: Vec<Edge> = Vec::new();
        for u in 0..order {
            for v in u + 1..order {
                if !(u % 2 == 0 && v == u + 1) {
                    edges.push((u, v));
                }
            }
        }
        edges.extend((0..order - 1).map(|u| (u, apex)));
        Graph::new(order + 1, edges)?
    };
    let half = delta.div_ceil(2);
    check_stats(&g, delta, half, (2 * half + 1) * delta / 2, "C(delta)")?;
    if !is_factor_critical(&g) {
        return Err(Error::Violation("C(delta) is not factor-critical".into()));
    }
    Ok(g)
}

/// A graph with maximum degree `delta`, matching number `nu` and exactly
/// `edge_bound(delta, nu)` edges: `t` stars `K_{1,Δ}` followed by
/// `⌊ν/⌈Δ/2⌉⌋` copies of `C(Δ)`; `ν` disjoint edges when `Δ = 1`.
///
/// For `ν = 1` this yields `K_3` at `Δ = 2` and `K_{1,Δ}` for `Δ ≥ 3`.
/// At `Δ = 3` the triangle attains the bound too, so that case is not unique.
pub fn construct_attaining(delta: usize, nu: usize) -> Result<Graph> {
    let spec = ExtremalSpec::new(delta, nu)?;
    let g = if delta == 1 {
        let k2 = Graph::complete(2);
        Graph::disjoint_union(std::iter::repeat_n(&k2, nu))
    } else {
        let star = Graph::star(delta);
        let c = construct_c(delta)?;
        Graph::disjoint_union(
            std::iter::repeat_n(&star, spec.t).chain(std::iter::repeat_n(&c, spec.copies)),
        )
    };
    check_stats(&g, delta, nu, spec.edge_bound(), "attaining graph")?;
    Ok(g)
}

/// A second attaining graph, not isomorphic to [`construct_attaining`],
/// when `⌈Δ/2⌉` does not divide `ν`.
///
/// With `t ≥ 2` stars, one edge of the first star is moved so that its
/// center joins a leaf of the second star (the orphaned leaf is dropped).
/// With `t = 1`, the star and one copy of `C(Δ)` are replaced by a single
/// factor-critical graph on `2⌈Δ/2⌉+3` vertices with the same number of
/// edges: a spanning odd cycle plus chords under the degree cap.
pub fn construct_alternative(delta: usize, nu: usize) -> Result<Graph> {
    let spec = ExtremalSpec::new(delta, nu)?;
    if delta < 2 || nu < 2 {
        return Err(Error::InvalidParameters(format!(
            "alternative construction needs delta >= 2 and nu >= 2 (got delta={delta}, nu={nu})"
        )));
    }
    if spec.divisible() {
        return Err(Error::UniqueExtremal { delta, nu });
    }
    let attaining = construct_attaining(delta, nu)?;
    let c = construct_c(delta)?;
    let g = if spec.t >= 2 {
        // Star 0 has center 0 and leaves 1..=Δ; star 1 has center Δ+1.
        let moved_leaf = delta;
        let target_leaf = delta + 2;
        let edges = attaining
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != (0, moved_leaf))
            .chain(std::iter::once(edge(0, target_leaf)));
        Graph::new(attaining.n(), edges)?.strip_isolated().graph
    } else {
        let merged = coalesce(delta, spec.half, c.edge_count())?;
        Graph::disjoint_union(
            std::iter::once(&merged).chain(std::iter::repeat_n(&c, spec.copies - 1)),
        )
    };
    check_stats(&g, delta, nu, spec.edge_bound(), "alternative graph")?;
    if are_isomorphic(&g, &attaining) {
        return Err(Error::Violation(
            "alternative graph is isomorphic to the standard construction".into(),
        ));
    }
    Ok(g)
}

/// Factor-critical graph on `2(half+1)+1` vertices with `delta + c_edges`
/// edges and maximum degree at most `delta`.
fn coalesce(delta: usize, half: usize, c_edges: usize) -> Result<Graph> {
    let n = 2 * (half + 1) + 1;
    let target = delta + c_edges;
    if target > n * delta / 2 || target < n {
        return Err(Error::Violation(format!(
            "no graph on {n} vertices with {target} edges fits degree cap {delta}"
        )));
    }
    let mut search = ChordSearch {
        n,
        cap: delta,
        adj: vec![vec![false; n]; n],
        deg: vec![2; n],
        chords: Vec::new(),
        slack: n * delta - 2 * target,
    };
    for i in 0..n {
        let j = (i + 1) % n;
        search.adj[i][j] = true;
        search.adj[j][i] = true;
    }
    if !search.run(target - n, 0) {
        return Err(Error::Violation(format!(
            "chord search failed for {n} vertices, {target} edges, cap {delta}"
        )));
    }
    let cycle = (0..n).map(|i| (i, (i + 1) % n));
    let g = Graph::new(n, cycle.chain(search.chords.iter().copied()))?;
    if !is_factor_critical(&g) || g.max_degree() > delta || g.edge_count() != target {
        return Err(Error::Violation(
            "coalesced component failed verification".into(),
        ));
    }
    Ok(g)
}

/// Adds chords to a spanning cycle until `needed` more edges are placed.
///
/// The lowest-id vertex with spare degree is served first, pairing it with
/// non-adjacent vertices of largest spare degree; a vertex may be left
/// short only while the total slack allows it.
struct ChordSearch {
    n: usize,
    cap: usize,
    adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
    chords: Vec<Edge>,
    slack: usize,
}

impl ChordSearch {
    fn run(&mut self, needed: usize, from: usize) -> bool {
        if needed == 0 {
            return true;
        }
        let Some(u) = (from..self.n).find(|&u| self.deg[u] < self.cap) else {
            return false;
        };
        let mut partners: Vec<usize> = (0..self.n)
            .filter(|&v| v != u && !self.adj[u][v] && self.deg[v] < self.cap)
            .collect();
        partners.sort_by_key(|&v| (self.deg[v], v));
        for v in partners {
            self.adj[u][v] = true;
            self.adj[v][u] = true;
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chords.push(edge(u, v));
            if self.run(needed - 1, u) {
                return true;
            }
            self.chords.pop();
            self.deg[u] -= 1;
            self.deg[v] -= 1;
            self.adj[u][v] = false;
            self.adj[v][u] = false;
        }
        // Leave `u` short and move on, paying its missing degree from slack.
        let short = self.cap - self.deg[u];
        if short <= self.slack {
            self.slack -= short;
            let saved = self.deg[u];
            self.deg[u] = self.cap;
            let ok = self.run(needed, u + 1);
            self.deg[u] = saved;
            self.slack += short;
            return ok;
        }
        false
    }
}
