//! Exhaustive verification suites over small graphs.
//!
//! Every suite walks a complete family of graphs up to isomorphism, checks
//! one structural claim on each, and records counterexamples. Reports are
//! sorted canonically, so serial and parallel runs agree byte for byte.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::canon::{canonical_form, canonicalize, CanonicalForm};
use super::generate::{enumerate_graphs, EnumFilter};
use super::oracle::brute_friendly;
use crate::coloring::{Budget, VizingClass};
use crate::error::{Error, Result};
use crate::extremal::{
    construct_alternative, construct_attaining, edge_bound, edge_bound_relaxed, ExtremalSpec,
};
use crate::format::{write_edge_list, write_graph6};
use crate::friendly::{check_class2_structure, decompose, is_friendly, Class2Report};
use crate::graph::Graph;
use crate::matching;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: BTreeMap<String, usize>,
    pub examined: u64,
    pub hits: u64,
    pub hit_graphs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<usize>,
    pub violations: Vec<Counterexample>,
    pub partial: bool,
    pub passed: bool,
    /// Wall-clock time; not serialized so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for VerificationReport {
    fn eq(&self, other: &Self) -> bool {
        (
            &self.suite,
            &self.parameters,
            self.examined,
            self.hits,
            &self.hit_graphs,
            self.classes,
            &self.violations,
            self.partial,
            self.passed,
        ) == (
            &other.suite,
            &other.parameters,
            other.examined,
            other.hits,
            &other.hit_graphs,
            other.classes,
            &other.violations,
            other.partial,
            other.passed,
        )
    }
}

/// Graph6 when it fits, otherwise the edge list on one line.
pub fn describe(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| write_edge_list(g).replace('\n', ";"))
}

/// Per-graph outcome merged into a report.
#[derive(Default)]
struct Tally {
    examined: u64,
    hits: Vec<String>,
    violations: Vec<Counterexample>,
    undecided: bool,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.examined += other.examined;
        self.hits.extend(other.hits);
        self.violations.extend(other.violations);
        self.undecided |= other.undecided;
        self
    }

    fn violation(&mut self, g: &Graph, detail: impl Into<String>) {
        self.violations.push(Counterexample {
            graph6: describe(g),
            detail: detail.into(),
        });
    }

    /// Records a library error: budget exhaustion marks the run partial,
    /// anything else is a counterexample.
    fn error(&mut self, g: &Graph, e: Error) {
        match e {
            Error::Undecided { .. } => self.undecided = true,
            other => self.violation(g, other.to_string()),
        }
    }

    fn report(
        mut self,
        suite: &str,
        parameters: &[(&str, usize)],
        started: Instant,
    ) -> VerificationReport {
        self.hits.sort();
        self.violations.sort();
        let partial = self.undecided;
        VerificationReport {
            suite: suite.into(),
            parameters: parameters
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
            examined: self.examined,
            hits: self.hits.len() as u64,
            passed: self.violations.is_empty() && !partial,
            hit_graphs: self.hits,
            classes: None,
            violations: self.violations,
            partial,
            elapsed: started.elapsed(),
        }
    }
}

/// Every graph without isolated vertices and with at least one edge on at
/// most `n_max` vertices, one per isomorphism class.
///
/// Graphs on exactly `n_max` vertices with isolated vertices stripped are in
/// bijection with these.
fn graphs_up_to(n_max: usize, filter: &EnumFilter) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs(n_max, filter)?
        .into_iter()
        .filter(|g| g.edge_count() > 0)
        .map(|g| g.strip_isolated().graph)
        .collect())
}

fn run_each<F>(graphs: &[Graph], check: F) -> Tally
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    graphs
        .par_iter()
        .map(|g| {
            let mut t = Tally {
                examined: 1,
                ..Tally::default()
            };
            check(g, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

/// `|E| ≤ edge_bound(Δ, ν) - tighten` on every graph with at most `n_max`
/// vertices. Hits are graphs attaining the (untightened) bound. A positive
/// `tighten` exists to prove the harness can fail.
pub fn verify_edge_bound(n_max: usize, tighten: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let graphs = graphs_up_to(n_max, &EnumFilter::default())?;
    let tally = run_each(&graphs, |g, t| {
        let (delta, nu, m) = (g.max_degree(), matching::nu(g), g.edge_count());
        let (bound, relaxed) = match (edge_bound(delta, nu), edge_bound_relaxed(delta, nu)) {
            (Ok(b), Ok(r)) => (b, r),
            (Err(e), _) | (_, Err(e)) => return t.error(g, e),
        };
        if num_rational::Ratio::from_integer(bound) > relaxed {
            t.violation(g, format!("bound {bound} exceeds relaxed bound {relaxed}"));
        }
        if m + tighten > bound {
            t.violation(
                g,
                format!(
                    "|E| = {m} > {} for delta = {delta}, nu = {nu}",
                    bound as i64 - tighten as i64
                ),
            );
        }
        if m == bound {
            t.hits.push(describe(g));
        }
    });
    Ok(tally.report(
        "bound",
        &[("max_vertices", n_max), ("tighten", tighten)],
        started,
    ))
}

/// Exhaustive range of [`verify_uniqueness`].
pub const UNIQUENESS_MAX_DELTA: usize = 4;
pub const UNIQUENESS_MAX_NU: usize = 3;

/// Counts isomorphism classes of graphs with maximum degree `delta`,
/// matching number `nu`, no isolated vertices and exactly
/// `edge_bound(delta, nu)` edges.
///
/// The classes are enumerated from a matching skeleton: a maximum matching
/// `{0,1}, {2,3}, ...` on the matched vertices, any further edges among
/// them, and a multiset of neighborhoods for the unmatched vertices (which
/// are independent). When both ends of a matched pair have unmatched
/// neighbors, those must be one and the same vertex, or the matching would
/// augment. Outside the exhaustive range only
/// the two constructive witnesses are checked and the report is partial.
pub fn verify_uniqueness(delta: usize, nu: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    if delta < 2 || nu < 2 {
        return Err(Error::InvalidParameters(format!(
            "uniqueness suite needs delta >= 2 and nu >= 2 (got delta={delta}, nu={nu})"
        )));
    }
    let spec = ExtremalSpec::new(delta, nu)?;
    let params = [("delta", delta), ("nu", nu)];
    let mut tally = Tally::default();

    let mut witnesses = vec![construct_attaining(delta, nu)?];
    if !spec.divisible() {
        witnesses.push(construct_alternative(delta, nu)?);
    }
    let witness_forms: Vec<CanonicalForm> = witnesses.iter().map(canonical_form).collect();

    if delta > UNIQUENESS_MAX_DELTA || nu > UNIQUENESS_MAX_NU {
        for w in &witnesses {
            tally.examined += 1;
            tally.hits.push(describe(w));
        }
        let mut report = tally.report("uniqueness", &params, started);
        report.partial = true;
        report.passed = false;
        return Ok(report);
    }

    let (classes, examined) = skeleton_classes(delta, nu, spec.edge_bound());
    tally.examined = examined;
    tally.hits.extend(classes.values().map(describe));
    for (w, form) in witnesses.iter().zip(&witness_forms) {
        if !classes.contains_key(form) {
            tally.violation(
                w,
                "constructive witness missing from the exhaustive classes",
            );
        }
    }
    if spec.divisible() && classes.len() != 1 {
        let g = &classes
            .values()
            .next()
            .cloned()
            .unwrap_or_else(|| witnesses[0].clone());
        tally.violation(
            g,
            format!("expected exactly 1 class, found {}", classes.len()),
        );
    }
    if !spec.divisible() && classes.len() < 2 {
        tally.violation(
            &witnesses[0],
            format!("expected at least 2 classes, found {}", classes.len()),
        );
    }
    let mut report = tally.report("uniqueness", &params, started);
    report.classes = Some(classes.len());
    Ok(report)
}

/// All attaining classes via the matching skeleton, plus the number of
/// candidate graphs examined.
fn skeleton_classes(
    delta: usize,
    nu: usize,
    target: usize,
) -> (BTreeMap<CanonicalForm, Graph>, u64) {
    let s = 2 * nu;
    let optional: Vec<(usize, usize)> = (0..s)
        .flat_map(|i| (i + 1..s).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i % 2 == 0 && j == i + 1))
        .collect();
    let results: Vec<(Vec<(CanonicalForm, Graph)>, u64)> = (0u64..1 << optional.len())
        .into_par_iter()
        .map(|mask| {
            let mut inner: Vec<(usize, usize)> = (0..nu).map(|i| (2 * i, 2 * i + 1)).collect();
            inner.extend(
                optional
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e),
            );
            let mut deg = vec![0; s];
            for &(u, v) in &inner {
                deg[u] += 1;
                deg[v] += 1;
            }
            if deg.iter().any(|&d| d > delta) || inner.len() > target {
                return (Vec::new(), 0);
            }
            let mut walk = Outside {
                s,
                delta,
                nu,
                inner: &inner,
                deg,
                seen: vec![Vec::new(); s],
                hoods: Vec::new(),
                found: BTreeMap::new(),
                examined: 0,
            };
            walk.extend(target - inner.len(), 1);
            (walk.found.into_iter().collect(), walk.examined)
        })
        .collect();
    let mut classes = BTreeMap::new();
    let mut examined = 0;
    for (found, count) in results {
        examined += count;
        classes.extend(found);
    }
    (classes, examined)
}

/// Chooses neighborhoods (bitmasks over the matched vertices) for the
/// unmatched vertices in non-decreasing order.
struct Outside<'a> {
    s: usize,
    delta: usize,
    nu: usize,
    inner: &'a [(usize, usize)],
    deg: Vec<usize>,
    /// Unmatched vertices adjacent to each matched vertex.
    seen: Vec<Vec<usize>>,
    hoods: Vec<u32>,
    found: BTreeMap<CanonicalForm, Graph>,
    examined: u64,
}

impl Outside<'_> {
    fn pair_ok(&self, a: usize) -> bool {
        let (x, y) = (&self.seen[a], &self.seen[a ^ 1]);
        x.is_empty() || y.is_empty() || (x.len() == 1 && x == y)
    }

    fn extend(&mut self, remaining: usize, from: u32) {
        if remaining == 0 {
            self.finish();
            return;
        }
        let id = self.hoods.len();
        for hood in from..1u32 << self.s {
            let size = hood.count_ones() as usize;
            if size > remaining {
                continue;
            }
            let members: Vec<usize> = (0..self.s).filter(|&v| hood >> v & 1 == 1).collect();
            if members.iter().any(|&v| self.deg[v] == self.delta) {
                continue;
            }
            for &v in &members {
                self.deg[v] += 1;
                self.seen[v].push(id);
            }
            if members.iter().all(|&v| self.pair_ok(v)) {
                self.hoods.push(hood);
                self.extend(remaining - size, hood);
                self.hoods.pop();
            }
            for &v in &members {
                self.deg[v] -= 1;
                self.seen[v].pop();
            }
        }
    }

    fn finish(&mut self) {
        self.examined += 1;
        let n = self.s + self.hoods.len();
        let s = self.s;
        let outer = self.hoods.iter().enumerate().flat_map(|(k, &hood)| {
            (0..s)
                .filter(move |&v| hood >> v & 1 == 1)
                .map(move |v| (v, s + k))
        });
        let g = Graph::new(n, self.inner.iter().copied().chain(outer)).expect("skeleton is simple");
        if g.max_degree() != self.delta || matching::nu(&g) != self.nu {
            return;
        }
        let c = canonicalize(&g);
        self.found.entry(c.form).or_insert(c.graph);
    }
}

/// Brute-force partition search against the `|E| = χ'ν` criterion on every
/// graph without isolated vertices having at most `max_vertices` vertices
/// and at most `max_edges` edges.
///
/// Graphs are assembled as multisets of connected components, so the vertex
/// count may exceed the enumeration cap.
pub fn verify_friendly_criterion(
    max_vertices: usize,
    max_edges: usize,
    budget: Budget,
) -> Result<VerificationReport> {
    let started = Instant::now();
    if max_edges > 16 {
        return Err(Error::InvalidParameters(format!(
            "friendly suite brute force is limited to 16 edges, got {max_edges}"
        )));
    }
    let graphs = graphs_by_components(max_vertices, max_edges)?;
    let tally = run_each(&graphs, |g, t| {
        let brute = brute_friendly(g);
        match is_friendly(g, budget) {
            Ok(cert) => {
                if cert.verdict != brute {
                    t.violation(
                        g,
                        format!(
                            "criterion says {}, partition search says {brute}",
                            cert.verdict
                        ),
                    );
                }
                if cert.verdict {
                    t.hits.push(describe(g));
                }
            }
            Err(e) => t.error(g, e),
        }
    });
    Ok(tally.report(
        "friendly",
        &[("max_edges", max_edges), ("max_vertices", max_vertices)],
        started,
    ))
}

/// Graphs without isolated vertices, up to isomorphism, with bounded vertex
/// and edge counts, built from connected pieces.
fn graphs_by_components(max_vertices: usize, max_edges: usize) -> Result<Vec<Graph>> {
    let piece_cap = max_vertices.min(max_edges + 1);
    let filter = EnumFilter {
        max_edges: Some(max_edges),
        connected: true,
        ..EnumFilter::default()
    };
    let mut pieces: Vec<Graph> = Vec::new();
    for n in 2..=piece_cap {
        pieces.extend(enumerate_graphs(n, &filter)?);
    }
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    assemble(&pieces, 0, max_vertices, max_edges, &mut chosen, &mut out);
    Ok(out)
}

fn assemble(
    pieces: &[Graph],
    from: usize,
    vertices_left: usize,
    edges_left: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Graph>,
) {
    if !chosen.is_empty() {
        out.push(Graph::disjoint_union(chosen.iter().map(|&i| &pieces[i])));
    }
    for i in from..pieces.len() {
        let p = &pieces[i];
        if p.n() <= vertices_left && p.edge_count() <= edges_left {
            chosen.push(i);
            assemble(
                pieces,
                i,
                vertices_left - p.n(),
                edges_left - p.edge_count(),
                chosen,
                out,
            );
            chosen.pop();
        }
    }
}

/// Every friendly class II graph with `Δ, ν ≥ 2` on at most `n_max`
/// vertices is a disjoint union of `K_{Δ+1}` with `Δ` even and `Δ/2 | ν`.
///
/// Only graphs with `|E| = (Δ+1)ν` can be friendly of class II, so the
/// chromatic index is computed for those alone.
pub fn verify_class2_theorem(n_max: usize, budget: Budget) -> Result<VerificationReport> {
    let started = Instant::now();
    let graphs = graphs_up_to(n_max, &EnumFilter::default())?;
    let tally = run_each(&graphs, |g, t| {
        let (delta, nu) = (g.max_degree(), matching::nu(g));
        if delta < 2 || nu < 2 || g.edge_count() != (delta + 1) * nu {
            return;
        }
        match check_class2_structure(g, budget) {
            Ok(Class2Report::Pass { .. }) => t.hits.push(describe(g)),
            Ok(Class2Report::Fail { reason, .. }) => t.violation(g, reason),
            Ok(Class2Report::NotApplicable { .. }) => {}
            Err(e) => t.error(g, e),
        }
    });
    Ok(tally.report("class2", &[("max_vertices", n_max)], started))
}

/// Every friendly class I graph on at most `n_max` vertices decomposes
/// into stars and factor-critical parts with all runtime checks passing.
///
/// Only graphs with `|E| = Δν` can be friendly of class I.
pub fn verify_decomposition_theorem(n_max: usize, budget: Budget) -> Result<VerificationReport> {
    let started = Instant::now();
    let graphs = graphs_up_to(n_max, &EnumFilter::default())?;
    let tally = run_each(&graphs, |g, t| {
        if g.edge_count() != g.max_degree() * matching::nu(g) {
            return;
        }
        let cert = match is_friendly(g, budget) {
            Ok(c) => c,
            Err(e) => return t.error(g, e),
        };
        if !cert.verdict || cert.class != VizingClass::ClassI {
            return;
        }
        match decompose(g, budget) {
            Ok(_) => t.hits.push(describe(g)),
            Err(e) => t.error(g, e),
        }
    });
    Ok(tally.report("decomposition", &[("max_vertices", n_max)], started))
}

/// Canonical graph6 strings of a set of graphs, for comparing hit sets.
pub fn canonical_graph6_set<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> BTreeSet<String> {
    graphs
        .into_iter()
        .map(|g| describe(&canonicalize(g).graph))
        .collect()
}

/// Canonically relabels hit strings so they can be compared with
/// [`canonical_graph6_set`].
pub fn canonical_hits(report: &VerificationReport) -> BTreeSet<String> {
    report
        .hit_graphs
        .iter()
        .filter_map(|s| crate::format::parse_graph6(s.as_bytes()).ok())
        .map(|g| describe(&canonicalize(&g).graph))
        .collect()
}
