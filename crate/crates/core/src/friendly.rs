//! Friendliness: partitions of the edge set into maximum matchings.
//!
//! A graph is friendly iff `|E| = χ'·ν`. Then every optimal coloring is
//! balanced, a class II friendly graph is a disjoint union of `K_{Δ+1}`,
//! and a class I friendly graph splits into stars `K_{1,Δ}` and
//! factor-critical friendly pieces with the same chromatic index.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::coloring::{chromatic_index, for_each_k_coloring, Budget, VizingClass};
use crate::error::{Error, Result};
use crate::format::write_graph6;
use crate::graph::{Edge, Graph, Subgraph};
use crate::matching::{self, essential_vertices, is_factor_critical};

/// Why a graph is not friendly: `m < chi·nu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FriendlyWitness {
    pub m: usize,
    pub chi: usize,
    pub nu: usize,
    pub chi_nu: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriendlyCertificate {
    pub verdict: bool,
    pub chi: usize,
    pub class: VizingClass,
    pub nu: usize,
    pub m: usize,
    /// On a positive verdict, `chi` maximum matchings partitioning the edges.
    pub partition: Option<Vec<Vec<Edge>>>,
    pub witness: Option<FriendlyWitness>,
}

/// Decides friendliness. Rejects edgeless graphs and isolated vertices.
pub fn is_friendly(g: &Graph, budget: Budget) -> Result<FriendlyCertificate> {
    let isolated = g.isolated_vertices();
    if g.edge_count() > 0 && !isolated.is_empty() {
        return Err(Error::IsolatedVertices(isolated));
    }
    friendly_ignoring_isolated(g, budget)
}

/// [`is_friendly`] without the isolated-vertex check; isolated vertices do
/// not affect `ν`, `χ'` or `|E|`.
pub(crate) fn friendly_ignoring_isolated(g: &Graph, budget: Budget) -> Result<FriendlyCertificate> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let ci = chromatic_index(g, budget)?;
    let nu = matching::nu(g);
    let m = g.edge_count();
    let verdict = m == ci.chi * nu;
    let mut cert = FriendlyCertificate {
        verdict,
        chi: ci.chi,
        class: ci.class,
        nu,
        m,
        partition: None,
        witness: None,
    };
    if verdict {
        let parts = ci.witness.classes();
        check_partition(g, &parts, nu)?;
        cert.partition = Some(parts);
    } else {
        if m > ci.chi * nu {
            return Err(Error::Violation(format!(
                "{m} edges exceed chi*nu = {}",
                ci.chi * nu
            )));
        }
        cert.witness = Some(FriendlyWitness {
            m,
            chi: ci.chi,
            nu,
            chi_nu: ci.chi * nu,
        });
    }
    Ok(cert)
}

/// Every part is a matching of size `nu`, and the parts partition `E(g)`.
fn check_partition(g: &Graph, parts: &[Vec<Edge>], nu: usize) -> Result<()> {
    let mut seen = BTreeSet::new();
    for (i, part) in parts.iter().enumerate() {
        if part.len() != nu {
            return Err(Error::Violation(format!(
                "optimal color class {i} has {} edges, expected nu = {nu}",
                part.len()
            )));
        }
        let mut covered = BTreeSet::new();
        for &(u, v) in part {
            if !g.has_edge(u, v) || !covered.insert(u) || !covered.insert(v) || !seen.insert((u, v))
            {
                return Err(Error::Violation(format!(
                    "class {i} is not a matching of new edges"
                )));
            }
        }
    }
    if seen.len() != g.edge_count() {
        return Err(Error::Violation("classes do not cover every edge".into()));
    }
    Ok(())
}

/// Result of enumerating all optimal colorings of a friendly graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalancedReport {
    pub chi: usize,
    pub nu: usize,
    pub colorings: u64,
    /// False when the budget ran out; `colorings` then counts a prefix.
    pub complete: bool,
    /// Distinct descending class-size vectors seen.
    pub class_sizes: Vec<Vec<usize>>,
    /// Class sizes of the first unbalanced coloring, if any.
    pub unbalanced: Option<Vec<usize>>,
}

impl BalancedReport {
    pub fn balanced(&self) -> bool {
        self.unbalanced.is_none()
    }
}

/// Enumerates every proper `χ'`-coloring up to color permutation and checks
/// that all classes have size `ν`.
pub fn check_balanced_colorings(g: &Graph, budget: Budget) -> Result<BalancedReport> {
    let cert = is_friendly(g, budget)?;
    if !cert.verdict {
        return Err(Error::NotFriendly);
    }
    let (chi, nu) = (cert.chi, cert.nu);
    let mut sizes_seen = BTreeSet::new();
    let mut unbalanced = None;
    let enumeration = for_each_k_coloring(g, chi, budget, |colors| {
        let mut sizes = vec![0usize; chi];
        for &c in colors {
            sizes[c] += 1;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        if sizes.iter().any(|&s| s != nu) && unbalanced.is_none() {
            unbalanced = Some(sizes.clone());
        }
        sizes_seen.insert(sizes);
        true
    });
    Ok(BalancedReport {
        chi,
        nu,
        colorings: enumeration.count,
        complete: enumeration.complete,
        class_sizes: sizes_seen.into_iter().collect(),
        unbalanced,
    })
}

/// Outcome of checking the class II structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Class2Report {
    /// The hypotheses (friendly, class II, `Δ ≥ 2`, `ν ≥ 2`) do not hold.
    NotApplicable { reason: String },
    Pass {
        delta: usize,
        nu: usize,
        components: usize,
    },
    /// A counterexample; `component` is the offending component in graph6.
    Fail {
        reason: String,
        component: Option<String>,
    },
}

impl Class2Report {
    pub fn is_fail(&self) -> bool {
        matches!(self, Class2Report::Fail { .. })
    }
}

/// For a friendly class II graph with `Δ, ν ≥ 2`: `Δ` is even, `Δ/2`
/// divides `ν`, and every component is `K_{Δ+1}`.
pub fn check_class2_structure(g: &Graph, budget: Budget) -> Result<Class2Report> {
    let cert = is_friendly(g, budget)?;
    let not_applicable = |reason: &str| {
        Ok(Class2Report::NotApplicable {
            reason: reason.into(),
        })
    };
    if !cert.verdict {
        return not_applicable("graph is not friendly");
    }
    if cert.class != VizingClass::ClassII {
        return not_applicable("graph is class I");
    }
    let (delta, nu) = (g.max_degree(), cert.nu);
    if delta < 2 {
        return not_applicable("maximum degree below 2");
    }
    if nu < 2 {
        return not_applicable("matching number below 2");
    }
    class2_conclusions(g, delta, nu)
}

fn class2_conclusions(g: &Graph, delta: usize, nu: usize) -> Result<Class2Report> {
    let fail =
        |reason: String, component: Option<String>| Ok(Class2Report::Fail { reason, component });
    if !delta.is_multiple_of(2) {
        return fail(format!("maximum degree {delta} is odd"), None);
    }
    if !nu.is_multiple_of(delta / 2) {
        return fail(format!("{} does not divide nu = {nu}", delta / 2), None);
    }
    let components = g.components();
    for c in &components {
        let h = &c.graph;
        if h.n() != delta + 1 || h.edge_count() != (delta + 1) * delta / 2 {
            return fail(
                format!(
                    "component on vertices {:?} is not K_{}",
                    c.vertices,
                    delta + 1
                ),
                write_graph6(h).ok(),
            );
        }
    }
    if components.len() * delta != 2 * nu {
        return fail(
            format!(
                "{} components, expected 2nu/delta = {}",
                components.len(),
                2 * nu / delta
            ),
            None,
        );
    }
    Ok(Class2Report::Pass {
        delta,
        nu,
        components: components.len(),
    })
}

/// One piece of a class I decomposition, in the input's vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Part {
    Star { center: usize, leaves: Vec<usize> },
    FactorCritical(Subgraph),
}

impl Part {
    pub fn edges(&self) -> Vec<Edge> {
        match self {
            Part::Star { center, leaves } => leaves
                .iter()
                .map(|&l| crate::graph::edge(*center, l))
                .collect(),
            Part::FactorCritical(s) => s.graph.edges().iter().map(|&e| s.lift_edge(e)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<Part>,
    /// Essential vertices in the order they were stripped.
    pub removal_order: Vec<usize>,
}

/// Splits a friendly class I graph into stars `K_{1,Δ}` and factor-critical
/// friendly parts with the same chromatic index.
///
/// While the working graph has an essential vertex, the lowest-id one is
/// removed as a star. Every structural claim is re-checked at runtime; a
/// failed check is reported as [`Error::Violation`].
pub fn decompose(g: &Graph, budget: Budget) -> Result<Decomposition> {
    let cert = is_friendly(g, budget)?;
    if cert.class == VizingClass::ClassII {
        return Err(Error::ClassTwo);
    }
    if !cert.verdict {
        return Err(Error::NotFriendly);
    }
    let chi = cert.chi;
    let delta = g.max_degree();
    let mut parts = Vec::new();
    let mut removal_order = Vec::new();
    let mut work = g.clone();
    let mut work_chi = chi;
    while let Some(&x) = essential_vertices(&work).first() {
        let leaves = work.neighbors(x).to_vec();
        if leaves.len() != work_chi || leaves.len() != delta {
            return Err(Error::Violation(format!(
                "essential vertex {x} has degree {} but chi' = {work_chi}, delta = {delta}",
                leaves.len()
            )));
        }
        parts.push(Part::Star { center: x, leaves });
        removal_order.push(x);
        work = work.without_edges_at(x);
        if work.edge_count() == 0 {
            break;
        }
        let rest = friendly_ignoring_isolated(&work, budget)?;
        if !rest.verdict || rest.chi != chi {
            return Err(Error::Violation(format!(
                "after removing {x} the remainder is {} with chi' = {} (expected friendly, chi' = {chi})",
                if rest.verdict { "friendly" } else { "not friendly" },
                rest.chi
            )));
        }
        work_chi = rest.chi;
    }
    for c in work.components() {
        if c.graph.edge_count() == 0 {
            continue;
        }
        if !is_factor_critical(&c.graph) {
            return Err(Error::Violation(format!(
                "remaining component on {:?} is not factor-critical",
                c.vertices
            )));
        }
        let piece = friendly_ignoring_isolated(&c.graph, budget)?;
        if !piece.verdict || piece.chi != chi {
            return Err(Error::Violation(format!(
                "remaining component on {:?} is not friendly with chi' = {chi}",
                c.vertices
            )));
        }
        parts.push(Part::FactorCritical(c));
    }
    let mut all: Vec<Edge> = parts.iter().flat_map(Part::edges).collect();
    all.sort_unstable();
    if all.as_slice() != g.edges() {
        return Err(Error::Violation(
            "parts do not partition the edge set".into(),
        ));
    }
    Ok(Decomposition {
        parts,
        removal_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn friendly_examples() {
        assert!(is_friendly(&Graph::star(7), b()).unwrap().verdict);
        assert!(is_friendly(&Graph::cycle(6), b()).unwrap().verdict);
        let p4 = is_friendly(&Graph::path(4), b()).unwrap();
        assert!(!p4.verdict);
        assert_eq!(
            p4.witness,
            Some(FriendlyWitness {
                m: 3,
                chi: 2,
                nu: 2,
                chi_nu: 4
            })
        );
        assert!(p4.partition.is_none());
        let mixed = Graph::disjoint_union([&Graph::complete(3), &Graph::star(4)]);
        assert!(!is_friendly(&mixed, b()).unwrap().verdict);
    }

    #[test]
    fn friendly_partition_is_certified() {
        let cert = is_friendly(&Graph::complete(5), b()).unwrap();
        assert!(cert.verdict);
        assert_eq!((cert.chi, cert.nu), (5, 2));
        let parts = cert.partition.unwrap();
        assert_eq!(parts.len(), 5);
        assert!(parts.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn friendly_input_errors() {
        assert_eq!(is_friendly(&Graph::empty(3), b()), Err(Error::Edgeless));
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(is_friendly(&g, b()), Err(Error::IsolatedVertices(vec![2])));
    }

    #[test]
    fn balanced_examples() {
        let r = check_balanced_colorings(&Graph::complete(3), b()).unwrap();
        assert_eq!(r.class_sizes, vec![vec![1, 1, 1]]);
        assert_eq!(r.colorings, 1);
        let r = check_balanced_colorings(&Graph::cycle(6), b()).unwrap();
        assert_eq!(r.class_sizes, vec![vec![3, 3]]);
        assert_eq!(r.colorings, 1);
        assert!(r.complete && r.balanced());
        let r = check_balanced_colorings(&Graph::cycle(4), b()).unwrap();
        assert_eq!(r.class_sizes, vec![vec![2, 2]]);
        assert_eq!(
            check_balanced_colorings(&Graph::path(4), b()),
            Err(Error::NotFriendly)
        );
    }

    #[test]
    fn class2_examples() {
        let k5 = Graph::complete(5);
        let r = check_class2_structure(&Graph::disjoint_union([&k5, &k5]), b()).unwrap();
        assert_eq!(
            r,
            Class2Report::Pass {
                delta: 4,
                nu: 4,
                components: 2
            }
        );
        let k3 = Graph::complete(3);
        let r = check_class2_structure(&Graph::disjoint_union([&k3, &k3]), b()).unwrap();
        assert_eq!(
            r,
            Class2Report::Pass {
                delta: 2,
                nu: 2,
                components: 2
            }
        );
        let r = check_class2_structure(&k5, b()).unwrap();
        assert_eq!(
            r,
            Class2Report::Pass {
                delta: 4,
                nu: 2,
                components: 1
            }
        );
        assert!(matches!(
            check_class2_structure(&k3, b()).unwrap(),
            Class2Report::NotApplicable { .. }
        ));
        assert!(matches!(
            check_class2_structure(&Graph::petersen(), b()).unwrap(),
            Class2Report::NotApplicable { .. }
        ));
        assert!(matches!(
            check_class2_structure(&Graph::cycle(6), b()).unwrap(),
            Class2Report::NotApplicable { .. }
        ));
    }

    #[test]
    fn class2_conclusions_detect_bad_structure() {
        // Not friendly class II inputs, but the conclusion checker itself
        // must notice structures that differ from K_{Δ+1} copies.
        assert!(class2_conclusions(&Graph::cycle(5), 2, 2)
            .unwrap()
            .is_fail());
        assert!(class2_conclusions(&Graph::complete(4), 3, 2)
            .unwrap()
            .is_fail());
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&Graph::star(4), b()).unwrap();
        assert_eq!(
            d.parts,
            vec![Part::Star {
                center: 0,
                leaves: vec![1, 2, 3, 4]
            }]
        );

        let d = decompose(&Graph::complete(4), b()).unwrap();
        assert_eq!(d.removal_order, vec![0]);
        assert_eq!(
            d.parts[0],
            Part::Star {
                center: 0,
                leaves: vec![1, 2, 3]
            }
        );
        match &d.parts[1] {
            Part::FactorCritical(s) => {
                assert_eq!(s.vertices, vec![1, 2, 3]);
                assert_eq!(s.graph, Graph::complete(3));
            }
            other => panic!("expected factor-critical part, got {other:?}"),
        }

        let d = decompose(&Graph::cycle(6), b()).unwrap();
        assert_eq!(d.removal_order, vec![0, 2, 4]);
        assert_eq!(d.parts.len(), 3);
        assert!(d
            .parts
            .iter()
            .all(|p| matches!(p, Part::Star { leaves, .. } if leaves.len() == 2)));
    }

    #[test]
    fn decompose_errors() {
        assert_eq!(decompose(&Graph::complete(5), b()), Err(Error::ClassTwo));
        assert_eq!(decompose(&Graph::path(4), b()), Err(Error::NotFriendly));
    }
}
