//! JSON views of library results. Vertex ids are always those of the input.

use maxmatch_core::coloring::VizingClass;
use maxmatch_core::format::write_graph6;
use maxmatch_core::friendly::{
    Class2Report, Decomposition, FriendlyCertificate, FriendlyWitness, Part,
};
use maxmatch_core::{Edge, Graph};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct AnalysisResult {
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub nu: usize,
    pub chi_prime: usize,
    pub vizing_class: VizingClass,
    pub friendly: bool,
    pub partition: Option<Vec<Vec<Edge>>>,
    pub witness: Option<FriendlyWitness>,
    pub class2: Class2View,
    pub decomposition: Option<DecompositionView>,
    /// Isolated vertices removed before analysis (`--allow-isolated`).
    pub isolated: Vec<usize>,
}

#[derive(Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Class2View {
    NotApplicable {
        reason: String,
    },
    Pass {
        delta: usize,
        nu: usize,
        components: usize,
    },
    Fail {
        reason: String,
        component: Option<String>,
    },
}

#[derive(Debug, Serialize)]
pub struct DecompositionView {
    pub parts: Vec<PartView>,
    pub removal_order: Vec<usize>,
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartView {
    Star {
        center: usize,
        leaves: Vec<usize>,
    },
    FactorCritical {
        graph6: Option<String>,
        vertices: Vec<usize>,
        edges: Vec<Edge>,
    },
}

/// Maps ids of an analyzed graph back to input ids.
pub struct Labels<'a>(pub &'a [usize]);

impl Labels<'_> {
    pub fn vertex(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn edge(&self, (u, v): Edge) -> Edge {
        let (a, b) = (self.vertex(u), self.vertex(v));
        (a.min(b), a.max(b))
    }
}

pub fn partition_view(cert: &FriendlyCertificate, labels: &Labels) -> Option<Vec<Vec<Edge>>> {
    cert.partition.as_ref().map(|parts| {
        let mut out: Vec<Vec<Edge>> = parts
            .iter()
            .map(|p| {
                let mut es: Vec<Edge> = p.iter().map(|&e| labels.edge(e)).collect();
                es.sort_unstable();
                es
            })
            .collect();
        out.sort_unstable();
        out
    })
}

pub fn class2_view(r: Class2Report) -> Class2View {
    match r {
        Class2Report::NotApplicable { reason } => Class2View::NotApplicable { reason },
        Class2Report::Pass {
            delta,
            nu,
            components,
        } => Class2View::Pass {
            delta,
            nu,
            components,
        },
        Class2Report::Fail { reason, component } => Class2View::Fail { reason, component },
    }
}

pub fn decomposition_view(d: &Decomposition, labels: &Labels) -> DecompositionView {
    let parts = d
        .parts
        .iter()
        .map(|p| match p {
            Part::Star { center, leaves } => PartView::Star {
                center: labels.vertex(*center),
                leaves: leaves.iter().map(|&l| labels.vertex(l)).collect(),
            },
            Part::FactorCritical(sub) => {
                let mut edges: Vec<Edge> = p.edges().into_iter().map(|e| labels.edge(e)).collect();
                edges.sort_unstable();
                PartView::FactorCritical {
                    graph6: graph6_of(&sub.graph),
                    vertices: sub.vertices.iter().map(|&v| labels.vertex(v)).collect(),
                    edges,
                }
            }
        })
        .collect();
    DecompositionView {
        parts,
        removal_order: d.removal_order.iter().map(|&v| labels.vertex(v)).collect(),
    }
}

pub fn graph6_of(g: &Graph) -> Option<String> {
    write_graph6(g).ok()
}
