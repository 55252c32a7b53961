//! Graphviz rendering of transition graphs.

use std::fmt::Write;

use pec_core::engine::{graph_nodes, transition_graph, EngineError};
use pec_core::lang::{FluentState, Signature};
use pec_core::syntax::DomainDescription;

/// `F=V` pairs sorted by fluent name.
pub fn node_label(sig: &Signature, s: &FluentState) -> String {
    let mut pairs: Vec<String> = sig
        .fluents()
        .map(|f| format!("{}={}", sig.fluent_name(f), sig.values(f)[s.get(f).0]))
        .collect();
    pairs.sort();
    pairs.join(", ")
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LabeledEdge {
    pub source: String,
    pub target: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub nodes: Vec<String>,
    pub edges: Vec<LabeledEdge>,
}

/// The transition graph with string labels, in lexicographic order.
pub fn labeled_graph(dd: &DomainDescription) -> Result<LabeledGraph, EngineError> {
    let sig = dd.signature();
    let edges = transition_graph(dd)?;
    let mut nodes: Vec<String> = graph_nodes(dd, &edges).iter().map(|s| node_label(sig, s)).collect();
    nodes.sort();
    let mut labeled: Vec<LabeledEdge> = edges
        .iter()
        .map(|e| {
            let actions: Vec<&str> = e.actions.iter().map(|a| sig.action_name(*a)).collect();
            LabeledEdge {
                source: node_label(sig, &e.source),
                target: node_label(sig, &e.target),
                label: format!("{{{}}}, {}", actions.join(", "), e.prob),
            }
        })
        .collect();
    labeled.sort();
    Ok(LabeledGraph { nodes, edges: labeled })
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(graph: &LabeledGraph) -> String {
    let mut out = String::from("digraph pec {\n");
    let id = |label: &str| graph.nodes.iter().position(|n| n == label).expect("edge endpoints are nodes");
    for (i, n) in graph.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(n));
    }
    for e in &graph.edges {
        let _ = writeln!(out, "  n{} -> n{} [label={}];", id(&e.source), id(&e.target), quote(&e.label));
    }
    out.push_str("}\n");
    out
}
