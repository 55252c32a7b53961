use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{activated_cprop, EngineError};
use crate::lang::{ActionId, FluentState, Outcome, PartialFluentState, State};
use crate::prob::Probability;
use crate::syntax::DomainDescription;

/// The outcomes that move `s` to `target` in one step.
pub fn tset(dd: &DomainDescription, s: &State, target: &FluentState) -> Result<Vec<Outcome>, EngineError> {
    match activated_cprop(dd, s)? {
        Some(c) => {
            let mut out = Vec::new();
            for o in &dd.cprops()[c].head {
                if &s.fluents.update(&o.effect)? == target {
                    out.push(o.clone());
                }
            }
            Ok(out)
        }
        None if &s.fluents == target => Ok(vec![Outcome::new(PartialFluentState::empty(), Probability::one())]),
        None => Ok(Vec::new()),
    }
}

/// Probability of moving from `s` to `target`, independent of the narrative.
pub fn transition(dd: &DomainDescription, s: &State, target: &FluentState) -> Result<Probability, EngineError> {
    let set = tset(dd, s, target)?;
    Ok(Probability::sum(set.iter().map(|o| &o.weight)).expect("outcomes of one head sum to at most 1"))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub source: FluentState,
    pub actions: Vec<ActionId>,
    pub target: FluentState,
    pub prob: Probability,
}

/// Nonzero transitions, sorted by source, target and action label.
///
/// Every edge out of a state that activates a c-proposition is kept. A state
/// with some action performed but nothing activated only stays put; that
/// self-loop is kept when its fluent state already appears on an activation
/// edge and dropped otherwise, as are loops with no action at all.
pub fn transition_graph(dd: &DomainDescription) -> Result<Vec<Edge>, EngineError> {
    let sig = dd.signature();
    let targets = sig.fluent_states();
    let mut active = Vec::new();
    let mut idle = Vec::new();
    for s in sig.states() {
        let actions: Vec<ActionId> = s.active_actions().collect();
        if actions.is_empty() {
            continue;
        }
        if activated_cprop(dd, &s)?.is_some() {
            for t in &targets {
                let prob = transition(dd, &s, t)?;
                if !prob.is_zero() {
                    active.push(Edge { source: s.fluents.clone(), actions: actions.clone(), target: t.clone(), prob });
                }
            }
        } else {
            idle.push(Edge { source: s.fluents.clone(), actions, target: s.fluents, prob: Probability::one() });
        }
    }
    let touched: BTreeSet<&FluentState> = active.iter().flat_map(|e| [&e.source, &e.target]).collect();
    let loops: Vec<Edge> = idle.into_iter().filter(|e| touched.contains(&e.source)).collect();
    let mut edges = active;
    edges.extend(loops);
    edges.sort_by(|a, b| (&a.source, &a.target, &a.actions).cmp(&(&b.source, &b.target, &b.actions)));
    Ok(edges)
}

/// The fluent states drawn in a graph: edge endpoints, or every fluent state
/// when there are no edges.
pub fn graph_nodes(dd: &DomainDescription, edges: &[Edge]) -> Vec<FluentState> {
    if edges.is_empty() {
        return dd.signature().fluent_states();
    }
    let nodes: BTreeSet<FluentState> = edges.iter().flat_map(|e| [e.source.clone(), e.target.clone()]).collect();
    nodes.into_iter().collect()
}
