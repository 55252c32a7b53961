//! Exact semantics: well-behaved worlds, their model weights, and the
//! probabilities of i-formulas.
//!
//! [`enumerate`] walks every action assignment licensed by the narrative,
//! every initial choice and every effect choice by forward simulation, then
//! groups the resulting traces by world. [`check_world`] is an independent
//! brute-force reading of the definitions used to cross-check it.

mod oracle;
mod sample;
mod transition;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::lang::{
    eval_formula, FiniteWorld, FluentState, IFormula, Instant, LangError, Outcome, State,
};
use crate::prob::Probability;
use crate::syntax::{DomainDescription, HProposition, PProp};

pub use oracle::{check_world, all_worlds, WorldReport};
pub use sample::{sample_world, Sampler};
pub use transition::{graph_nodes, transition, transition_graph, tset, Edge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("c-propositions {first} and {second} are both activated in state {state}{}", at_instant(.instant))]
    ConcurrentActivation { first: usize, second: usize, state: String, instant: Option<Instant> },
    #[error("the condition has probability 0")]
    ConditionZero,
    #[error("instant {instant} lies beyond maxinst {maxinst}")]
    InstantOutOfRange { instant: Instant, maxinst: Instant },
}

fn at_instant(i: &Option<Instant>) -> String {
    match i {
        Some(i) => alloc::format!(" at instant {i}"),
        None => String::new(),
    }
}

impl From<LangError> for EngineError {
    fn from(e: LangError) -> Self {
        match e {
            LangError::InstantOutOfRange { instant, maxinst } => EngineError::InstantOutOfRange { instant, maxinst },
            other => unreachable!("engine inputs are validated: {other}"),
        }
    }
}

/// The c-proposition (by index) whose body `state` satisfies, if any.
pub fn activated_cprop(dd: &DomainDescription, state: &State) -> Result<Option<usize>, EngineError> {
    let mut found = None;
    for (i, c) in dd.cprops().iter().enumerate() {
        if eval_formula(state, &c.body) {
            if let Some(first) = found {
                return Err(EngineError::ConcurrentActivation {
                    first: first + 1,
                    second: i + 1,
                    state: dd.signature().show_state(state),
                    instant: None,
                });
            }
            found = Some(i);
        }
    }
    Ok(found)
}

fn activated_at(dd: &DomainDescription, state: &State, instant: Instant) -> Result<Option<usize>, EngineError> {
    activated_cprop(dd, state).map_err(|e| match e {
        EngineError::ConcurrentActivation { first, second, state, .. } => {
            EngineError::ConcurrentActivation { first, second, state, instant: Some(instant) }
        }
        other => other,
    })
}

/// Cause occurrences in the window, paired with the activated c-proposition.
/// An activation at maxinst has no successor instant inside the window and
/// is left out.
pub fn occurrences(dd: &DomainDescription, world: &FiniteWorld) -> Result<Vec<(Instant, usize)>, EngineError> {
    let mut out = Vec::new();
    for i in 0..dd.maxinst() {
        if let Some(c) = activated_at(dd, world.at(i), i)? {
            out.push((i, c));
        }
    }
    Ok(out)
}

/// Product of the p-proposition factors: `P` where the action happens, `1 - P` otherwise.
pub fn narrative_factor(pprops: &[PProp], world: &FiniteWorld) -> Probability {
    pprops.iter().fold(Probability::one(), |acc, p| {
        if world.at(p.instant).actions[p.action.0] {
            acc * p.prob.clone()
        } else {
            acc * p.prob.complement()
        }
    })
}

/// `ε_D(W)`.
pub fn narrative_eval(dd: &DomainDescription, world: &FiniteWorld) -> Probability {
    narrative_factor(dd.pprops(), world)
}

/// An initial choice plus one effect choice per occurrence instant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Trace {
    pub initial: Outcome,
    pub effects: BTreeMap<Instant, Outcome>,
}

impl Trace {
    /// `ε(tr)`.
    pub fn eval(&self) -> Probability {
        self.effects
            .values()
            .fold(self.initial.weight.clone(), |acc, o| acc * o.weight.clone())
    }
}

pub fn trace_eval(tr: &Trace) -> Probability {
    tr.eval()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedWorld {
    pub world: FiniteWorld,
    pub weight: Probability,
    pub traces: Vec<Trace>,
}

/// Every action assignment the narrative allows, one `Vec<bool>` per instant.
fn action_timelines(dd: &DomainDescription) -> Vec<Vec<Vec<bool>>> {
    let n = dd.signature().action_count();
    let mut base = vec![vec![false; n]; dd.maxinst() as usize + 1];
    let mut uncertain = Vec::new();
    for p in dd.pprops() {
        if p.prob.is_one() {
            base[p.instant as usize][p.action.0] = true;
        } else {
            uncertain.push(p);
        }
    }
    let mut out = Vec::with_capacity(1 << uncertain.len());
    for mask in 0u64..1 << uncertain.len() {
        let mut t = base.clone();
        for (bit, p) in uncertain.iter().enumerate() {
            t[p.instant as usize][p.action.0] = mask & (1 << bit) != 0;
        }
        out.push(t);
    }
    out
}

struct Walk<'a> {
    dd: &'a DomainDescription,
    actions: &'a [Vec<bool>],
    leaves: &'a mut BTreeMap<FiniteWorld, Vec<Trace>>,
}

impl Walk<'_> {
    fn step(&mut self, instant: Instant, fluents: FluentState, states: &mut Vec<State>, trace: &mut Trace) -> Result<(), EngineError> {
        let state = State::new(fluents, self.actions[instant as usize].clone());
        let activated = if instant < self.dd.maxinst() { activated_at(self.dd, &state, instant)? } else { None };
        let fluents = state.fluents.clone();
        states.push(state);
        if instant == self.dd.maxinst() {
            self.leaves.entry(FiniteWorld::new(states.clone())).or_default().push(trace.clone());
        } else if let Some(c) = activated {
            for o in &self.dd.cprops()[c].head {
                let next = fluents.update(&o.effect)?;
                trace.effects.insert(instant, o.clone());
                self.step(instant + 1, next, states, trace)?;
                trace.effects.remove(&instant);
            }
        } else {
            self.step(instant + 1, fluents, states, trace)?;
        }
        states.pop();
        Ok(())
    }
}

/// All well-behaved worlds with their model weights, ordered by world.
pub fn enumerate(dd: &DomainDescription) -> Result<Vec<WeightedWorld>, EngineError> {
    let fluent_count = dd.signature().fluent_count();
    let mut leaves: BTreeMap<FiniteWorld, Vec<Trace>> = BTreeMap::new();
    for timeline in action_timelines(dd) {
        for ic in &dd.iprop().head {
            let start = ic.effect.to_total(fluent_count).expect("initial effects are total");
            let mut trace = Trace { initial: ic.clone(), effects: BTreeMap::new() };
            let mut walk = Walk { dd, actions: &timeline, leaves: &mut leaves };
            walk.step(0, start, &mut Vec::new(), &mut trace)?;
        }
    }
    Ok(leaves
        .into_iter()
        .map(|(world, traces)| {
            let mass = traces.iter().fold(Probability::zero(), |acc, t| {
                acc.checked_add(&t.eval()).expect("trace masses of one world stay below 1")
            });
            let weight = narrative_eval(dd, &world) * mass;
            WeightedWorld { world, weight, traces }
        })
        .collect())
}

/// The enumerated model of a domain, reusable across queries.
#[derive(Debug, Clone)]
pub struct Model {
    worlds: Vec<WeightedWorld>,
    maxinst: Instant,
}

impl Model {
    pub fn new(dd: &DomainDescription) -> Result<Self, EngineError> {
        Ok(Model { worlds: enumerate(dd)?, maxinst: dd.maxinst() })
    }

    pub fn worlds(&self) -> &[WeightedWorld] {
        &self.worlds
    }

    /// `M*(φ)`.
    pub fn marginal(&self, phi: &IFormula) -> Result<Probability, EngineError> {
        let max = phi.max_instant();
        if max > self.maxinst {
            return Err(EngineError::InstantOutOfRange { instant: max, maxinst: self.maxinst });
        }
        let total = self
            .worlds
            .iter()
            .filter(|w| phi.holds_in(&w.world))
            .fold(Probability::zero(), |acc, w| acc.checked_add(&w.weight).expect("model weights sum to 1"));
        Ok(total)
    }

    /// `M*(φ ∧ ψ) / M*(ψ)`.
    pub fn conditional(&self, phi: &IFormula, psi: &IFormula) -> Result<Probability, EngineError> {
        let given = self.marginal(psi)?;
        if given.is_zero() {
            return Err(EngineError::ConditionZero);
        }
        let joint = self.marginal(&IFormula::and(phi.clone(), psi.clone()))?;
        Ok(joint.checked_div(&given).expect("joint never exceeds its condition"))
    }
}

pub fn marginal(dd: &DomainDescription, phi: &IFormula) -> Result<Probability, EngineError> {
    Model::new(dd)?.marginal(phi)
}

pub fn conditional(dd: &DomainDescription, phi: &IFormula, psi: &IFormula) -> Result<Probability, EngineError> {
    Model::new(dd)?.conditional(phi, psi)
}

/// Exact equality between `M*(φ)` and the stated probability.
pub fn entails(dd: &DomainDescription, h: &HProposition) -> Result<bool, EngineError> {
    Ok(marginal(dd, &h.query)? == h.prob)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    /// Keep p-propositions at instants `<= I`.
    UpTo(Instant),
    /// Keep p-propositions at instants `< I`.
    Before(Instant),
    /// Drop the whole narrative.
    Empty,
}

pub fn restrict(dd: &DomainDescription, mode: Restriction) -> DomainDescription {
    let keep = |p: &&PProp| match mode {
        Restriction::UpTo(i) => p.instant <= i,
        Restriction::Before(i) => p.instant < i,
        Restriction::Empty => false,
    };
    dd.with_narrative(dd.pprops().iter().filter(keep).cloned().collect())
}

/// Same fluent states up to and including `i`, same actions strictly before `i`.
pub fn indistinguishable_up_to(w: &FiniteWorld, w2: &FiniteWorld, i: Instant) -> bool {
    let i = i as usize;
    if i >= w.states.len() || i >= w2.states.len() {
        return false;
    }
    (0..=i).all(|j| w.states[j].fluents == w2.states[j].fluents)
        && (0..i).all(|j| w.states[j].actions == w2.states[j].actions)
}
