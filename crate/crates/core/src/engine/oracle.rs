//! A direct reading of well-behavedness, independent of the forward walk in
//! [`super::enumerate`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{activated_cprop, Trace};
use crate::lang::{FiniteWorld, Instant, Outcome, Signature, State};
use crate::syntax::DomainDescription;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorldReport {
    pub cwa: bool,
    pub initial: bool,
    pub justified: bool,
    /// Filled only when all three conditions hold.
    pub traces: Vec<Trace>,
}

impl WorldReport {
    pub fn well_behaved(&self) -> bool {
        self.cwa && self.initial && self.justified
    }
}

fn cwa(dd: &DomainDescription, world: &FiniteWorld) -> bool {
    world.states.iter().enumerate().all(|(i, s)| {
        s.actions.iter().enumerate().all(|(a, &on)| {
            let p = dd.pprops().iter().find(|p| p.instant as usize == i && p.action.0 == a);
            match p {
                None => !on,
                Some(p) if p.prob.is_one() => on,
                Some(_) => true,
            }
        })
    })
}

fn initial_choices<'a>(dd: &'a DomainDescription, world: &FiniteWorld) -> Vec<&'a Outcome> {
    let n = dd.signature().fluent_count();
    dd.iprop()
        .head
        .iter()
        .filter(|o| o.effect.to_total(n).as_ref() == Some(&world.states[0].fluents))
        .collect()
}

/// Whether the effect choice explains the change between every pair of
/// instants `I < I'`, not only adjacent ones.
fn explains(world: &FiniteWorld, choice: &BTreeMap<Instant, &Outcome>) -> bool {
    let last = world.last_instant();
    for i in 0..last {
        let mut s = world.at(i).fluents.clone();
        for j in i + 1..=last {
            if let Some(o) = choice.get(&(j - 1)) {
                s = match s.update(&o.effect) {
                    Ok(s) => s,
                    Err(_) => return false,
                };
            }
            if s != world.at(j).fluents {
                return false;
            }
        }
    }
    true
}

/// Checks the closed world assumption for actions, the initial condition and
/// justified change by brute force, and lists the traces of a well-behaved
/// world.
pub fn check_world(dd: &DomainDescription, world: &FiniteWorld) -> WorldReport {
    let sig = dd.signature();
    let shaped = world.states.len() == dd.maxinst() as usize + 1 && world.states.iter().all(|s| sig.contains_state(s));
    if !shaped {
        return WorldReport { cwa: false, initial: false, justified: false, traces: Vec::new() };
    }
    let cwa = cwa(dd, world);
    let ics = initial_choices(dd, world);
    let initial = !ics.is_empty();

    let mut occurrences = Vec::new();
    let mut ambiguous = false;
    for i in 0..dd.maxinst() {
        match activated_cprop(dd, world.at(i)) {
            Ok(Some(c)) => occurrences.push((i, c)),
            Ok(None) => {}
            Err(_) => ambiguous = true,
        }
    }

    let mut choices = Vec::new();
    if !ambiguous {
        let mut current = BTreeMap::new();
        collect_choices(dd, world, &occurrences, &mut current, &mut choices);
    }
    let justified = !choices.is_empty();

    let mut traces = Vec::new();
    if cwa && initial && justified {
        for ic in &ics {
            for ec in &choices {
                traces.push(Trace {
                    initial: (*ic).clone(),
                    effects: ec.iter().map(|(i, o)| (*i, (*o).clone())).collect(),
                });
            }
        }
    }
    WorldReport { cwa, initial, justified, traces }
}

fn collect_choices<'a>(
    dd: &'a DomainDescription,
    world: &FiniteWorld,
    rest: &[(Instant, usize)],
    current: &mut BTreeMap<Instant, &'a Outcome>,
    out: &mut Vec<BTreeMap<Instant, &'a Outcome>>,
) {
    match rest.split_first() {
        None => {
            if explains(world, current) {
                out.push(current.clone());
            }
        }
        Some((&(i, c), tail)) => {
            for o in &dd.cprops()[c].head {
                current.insert(i, o);
                collect_choices(dd, world, tail, current, out);
            }
            current.remove(&i);
        }
    }
}

/// Every world over the signature's window. Exponential; meant for tiny
/// signatures only.
pub fn all_worlds(sig: &Signature) -> Vec<FiniteWorld> {
    let states: Vec<State> = sig.states();
    let len = sig.maxinst() as usize + 1;
    let mut out = Vec::new();
    let mut idx = alloc::vec![0usize; len];
    loop {
        out.push(FiniteWorld::new(idx.iter().map(|&k| states[k].clone()).collect()));
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < states.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
