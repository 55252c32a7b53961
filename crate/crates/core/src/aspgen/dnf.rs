use alloc::vec;
use alloc::vec::Vec;

use crate::lang::{Formula, Literal};

/// A literal or its negation inside a DNF conjunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signed {
    pub lit: Literal,
    pub positive: bool,
}

impl Signed {
    pub fn eval_with<F: Fn(&Literal) -> bool>(&self, truth: F) -> bool {
        truth(&self.lit) == self.positive
    }
}

pub type Conjunction = Vec<Signed>;

/// Disjunctive normal form, treating each literal as an independent atom.
///
/// Disjuncts come out in left-to-right expansion order. Repeated literals
/// inside a conjunction are merged and conjunctions holding a literal and its
/// negation are dropped, as are exact repeats of an earlier disjunct.
pub fn to_dnf(phi: &Formula) -> Vec<Conjunction> {
    let mut out: Vec<Conjunction> = Vec::new();
    for c in expand(phi, false) {
        if !contradictory(&c) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn expand(phi: &Formula, negated: bool) -> Vec<Conjunction> {
    match phi {
        Formula::Lit(l) => vec![vec![Signed { lit: *l, positive: !negated }]],
        Formula::Not(f) => expand(f, !negated),
        Formula::And(a, b) if !negated => product(expand(a, false), expand(b, false)),
        Formula::And(a, b) => union(expand(a, true), expand(b, true)),
        Formula::Or(a, b) if !negated => union(expand(a, false), expand(b, false)),
        Formula::Or(a, b) => product(expand(a, true), expand(b, true)),
        Formula::Implies(a, b) if !negated => union(expand(a, true), expand(b, false)),
        Formula::Implies(a, b) => product(expand(a, false), expand(b, true)),
    }
}

fn union(mut a: Vec<Conjunction>, b: Vec<Conjunction>) -> Vec<Conjunction> {
    a.extend(b);
    a
}

fn product(a: Vec<Conjunction>, b: Vec<Conjunction>) -> Vec<Conjunction> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in &a {
        for y in &b {
            let mut c = x.clone();
            for s in y {
                if !c.contains(s) {
                    c.push(*s);
                }
            }
            out.push(c);
        }
    }
    out
}

fn contradictory(c: &Conjunction) -> bool {
    c.iter().any(|s| c.iter().any(|t| t.lit == s.lit && t.positive != s.positive))
}

/// Evaluates a DNF under an assignment of literals.
pub fn eval_dnf<F: Fn(&Literal) -> bool + Copy>(dnf: &[Conjunction], truth: F) -> bool {
    dnf.iter().any(|c| c.iter().all(|s| s.eval_with(truth)))
}
