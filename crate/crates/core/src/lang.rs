//! Vocabulary, states, formulas and the fluent-state update algebra.
//!
//! Symbols are interned into dense indices by a [`Signature`]. Fluent values
//! are indices into that fluent's declared value list; action values are
//! [`ValueId::TRUE`] and [`ValueId::FALSE`].

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::prob::Probability;

/// Instants are the integers `0..=maxinst`.
pub type Instant = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FluentId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActionId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValueId(pub usize);

impl ValueId {
    pub const TRUE: ValueId = ValueId(0);
    pub const FALSE: ValueId = ValueId(1);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subject {
    Fluent(FluentId),
    Action(ActionId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LangError {
    #[error("a domain needs at least one fluent")]
    NoFluents,
    #[error("fluent `{0}` has no values")]
    NoValues(String),
    #[error("value `{value}` is declared twice for fluent `{fluent}`")]
    DuplicateValue { fluent: String, value: String },
    #[error("symbol `{0}` is declared more than once")]
    DuplicateSymbol(String),
    #[error("maxinst must be at least 1")]
    MaxinstTooSmall,
    #[error("value or symbol does not belong to the signature")]
    SignatureMismatch,
    #[error("instant {instant} lies outside the window 0..={maxinst}")]
    InstantOutOfRange { instant: Instant, maxinst: Instant },
}

/// The vocabulary of a domain: fluents with their values, actions, and the
/// instant window `0..=maxinst`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    fluents: Vec<String>,
    values: Vec<Vec<String>>,
    actions: Vec<String>,
    maxinst: Instant,
    index: BTreeMap<String, Subject>,
}

pub const ACTION_VALUES: [&str; 2] = ["true", "false"];

impl Signature {
    pub fn new(
        fluents: Vec<(String, Vec<String>)>,
        actions: Vec<String>,
        maxinst: Instant,
    ) -> Result<Self, LangError> {
        if fluents.is_empty() {
            return Err(LangError::NoFluents);
        }
        if maxinst < 1 {
            return Err(LangError::MaxinstTooSmall);
        }
        let mut index = BTreeMap::new();
        let mut names = Vec::with_capacity(fluents.len());
        let mut values = Vec::with_capacity(fluents.len());
        for (i, (name, vals)) in fluents.into_iter().enumerate() {
            if vals.is_empty() {
                return Err(LangError::NoValues(name));
            }
            let mut seen = BTreeSet::new();
            for v in &vals {
                if !seen.insert(v.as_str()) {
                    return Err(LangError::DuplicateValue { fluent: name, value: v.clone() });
                }
            }
            if index.insert(name.clone(), Subject::Fluent(FluentId(i))).is_some() {
                return Err(LangError::DuplicateSymbol(name));
            }
            names.push(name);
            values.push(vals);
        }
        for (i, name) in actions.iter().enumerate() {
            if index.insert(name.clone(), Subject::Action(ActionId(i))).is_some() {
                return Err(LangError::DuplicateSymbol(name.clone()));
            }
        }
        Ok(Signature { fluents: names, values, actions, maxinst, index })
    }

    pub fn fluent_count(&self) -> usize {
        self.fluents.len()
    }

    pub fn action_count(&self) -> usize {
        self.actions.len()
    }

    pub fn maxinst(&self) -> Instant {
        self.maxinst
    }

    pub fn fluents(&self) -> impl Iterator<Item = FluentId> + '_ {
        (0..self.fluents.len()).map(FluentId)
    }

    pub fn actions(&self) -> impl Iterator<Item = ActionId> + '_ {
        (0..self.actions.len()).map(ActionId)
    }

    pub fn fluent_name(&self, f: FluentId) -> &str {
        &self.fluents[f.0]
    }

    pub fn action_name(&self, a: ActionId) -> &str {
        &self.actions[a.0]
    }

    pub fn subject_name(&self, s: Subject) -> &str {
        match s {
            Subject::Fluent(f) => self.fluent_name(f),
            Subject::Action(a) => self.action_name(a),
        }
    }

    pub fn values(&self, f: FluentId) -> &[String] {
        &self.values[f.0]
    }

    pub fn value_name(&self, s: Subject, v: ValueId) -> &str {
        match s {
            Subject::Fluent(f) => &self.values[f.0][v.0],
            Subject::Action(_) => ACTION_VALUES[v.0],
        }
    }

    pub fn lookup(&self, name: &str) -> Option<Subject> {
        self.index.get(name).copied()
    }

    pub fn value_of(&self, s: Subject, name: &str) -> Option<ValueId> {
        match s {
            Subject::Fluent(f) => self.values[f.0].iter().position(|v| v == name).map(ValueId),
            Subject::Action(_) => ACTION_VALUES.iter().position(|v| *v == name).map(ValueId),
        }
    }

    /// Builds a literal from names, e.g. `("Coin", "Heads")`.
    pub fn literal(&self, subject: &str, value: &str) -> Option<Literal> {
        let s = self.lookup(subject)?;
        let v = self.value_of(s, value)?;
        Some(Literal { subject: s, value: v })
    }

    pub fn contains_literal(&self, lit: &Literal) -> bool {
        match lit.subject {
            Subject::Fluent(f) => f.0 < self.fluents.len() && lit.value.0 < self.values[f.0].len(),
            Subject::Action(a) => a.0 < self.actions.len() && lit.value.0 < 2,
        }
    }

    pub fn contains_state(&self, s: &State) -> bool {
        self.contains_fluent_state(&s.fluents) && s.actions.len() == self.actions.len()
    }

    pub fn contains_fluent_state(&self, s: &FluentState) -> bool {
        s.0.len() == self.fluents.len()
            && s.0.iter().zip(&self.values).all(|(v, vals)| v.0 < vals.len())
    }

    pub fn contains_partial(&self, x: &PartialFluentState) -> bool {
        x.0.iter().all(|(f, v)| f.0 < self.fluents.len() && v.0 < self.values[f.0].len())
    }

    /// Every total fluent state, in lexicographic order of value indices.
    pub fn fluent_states(&self) -> Vec<FluentState> {
        let mut out = vec![FluentState(Vec::new())];
        for vals in &self.values {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..vals.len()).map(move |v| {
                        let mut next = prefix.0.clone();
                        next.push(ValueId(v));
                        FluentState(next)
                    })
                })
                .collect();
        }
        out
    }

    /// Every assignment of truth values to the actions.
    pub fn action_assignments(&self) -> Vec<Vec<bool>> {
        let n = self.actions.len();
        (0..1usize << n)
            .map(|mask| (0..n).map(|i| mask & (1 << i) != 0).collect())
            .collect()
    }

    /// Every state over the signature.
    pub fn states(&self) -> Vec<State> {
        let assignments = self.action_assignments();
        self.fluent_states()
            .into_iter()
            .flat_map(|fs| {
                assignments
                    .iter()
                    .map(move |acts| State { fluents: fs.clone(), actions: acts.clone() })
            })
            .collect()
    }

    pub fn check_instant(&self, instant: Instant) -> Result<(), LangError> {
        if instant > self.maxinst {
            Err(LangError::InstantOutOfRange { instant, maxinst: self.maxinst })
        } else {
            Ok(())
        }
    }

    pub fn show_literal(&self, lit: &Literal) -> String {
        alloc::format!(
            "{}={}",
            self.subject_name(lit.subject),
            self.value_name(lit.subject, lit.value)
        )
    }

    /// `{F=V, ...}` in fluent declaration order.
    pub fn show_partial(&self, x: &PartialFluentState) -> String {
        let parts: Vec<String> = x
            .iter()
            .map(|(f, v)| alloc::format!("{}={}", self.fluent_name(f), self.values[f.0][v.0]))
            .collect();
        alloc::format!("{{{}}}", parts.join(", "))
    }

    pub fn show_fluent_state(&self, s: &FluentState) -> String {
        self.show_partial(&s.to_partial())
    }

    pub fn show_state(&self, s: &State) -> String {
        let mut parts: Vec<String> = s
            .fluents
            .0
            .iter()
            .enumerate()
            .map(|(f, v)| alloc::format!("{}={}", self.fluents[f], self.values[f][v.0]))
            .collect();
        for (a, on) in s.actions.iter().enumerate() {
            parts.push(alloc::format!("{}={}", self.actions[a], ACTION_VALUES[usize::from(!on)]));
        }
        alloc::format!("{{{}}}", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub subject: Subject,
    pub value: ValueId,
}

impl Literal {
    pub fn fluent(f: FluentId, v: ValueId) -> Self {
        Literal { subject: Subject::Fluent(f), value: v }
    }

    pub fn action(a: ActionId, occurs: bool) -> Self {
        Literal {
            subject: Subject::Action(a),
            value: if occurs { ValueId::TRUE } else { ValueId::FALSE },
        }
    }

    pub fn holds_in(&self, state: &State) -> bool {
        match self.subject {
            Subject::Fluent(f) => state.fluents.0[f.0] == self.value,
            Subject::Action(a) => state.actions[a.0] == (self.value == ValueId::TRUE),
        }
    }

    pub fn at(self, instant: Instant) -> IFormula {
        IFormula::Lit(self, instant)
    }
}

/// Propositional formulas over literals. `Or` and `Implies` are kept as
/// written so formulas render back the way they were parsed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Lit(Literal),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Left-nested conjunction of the given literals. Panics if empty.
    pub fn conjunction<I: IntoIterator<Item = Literal>>(lits: I) -> Self {
        let mut it = lits.into_iter().map(Formula::Lit);
        let first = it.next().expect("conjunction of no literals");
        it.fold(first, Formula::and)
    }

    /// Evaluates under an arbitrary truth assignment to literals.
    pub fn eval_with<F: Fn(&Literal) -> bool + Copy>(&self, truth: F) -> bool {
        match self {
            Formula::Lit(l) => truth(l),
            Formula::Not(f) => !f.eval_with(truth),
            Formula::And(a, b) => a.eval_with(truth) && b.eval_with(truth),
            Formula::Or(a, b) => a.eval_with(truth) || b.eval_with(truth),
            Formula::Implies(a, b) => !a.eval_with(truth) || b.eval_with(truth),
        }
    }

    pub fn literals(&self) -> BTreeSet<Literal> {
        let mut out = BTreeSet::new();
        self.collect_literals(&mut out);
        out
    }

    fn collect_literals(&self, out: &mut BTreeSet<Literal>) {
        match self {
            Formula::Lit(l) => {
                out.insert(*l);
            }
            Formula::Not(f) => f.collect_literals(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_literals(out);
                b.collect_literals(out);
            }
        }
    }

    /// `[θ]@I`: stamps every literal with the same instant.
    pub fn at(&self, instant: Instant) -> IFormula {
        match self {
            Formula::Lit(l) => IFormula::Lit(*l, instant),
            Formula::Not(f) => IFormula::not(f.at(instant)),
            Formula::And(a, b) => IFormula::and(a.at(instant), b.at(instant)),
            Formula::Or(a, b) => IFormula::or(a.at(instant), b.at(instant)),
            Formula::Implies(a, b) => IFormula::implies(a.at(instant), b.at(instant)),
        }
    }
}

/// Formulas over instant-stamped literals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IFormula {
    Lit(Literal, Instant),
    Not(Box<IFormula>),
    And(Box<IFormula>, Box<IFormula>),
    Or(Box<IFormula>, Box<IFormula>),
    Implies(Box<IFormula>, Box<IFormula>),
}

impl IFormula {
    pub fn not(f: IFormula) -> Self {
        IFormula::Not(Box::new(f))
    }

    pub fn and(a: IFormula, b: IFormula) -> Self {
        IFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: IFormula, b: IFormula) -> Self {
        IFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: IFormula, b: IFormula) -> Self {
        IFormula::Implies(Box::new(a), Box::new(b))
    }

    pub fn max_instant(&self) -> Instant {
        match self {
            IFormula::Lit(_, i) => *i,
            IFormula::Not(f) => f.max_instant(),
            IFormula::And(a, b) | IFormula::Or(a, b) | IFormula::Implies(a, b) => {
                a.max_instant().max(b.max_instant())
            }
        }
    }

    /// Unchecked recursive satisfaction; callers guarantee the instants fit.
    pub fn holds_in(&self, world: &FiniteWorld) -> bool {
        match self {
            IFormula::Lit(l, i) => l.holds_in(&world.states[*i as usize]),
            IFormula::Not(f) => !f.holds_in(world),
            IFormula::And(a, b) => a.holds_in(world) && b.holds_in(world),
            IFormula::Or(a, b) => a.holds_in(world) || b.holds_in(world),
            IFormula::Implies(a, b) => !a.holds_in(world) || b.holds_in(world),
        }
    }
}

/// A total assignment of values to fluents, indexed by [`FluentId`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FluentState(pub Vec<ValueId>);

impl FluentState {
    pub fn get(&self, f: FluentId) -> ValueId {
        self.0[f.0]
    }

    pub fn to_partial(&self) -> PartialFluentState {
        PartialFluentState(self.0.iter().enumerate().map(|(f, v)| (FluentId(f), *v)).collect())
    }

    /// `self ⊕ delta`.
    pub fn update(&self, delta: &PartialFluentState) -> Result<FluentState, LangError> {
        let mut next = self.clone();
        for (f, v) in delta.iter() {
            let slot = next.0.get_mut(f.0).ok_or(LangError::SignatureMismatch)?;
            *slot = v;
        }
        Ok(next)
    }
}

/// At most one value per fluent; actions excluded.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialFluentState(pub BTreeMap<FluentId, ValueId>);

impl PartialFluentState {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (FluentId, ValueId)> + '_ {
        self.0.iter().map(|(f, v)| (*f, *v))
    }

    /// The total fluent state this describes, if it covers `fluent_count` fluents.
    pub fn to_total(&self, fluent_count: usize) -> Option<FluentState> {
        (0..fluent_count)
            .map(|f| self.0.get(&FluentId(f)).copied())
            .collect::<Option<Vec<_>>>()
            .map(FluentState)
    }
}

impl FromIterator<(FluentId, ValueId)> for PartialFluentState {
    fn from_iter<T: IntoIterator<Item = (FluentId, ValueId)>>(iter: T) -> Self {
        PartialFluentState(iter.into_iter().collect())
    }
}

/// One value per fluent and a truth value per action.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State {
    pub fluents: FluentState,
    pub actions: Vec<bool>,
}

impl State {
    pub fn new(fluents: FluentState, actions: Vec<bool>) -> Self {
        State { fluents, actions }
    }

    pub fn active_actions(&self) -> impl Iterator<Item = ActionId> + '_ {
        self.actions.iter().enumerate().filter(|(_, on)| **on).map(|(a, _)| ActionId(a))
    }
}

/// An effect alternative with its strictly positive weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Outcome {
    pub effect: PartialFluentState,
    pub weight: Probability,
}

impl Outcome {
    pub fn new(effect: PartialFluentState, weight: Probability) -> Self {
        Outcome { effect, weight }
    }
}

/// Total weight of a collection of outcomes; `None` if it exceeds one.
pub fn outcome_weight<'a, I: IntoIterator<Item = &'a Outcome>>(outcomes: I) -> Option<Probability> {
    Probability::sum(outcomes.into_iter().map(|o| &o.weight)).ok()
}

/// A world restricted to the instant window: one state per instant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteWorld {
    pub states: Vec<State>,
}

impl FiniteWorld {
    pub fn new(states: Vec<State>) -> Self {
        FiniteWorld { states }
    }

    pub fn at(&self, instant: Instant) -> &State {
        &self.states[instant as usize]
    }

    pub fn last_instant(&self) -> Instant {
        (self.states.len() - 1) as Instant
    }
}

/// `base ⊕ delta`.
pub fn update(base: &FluentState, delta: &PartialFluentState) -> Result<FluentState, LangError> {
    base.update(delta)
}

/// Evaluates a formula under the total valuation a state induces.
pub fn eval_formula(state: &State, phi: &Formula) -> bool {
    phi.eval_with(|l| l.holds_in(state))
}

/// `world ⊨ phi`, rejecting instants beyond the world's window.
pub fn satisfies(world: &FiniteWorld, phi: &IFormula) -> Result<bool, LangError> {
    let last = world.last_instant();
    let max = phi.max_instant();
    if max > last {
        return Err(LangError::InstantOutOfRange { instant: max, maxinst: last });
    }
    Ok(phi.holds_in(world))
}

/// Propositional entailment with literals read as independent atoms.
pub fn herbrand_entails(theta: &Formula, theta_prime: &Formula) -> bool {
    let mut atoms = theta.literals();
    atoms.extend(theta_prime.literals());
    let atoms: Vec<Literal> = atoms.into_iter().collect();
    assert!(atoms.len() < 64, "too many atoms for truth-table entailment");
    (0u64..1 << atoms.len()).all(|mask| {
        let truth = |l: &Literal| {
            let i = atoms.binary_search(l).expect("atom collected above");
            mask & (1 << i) != 0
        };
        !theta.eval_with(truth) || theta_prime.eval_with(truth)
    })
}

impl fmt::Display for ValueId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn coin() -> Signature {
        Signature::new(
            vec![("Coin".to_string(), vec!["Heads".to_string(), "Tails".to_string()])],
            vec!["Toss".to_string()],
            3,
        )
        .unwrap()
    }

    fn antibiotic() -> Signature {
        let s = |x: &str| x.to_string();
        Signature::new(
            vec![
                (s("Bacteria"), vec![s("Weak"), s("Resistant"), s("Absent")]),
                (s("Rash"), vec![s("Present"), s("Absent")]),
            ],
            vec![s("TakesMedicine")],
            4,
        )
        .unwrap()
    }

    fn partial(sig: &Signature, lits: &[(&str, &str)]) -> PartialFluentState {
        lits.iter()
            .map(|(f, v)| {
                let l = sig.literal(f, v).unwrap();
                match l.subject {
                    Subject::Fluent(f) => (f, l.value),
                    Subject::Action(_) => unreachable!(),
                }
            })
            .collect()
    }

    fn total(sig: &Signature, lits: &[(&str, &str)]) -> FluentState {
        partial(sig, lits).to_total(sig.fluent_count()).unwrap()
    }

    #[test]
    fn update_overrides_mentioned_fluents() {
        let sig = coin();
        let heads = total(&sig, &[("Coin", "Heads")]);
        let tails = partial(&sig, &[("Coin", "Tails")]);
        assert_eq!(update(&heads, &tails).unwrap(), total(&sig, &[("Coin", "Tails")]));
        assert_eq!(update(&heads, &PartialFluentState::empty()).unwrap(), heads);
    }

    #[test]
    fn update_antibiotic_edge() {
        let sig = antibiotic();
        let base = total(&sig, &[("Rash", "Present"), ("Bacteria", "Weak")]);
        let delta = partial(&sig, &[("Bacteria", "Absent"), ("Rash", "Absent")]);
        assert_eq!(
            update(&base, &delta).unwrap(),
            total(&sig, &[("Rash", "Absent"), ("Bacteria", "Absent")])
        );
    }

    #[test]
    fn update_rejects_foreign_delta() {
        let sig = coin();
        let base = total(&sig, &[("Coin", "Heads")]);
        let foreign = PartialFluentState([(FluentId(3), ValueId(0))].into_iter().collect());
        assert_eq!(update(&base, &foreign), Err(LangError::SignatureMismatch));
    }

    #[test]
    fn eval_formula_uses_closed_valuation() {
        let sig = antibiotic();
        let s1 = State::new(total(&sig, &[("Bacteria", "Resistant"), ("Rash", "Absent")]), vec![false]);
        let not_tm = Formula::not(Formula::Lit(sig.literal("TakesMedicine", "true").unwrap()));
        assert!(eval_formula(&s1, &not_tm));
        let tm_false = Formula::Lit(sig.literal("TakesMedicine", "false").unwrap());
        assert!(eval_formula(&s1, &tm_false));

        let c = coin();
        let toss = Formula::Lit(c.literal("Toss", "true").unwrap());
        let heads = total(&c, &[("Coin", "Heads")]);
        assert!(eval_formula(&State::new(heads.clone(), vec![true]), &toss));
        assert!(!eval_formula(&State::new(heads, vec![false]), &toss));
    }

    #[test]
    fn tautology_holds_everywhere() {
        let sig = antibiotic();
        let l = Formula::Lit(sig.literal("Rash", "Absent").unwrap());
        let taut = Formula::or(l.clone(), Formula::not(l));
        for s in sig.states() {
            assert!(eval_formula(&s, &taut));
        }
    }

    #[test]
    fn satisfies_checks_window() {
        let sig = coin();
        let heads = total(&sig, &[("Coin", "Heads")]);
        let w = FiniteWorld::new(vec![State::new(heads.clone(), vec![false]); 4]);
        let h = sig.literal("Coin", "Heads").unwrap();
        assert!(satisfies(&w, &h.at(3)).unwrap());
        assert!(matches!(satisfies(&w, &h.at(4)), Err(LangError::InstantOutOfRange { .. })));
        let contradiction = IFormula::and(h.at(1), IFormula::not(h.at(1)));
        assert!(satisfies(&w, &IFormula::not(contradiction)).unwrap());
    }

    #[test]
    fn herbrand_entailment_cases() {
        let sig = antibiotic();
        let tm = Formula::Lit(sig.literal("TakesMedicine", "true").unwrap());
        let weak = Formula::Lit(sig.literal("Bacteria", "Weak").unwrap());
        let resistant = Formula::Lit(sig.literal("Bacteria", "Resistant").unwrap());
        let a4 = Formula::and(tm.clone(), weak);
        let a5 = Formula::and(tm.clone(), resistant);
        assert!(herbrand_entails(&a4, &a4));
        assert!(herbrand_entails(&a4, &tm));
        assert!(!herbrand_entails(&a4, &a5));
        assert!(!herbrand_entails(&a5, &a4));
        assert!(!herbrand_entails(&tm, &a4));
    }

    #[test]
    fn signature_rejects_bad_input() {
        let s = |x: &str| x.to_string();
        assert_eq!(Signature::new(vec![], vec![], 3), Err(LangError::NoFluents));
        assert_eq!(
            Signature::new(vec![(s("F"), vec![s("a")])], vec![s("F")], 3),
            Err(LangError::DuplicateSymbol(s("F")))
        );
        assert_eq!(
            Signature::new(vec![(s("F"), vec![s("a")])], vec![], 0),
            Err(LangError::MaxinstTooSmall)
        );
        assert!(Signature::new(vec![(s("F"), vec![s("a"), s("a")])], vec![], 1).is_err());
    }

    #[test]
    fn state_space_size() {
        let sig = antibiotic();
        assert_eq!(sig.fluent_states().len(), 6);
        assert_eq!(sig.states().len(), 12);
        assert_eq!(sig.show_state(&sig.states()[1]), "{Bacteria=Weak, Rash=Present, TakesMedicine=true}");
    }
}
