//! Translation of domain descriptions into answer set programs.
//!
//! The domain-dependent part lists sorts, values, outcome memberships, cause
//! rules and the narrative. The fixed axiom bank from [`domain_independent`]
//! turns those facts into worlds, choices and evaluations.

mod dnf;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::lang::{Literal, PartialFluentState, Signature, Subject};
use crate::syntax::DomainDescription;

pub use dnf::{eval_dnf, to_dnf, Conjunction, Signed};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AspError {
    #[error("`{first}` and `{second}` both translate to `{mangled}`")]
    Collision { first: String, second: String, mangled: String },
    #[error("`{name}` translates to the reserved word `{mangled}`")]
    Reserved { name: String, mangled: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseKind {
    Comment,
    Directive,
    Fact,
    Rule,
    Choice,
    Constraint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub kind: ClauseKind,
    pub text: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AspProgram {
    pub clauses: Vec<Clause>,
}

impl AspProgram {
    fn push(&mut self, kind: ClauseKind, text: String) {
        self.clauses.push(Clause { kind, text });
    }

    /// Clauses whose head (or text, for constraints) starts with `pred(`.
    pub fn count(&self, pred: &str) -> usize {
        let prefix = alloc::format!("{pred}(");
        self.clauses.iter().filter(|c| c.kind != ClauseKind::Comment && c.text.starts_with(&prefix)).count()
    }

    pub fn extend(&mut self, other: AspProgram) {
        self.clauses.extend(other.clauses);
    }
}

impl fmt::Display for AspProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{}", c.text)?;
        }
        Ok(())
    }
}

const RESERVED: [&str; 2] = ["not", "maxinst"];

/// Lowercases the first character.
pub fn mangle(name: &str) -> String {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) => c.to_lowercase().chain(chars).collect(),
        None => String::new(),
    }
}

fn check_names<'a, I: IntoIterator<Item = &'a str>>(names: I) -> Result<(), AspError> {
    let mut seen: BTreeMap<String, &str> = BTreeMap::new();
    for name in names {
        let mangled = mangle(name);
        if RESERVED.contains(&mangled.as_str()) {
            return Err(AspError::Reserved { name: name.to_string(), mangled });
        }
        if let Some(first) = seen.insert(mangled.clone(), name) {
            return Err(AspError::Collision { first: first.to_string(), second: name.to_string(), mangled });
        }
    }
    Ok(())
}

fn check_signature(sig: &Signature) -> Result<(), AspError> {
    let symbols = sig.fluents().map(|f| sig.fluent_name(f)).chain(sig.actions().map(|a| sig.action_name(a)));
    check_names(symbols)?;
    for f in sig.fluents() {
        check_names(sig.values(f).iter().map(String::as_str))?;
    }
    Ok(())
}

fn pair(sig: &Signature, lit: &Literal) -> String {
    alloc::format!(
        "({},{})",
        mangle(sig.subject_name(lit.subject)),
        mangle(sig.value_name(lit.subject, lit.value))
    )
}

fn memberships(prog: &mut AspProgram, sig: &Signature, effect: &PartialFluentState, id: &str) {
    for (f, v) in effect.iter() {
        let lit = Literal { subject: Subject::Fluent(f), value: v };
        prog.push(ClauseKind::Fact, alloc::format!("belongsTo({}, {id}).", pair(sig, &lit)));
    }
}

fn body(sig: &Signature, conj: &Conjunction) -> String {
    let mut atoms: Vec<String> = conj
        .iter()
        .map(|s| {
            let atom = alloc::format!("holds(({}, I))", pair(sig, &s.lit));
            if s.positive {
                atom
            } else {
                alloc::format!("not {atom}")
            }
        })
        .collect();
    // keeps `I` safe when every literal is negated
    if conj.iter().all(|s| !s.positive) {
        atoms.insert(0, String::from("instant(I)"));
    }
    atoms.join(", ")
}

/// Outcome constant for outcome `j` (1-based) of proposition `n`; `n = 0` is
/// the i-proposition and c-propositions count from 1.
pub fn outcome_id(n: usize, j: usize) -> String {
    alloc::format!("id_{n}_{j}")
}

/// The domain-dependent clauses.
pub fn translate(dd: &DomainDescription) -> Result<AspProgram, AspError> {
    let sig = dd.signature();
    check_signature(sig)?;
    let mut prog = AspProgram::default();
    prog.push(ClauseKind::Directive, alloc::format!("#const maxinst={}.", dd.maxinst()));
    for f in sig.fluents() {
        prog.push(ClauseKind::Fact, alloc::format!("fluent({}).", mangle(sig.fluent_name(f))));
    }
    for a in sig.actions() {
        prog.push(ClauseKind::Fact, alloc::format!("action({}).", mangle(sig.action_name(a))));
    }
    prog.push(ClauseKind::Fact, String::from("instant(0..maxinst)."));
    for f in sig.fluents() {
        for v in sig.values(f) {
            prog.push(ClauseKind::Fact, alloc::format!("possVal({},{}).", mangle(sig.fluent_name(f)), mangle(v)));
        }
    }
    for (j, o) in dd.iprop().head.iter().enumerate() {
        let id = outcome_id(0, j + 1);
        memberships(&mut prog, sig, &o.effect, &id);
        prog.push(ClauseKind::Fact, alloc::format!("initialCondition(({id}, {})).", o.weight));
    }
    for (n, c) in dd.cprops().iter().enumerate() {
        let disjuncts = to_dnf(&c.body);
        for (j, o) in c.head.iter().enumerate() {
            let id = outcome_id(n + 1, j + 1);
            memberships(&mut prog, sig, &o.effect, &id);
            for conj in &disjuncts {
                prog.push(
                    ClauseKind::Rule,
                    alloc::format!("causesOutcome(({id}, {}), I) :- {}.", o.weight, body(sig, conj)),
                );
            }
        }
    }
    for p in dd.pprops() {
        prog.push(
            ClauseKind::Fact,
            alloc::format!("performed({},{},{}).", mangle(sig.action_name(p.action)), p.instant, p.prob),
        );
    }
    Ok(prog)
}

const AXIOMS: &[(ClauseKind, &str)] = &[
    (ClauseKind::Comment, "% actions are boolean"),
    (ClauseKind::Rule, "possVal(A,true) :- action(A)."),
    (ClauseKind::Rule, "possVal(A,false) :- action(A)."),
    (ClauseKind::Comment, "% fluents and actions together"),
    (ClauseKind::Rule, "fluentOrAction(X) :- fluent(X)."),
    (ClauseKind::Rule, "fluentOrAction(X) :- action(X)."),
    (ClauseKind::Comment, "% literals and literals at instants"),
    (ClauseKind::Rule, "literal((X,V)) :- possVal(X,V)."),
    (ClauseKind::Rule, "iLiteral((L,I)) :- literal(L), instant(I)."),
    (ClauseKind::Comment, "% certain and possible performances"),
    (ClauseKind::Rule, "definitelyPerformed(A,I) :- performed(A,I,1)."),
    (ClauseKind::Rule, "possiblyPerformed(A,I) :- performed(A,I,P)."),
    (ClauseKind::Comment, "% a world: one value per fluent and action at every instant"),
    (ClauseKind::Choice, "1{ holds(((X,V),I)) : iLiteral(((X,V),I)) }1 :- instant(I), fluentOrAction(X)."),
    (ClauseKind::Comment, "% cause occurrences and effect choices"),
    (ClauseKind::Rule, "inOcc(I) :- instant(I), causesOutcome(O,I)."),
    (ClauseKind::Choice, "1{ effectChoice(O,I) : causesOutcome(O,I) }1 :- inOcc(I)."),
    (ClauseKind::Comment, "% initial choice"),
    (ClauseKind::Choice, "1{ initialChoice(O) : initialCondition(O) }1."),
    (ClauseKind::Comment, "% closed world assumption for actions"),
    (ClauseKind::Constraint, ":- action(A), instant(I), holds(((A,true),I)), not possiblyPerformed(A,I)."),
    (ClauseKind::Constraint, ":- action(A), instant(I), holds(((A,false),I)), definitelyPerformed(A,I)."),
    (ClauseKind::Comment, "% initial condition"),
    (ClauseKind::Constraint, ":- initialChoice((S,P)), literal(L), belongsTo(L,S), not holds((L,0))."),
    (ClauseKind::Comment, "% justified change"),
    (
        ClauseKind::Constraint,
        ":- instant(I), effectChoice((X,P),I), fluent(F), belongsTo((F,V),X), not holds(((F,V),I+1)), I<maxinst.",
    ),
    (
        ClauseKind::Constraint,
        ":- instant(I), fluent(F), not holds(((F,V),I)), effectChoice((X,P),I), not belongsTo((F,V),X), holds(((F,V),I+1)), I<maxinst.",
    ),
    (
        ClauseKind::Constraint,
        ":- fluent(F), instant(I), holds(((F,V),I)), not inOcc(I), not holds(((F,V),I+1)), I<maxinst.",
    ),
    (ClauseKind::Comment, "% narrative evaluation"),
    (ClauseKind::Rule, "eval(A,I,P) :- action(A), instant(I), performed(A,I,P), holds(((A,true),I))."),
    (ClauseKind::Rule, "eval(A,I,1-P) :- action(A), instant(I), performed(A,I,P), holds(((A,false),I))."),
];

/// The fixed axioms shared by every domain.
pub fn domain_independent() -> AspProgram {
    AspProgram {
        clauses: AXIOMS.iter().map(|(kind, text)| Clause { kind: *kind, text: String::from(*text) }).collect(),
    }
}

/// The program text: a header comment, the translation and optionally the axioms.
pub fn emit(dd: &DomainDescription, with_axioms: bool) -> Result<String, AspError> {
    let mut prog = AspProgram::default();
    prog.push(ClauseKind::Comment, String::from("% translated from a PEC domain description"));
    prog.extend(translate(dd)?);
    if with_axioms {
        prog.push(ClauseKind::Comment, String::from("% domain-independent axioms"));
        prog.extend(domain_independent());
    }
    Ok(prog.to_string())
}
