//! Concrete syntax for domain descriptions and queries.
//!
//! Parsing runs in two phases. The parser builds a located statement list
//! and reports the first syntax error; resolution then checks every
//! statement against the declared vocabulary and the well-formedness
//! conditions, collecting all violations before giving up.

mod lexer;
mod parser;
mod render;
mod validate;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::lang::{
    herbrand_entails, ActionId, FluentId, Formula, IFormula, Instant, Literal, Outcome, Signature,
};
use crate::prob::Probability;

pub use render::{render, render_formula, render_iformula, render_literal};

/// 1-based position in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ViolationKind {
    #[error("no fluent is declared; every fluent needs a takes-values proposition")]
    NoFluents,
    #[error("fluent `{0}` has more than one v-proposition (condition (iii))")]
    DuplicateVProp(String),
    #[error("value `{value}` is listed twice for fluent `{fluent}`")]
    DuplicateValue { fluent: String, value: String },
    #[error("action `{0}` is declared more than once")]
    DuplicateAction(String),
    #[error("`{0}` is declared both as a fluent and as an action")]
    NameClash(String),
    #[error("no maxinst statement")]
    MissingMaxinst,
    #[error("more than one maxinst statement")]
    DuplicateMaxinst,
    #[error("maxinst must be at least 1")]
    MaxinstTooSmall,
    #[error("no i-proposition; a domain needs exactly one (condition (ii))")]
    MissingIProp,
    #[error("more than one i-proposition; a domain needs exactly one (condition (ii))")]
    MultipleIProps,
    #[error("`{0}` is not a declared fluent or action (no v-proposition or action declaration)")]
    UnknownSymbol(String),
    #[error("`{value}` is not a value of `{subject}`")]
    UnknownValue { subject: String, value: String },
    #[error("`{0}` is a fluent; only actions can be performed")]
    NotAnAction(String),
    #[error("effects may only mention fluents, found action `{0}`")]
    ActionInEffect(String),
    #[error("effect assigns fluent `{0}` more than once")]
    InconsistentEffect(String),
    #[error("initial outcome does not assign fluent `{0}`; i-proposition effects must be total")]
    NonTotalInitialEffect(String),
    #[error("two outcomes share the effect {0}")]
    DuplicateEffect(String),
    #[error("outcome weight {0} is not in (0, 1]")]
    WeightOutOfRange(String),
    #[error("outcome weights sum to {0}, not 1")]
    WeightSum(String),
    #[error("c-proposition body does not entail A=true for any action A")]
    BodyNoAction,
    #[error("body of c-proposition {first} Herbrand-entails the body of c-proposition {second} (condition (i))")]
    BodyEntailment { first: usize, second: usize },
    #[error("`{action}` is performed at instant {instant} more than once (condition (iv))")]
    DuplicatePProp { action: String, instant: Instant },
    #[error("p-proposition instant {instant} must be below maxinst {maxinst}")]
    PPropInstantTooLate { instant: Instant, maxinst: Instant },
    #[error("p-proposition probability {0} is not in (0, 1]")]
    PPropProbOutOfRange(String),
    #[error("proposition mentions a symbol outside the signature")]
    ForeignSymbol,
}

/// A broken well-formedness condition, located when it came from source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: Option<Location>,
}

impl Violation {
    pub fn at(kind: ViolationKind, location: Location) -> Self {
        Violation { kind, location: Some(location) }
    }

    pub fn unlocated(kind: ViolationKind) -> Self {
        Violation { kind, location: None }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.location {
            Some(loc) => write!(f, "{loc}: {}", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

fn join_violations(vs: &[Violation]) -> String {
    let lines: Vec<String> = vs.iter().map(|v| alloc::format!("{v}")).collect();
    lines.join("\n")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{location}: {message}")]
    Syntax { location: Location, message: String },
    #[error("{}", join_violations(.0))]
    Invalid(Vec<Violation>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("{location}: {message}")]
    Syntax { location: Location, message: String },
    #[error("`{0}` is not a declared fluent or action")]
    UnknownSymbol(String),
    #[error("`{value}` is not a value of `{subject}`")]
    UnknownValue { subject: String, value: String },
    #[error("instant {instant} lies beyond maxinst {maxinst}")]
    InstantOutOfRange { instant: Instant, maxinst: Instant },
}

/// `θ causes-one-of {O1, ..., Om}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CProp {
    pub body: Formula,
    pub head: Vec<Outcome>,
}

/// `initially-one-of {O1, ..., Om}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IProp {
    pub head: Vec<Outcome>,
}

/// `A performed-at I with-prob P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PProp {
    pub action: ActionId,
    pub instant: Instant,
    pub prob: Probability,
}

/// `φ holds-with-prob P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HProposition {
    pub query: IFormula,
    pub prob: Probability,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Proposition<'a> {
    V { fluent: FluentId, values: &'a [String] },
    C(&'a CProp),
    I(&'a IProp),
    P(&'a PProp),
}

/// A validated domain description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainDescription {
    signature: Signature,
    iprop: IProp,
    cprops: Vec<CProp>,
    pprops: Vec<PProp>,
}

impl DomainDescription {
    /// Builds a description from resolved parts, checking every condition.
    /// c-proposition heads must already sum to one; no completion is done.
    pub fn new(
        signature: Signature,
        iprop: IProp,
        cprops: Vec<CProp>,
        pprops: Vec<PProp>,
    ) -> Result<Self, Vec<Violation>> {
        let mut out = Vec::new();
        validate::check_iprop(&signature, &iprop, None, &mut out);
        for c in &cprops {
            validate::check_cprop(&signature, c, None, &mut out);
        }
        validate::check_body_pairs(&cprops, &[], &mut out);
        validate::check_pprops(&signature, &pprops, &[], &mut out);
        if out.is_empty() {
            Ok(DomainDescription { signature, iprop, cprops, pprops })
        } else {
            Err(out)
        }
    }

    pub(crate) fn from_checked(
        signature: Signature,
        iprop: IProp,
        cprops: Vec<CProp>,
        pprops: Vec<PProp>,
    ) -> Self {
        DomainDescription { signature, iprop, cprops, pprops }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn iprop(&self) -> &IProp {
        &self.iprop
    }

    pub fn cprops(&self) -> &[CProp] {
        &self.cprops
    }

    /// The action narrative.
    pub fn pprops(&self) -> &[PProp] {
        &self.pprops
    }

    pub fn maxinst(&self) -> Instant {
        self.signature.maxinst()
    }

    pub fn propositions(&self) -> Vec<Proposition<'_>> {
        let mut out: Vec<Proposition<'_>> = self
            .signature
            .fluents()
            .map(|f| Proposition::V { fluent: f, values: self.signature.values(f) })
            .collect();
        out.push(Proposition::I(&self.iprop));
        out.extend(self.cprops.iter().map(Proposition::C));
        out.extend(self.pprops.iter().map(Proposition::P));
        out
    }

    /// Same domain with the narrative replaced. Dropping p-propositions
    /// cannot break any condition, so callers pass a subset of the original.
    pub(crate) fn with_narrative(&self, pprops: Vec<PProp>) -> Self {
        DomainDescription {
            signature: self.signature.clone(),
            iprop: self.iprop.clone(),
            cprops: self.cprops.clone(),
            pprops,
        }
    }
}

/// Parses and validates a `.pec` domain description.
pub fn parse_domain(text: &str) -> Result<DomainDescription, ParseError> {
    let tokens = lexer::tokenize(text).map_err(|e| ParseError::Syntax {
        location: e.location,
        message: e.message,
    })?;
    let stmts = parser::parse_statements(&tokens).map_err(|e| ParseError::Syntax {
        location: e.location,
        message: e.message,
    })?;
    validate::resolve(stmts).map_err(ParseError::Invalid)
}

/// Parses an i-formula such as `[Coin=Heads]@1 & [Coin=Tails]@3`.
pub fn parse_query(signature: &Signature, text: &str) -> Result<IFormula, QueryError> {
    let syntax = |e: parser::SyntaxError| QueryError::Syntax { location: e.location, message: e.message };
    let tokens = lexer::tokenize(text).map_err(syntax)?;
    let raw = parser::parse_query(&tokens).map_err(syntax)?;
    validate::resolve_query(signature, &raw)
}

/// Parses a plain formula against a signature, e.g. `Toss & Coin=Heads`.
pub fn parse_formula(signature: &Signature, text: &str) -> Result<Formula, QueryError> {
    let syntax = |e: parser::SyntaxError| QueryError::Syntax { location: e.location, message: e.message };
    let tokens = lexer::tokenize(text).map_err(syntax)?;
    let raw = parser::parse_formula_only(&tokens).map_err(syntax)?;
    validate::resolve_formula(signature, &raw)
}

/// True if `body` Herbrand-entails `A=true` for some action `A`.
pub fn body_mentions_action(signature: &Signature, body: &Formula) -> bool {
    signature
        .actions()
        .any(|a| herbrand_entails(body, &Formula::Lit(Literal::action(a, true))))
}

#[cfg(test)]
pub(crate) mod tests;
