use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::parser::{RawFormula, RawLit, RawOutcome, RawQuery, Stmt};
use super::{
    body_mentions_action, CProp, DomainDescription, IProp, Location, PProp, QueryError, Violation,
    ViolationKind,
};
use crate::lang::{
    herbrand_entails, Formula, IFormula, Literal, Outcome, PartialFluentState, Signature, Subject,
};
use crate::prob::Probability;

const START: Location = Location { line: 1, column: 1 };

fn push(out: &mut Vec<Violation>, kind: ViolationKind, loc: Option<Location>) {
    out.push(Violation { kind, location: loc });
}

enum LitError {
    UnknownSymbol(String),
    UnknownValue { subject: String, value: String },
}

fn resolve_lit(sig: &Signature, raw: &RawLit) -> Result<Literal, (LitError, Location)> {
    let subject = sig.lookup(&raw.subject.text).ok_or_else(|| {
        (LitError::UnknownSymbol(raw.subject.text.clone()), raw.subject.loc)
    })?;
    let value = sig.value_of(subject, &raw.value.text).ok_or_else(|| {
        (
            LitError::UnknownValue { subject: raw.subject.text.clone(), value: raw.value.text.clone() },
            raw.value.loc,
        )
    })?;
    Ok(Literal { subject, value })
}

fn lit_violation(e: LitError) -> ViolationKind {
    match e {
        LitError::UnknownSymbol(s) => ViolationKind::UnknownSymbol(s),
        LitError::UnknownValue { subject, value } => ViolationKind::UnknownValue { subject, value },
    }
}

fn lit_query_error(e: LitError) -> QueryError {
    match e {
        LitError::UnknownSymbol(s) => QueryError::UnknownSymbol(s),
        LitError::UnknownValue { subject, value } => QueryError::UnknownValue { subject, value },
    }
}

fn resolve_formula_with(
    sig: &Signature,
    raw: &RawFormula,
    on_err: &mut dyn FnMut(LitError, Location),
) -> Option<Formula> {
    let two = |a: &RawFormula, b: &RawFormula, on_err: &mut dyn FnMut(LitError, Location)| {
        let a = resolve_formula_with(sig, a, on_err);
        let b = resolve_formula_with(sig, b, on_err);
        Some((a?, b?))
    };
    Some(match raw {
        RawFormula::Lit(l) => match resolve_lit(sig, l) {
            Ok(l) => Formula::Lit(l),
            Err((e, loc)) => {
                on_err(e, loc);
                return None;
            }
        },
        RawFormula::Not(f) => Formula::not(resolve_formula_with(sig, f, on_err)?),
        RawFormula::And(a, b) => {
            let (a, b) = two(a, b, on_err)?;
            Formula::and(a, b)
        }
        RawFormula::Or(a, b) => {
            let (a, b) = two(a, b, on_err)?;
            Formula::or(a, b)
        }
        RawFormula::Implies(a, b) => {
            let (a, b) = two(a, b, on_err)?;
            Formula::implies(a, b)
        }
    })
}

pub(crate) fn resolve_formula(sig: &Signature, raw: &RawFormula) -> Result<Formula, QueryError> {
    let mut first = None;
    let f = resolve_formula_with(sig, raw, &mut |e, _| {
        first.get_or_insert(e);
    });
    match (f, first) {
        (Some(f), None) => Ok(f),
        (_, Some(e)) => Err(lit_query_error(e)),
        (None, None) => unreachable!("resolution failed without an error"),
    }
}

pub(crate) fn resolve_query(sig: &Signature, raw: &RawQuery) -> Result<IFormula, QueryError> {
    Ok(match raw {
        RawQuery::At(f, instant, _) => {
            if *instant > sig.maxinst() {
                return Err(QueryError::InstantOutOfRange { instant: *instant, maxinst: sig.maxinst() });
            }
            resolve_formula(sig, f)?.at(*instant)
        }
        RawQuery::Not(q) => IFormula::not(resolve_query(sig, q)?),
        RawQuery::And(a, b) => IFormula::and(resolve_query(sig, a)?, resolve_query(sig, b)?),
        RawQuery::Or(a, b) => IFormula::or(resolve_query(sig, a)?, resolve_query(sig, b)?),
        RawQuery::Implies(a, b) => IFormula::implies(resolve_query(sig, a)?, resolve_query(sig, b)?),
    })
}

fn resolve_effect(sig: &Signature, lits: &[RawLit], out: &mut Vec<Violation>) -> Option<PartialFluentState> {
    let mut effect = BTreeMap::new();
    let mut ok = true;
    for raw in lits {
        match resolve_lit(sig, raw) {
            Ok(Literal { subject: Subject::Fluent(f), value }) => {
                if let Some(prev) = effect.insert(f, value) {
                    if prev != value {
                        push(out, ViolationKind::InconsistentEffect(raw.subject.text.clone()), Some(raw.subject.loc));
                        ok = false;
                    }
                }
            }
            Ok(Literal { subject: Subject::Action(_), .. }) => {
                push(out, ViolationKind::ActionInEffect(raw.subject.text.clone()), Some(raw.subject.loc));
                ok = false;
            }
            Err((e, loc)) => {
                push(out, lit_violation(e), Some(loc));
                ok = false;
            }
        }
    }
    ok.then_some(PartialFluentState(effect))
}

fn resolve_head(sig: &Signature, raw: &[RawOutcome], out: &mut Vec<Violation>) -> Option<Vec<Outcome>> {
    let mut head = Vec::with_capacity(raw.len());
    let mut ok = true;
    for o in raw {
        let effect = resolve_effect(sig, &o.lits, out);
        let weight = match Probability::new(o.weight.clone()) {
            Ok(p) => Some(p),
            Err(_) => {
                push(out, ViolationKind::WeightOutOfRange(ratio_text(&o.weight)), Some(o.loc));
                None
            }
        };
        match (effect, weight) {
            (Some(effect), Some(weight)) => head.push(Outcome::new(effect, weight)),
            _ => ok = false,
        }
    }
    ok.then_some(head)
}

fn ratio_text(r: &BigRational) -> String {
    if r.denom().is_one() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

fn head_sum(head: &[Outcome]) -> BigRational {
    head.iter().fold(BigRational::zero(), |acc, o| acc + o.weight.ratio())
}

/// Adds the implicit `(∅, 1 - s)` outcome when the weights fall short and no
/// empty effect is written.
fn complete_head(head: &mut Vec<Outcome>) {
    let sum = head_sum(head);
    if sum < BigRational::one() && !sum.is_negative() && head.iter().all(|o| !o.effect.is_empty()) {
        let rest = Probability::new(BigRational::one() - sum).expect("remainder lies in (0, 1]");
        head.push(Outcome::new(PartialFluentState::empty(), rest));
    }
}

fn check_head(sig: &Signature, head: &[Outcome], loc: Option<Location>, out: &mut Vec<Violation>) {
    for o in head {
        if o.weight.is_zero() {
            push(out, ViolationKind::WeightOutOfRange(alloc::format!("{}", o.weight)), loc);
        }
        if !sig.contains_partial(&o.effect) {
            push(out, ViolationKind::ForeignSymbol, loc);
            return;
        }
    }
    let sum = head_sum(head);
    if !sum.is_one() {
        push(out, ViolationKind::WeightSum(ratio_text(&sum)), loc);
    }
    let mut seen = BTreeSet::new();
    for o in head {
        if !seen.insert(&o.effect) {
            push(out, ViolationKind::DuplicateEffect(sig.show_partial(&o.effect)), loc);
        }
    }
}

pub(crate) fn check_iprop(sig: &Signature, iprop: &IProp, loc: Option<Location>, out: &mut Vec<Violation>) {
    let before = out.len();
    check_head(sig, &iprop.head, loc, out);
    if out[before..].iter().any(|v| v.kind == ViolationKind::ForeignSymbol) {
        return;
    }
    for o in &iprop.head {
        if let Some(f) = sig.fluents().find(|f| !o.effect.0.contains_key(f)) {
            push(out, ViolationKind::NonTotalInitialEffect(String::from(sig.fluent_name(f))), loc);
        }
    }
}

pub(crate) fn check_cprop(sig: &Signature, c: &CProp, loc: Option<Location>, out: &mut Vec<Violation>) {
    if !c.body.literals().iter().all(|l| sig.contains_literal(l)) {
        push(out, ViolationKind::ForeignSymbol, loc);
        return;
    }
    check_head(sig, &c.head, loc, out);
    if !body_mentions_action(sig, &c.body) {
        push(out, ViolationKind::BodyNoAction, loc);
    }
}

/// Condition (i): no body Herbrand-entails another body.
pub(crate) fn check_body_pairs(cprops: &[CProp], locs: &[Location], out: &mut Vec<Violation>) {
    for (i, a) in cprops.iter().enumerate() {
        for (j, b) in cprops.iter().enumerate() {
            if i != j && herbrand_entails(&a.body, &b.body) {
                push(out, ViolationKind::BodyEntailment { first: i + 1, second: j + 1 }, locs.get(i).copied());
            }
        }
    }
}

pub(crate) fn check_pprops(sig: &Signature, pprops: &[PProp], locs: &[Location], out: &mut Vec<Violation>) {
    let mut seen = BTreeSet::new();
    for (i, p) in pprops.iter().enumerate() {
        let loc = locs.get(i).copied();
        if p.action.0 >= sig.action_count() {
            push(out, ViolationKind::ForeignSymbol, loc);
            continue;
        }
        if p.prob.is_zero() {
            push(out, ViolationKind::PPropProbOutOfRange(alloc::format!("{}", p.prob)), loc);
        }
        if p.instant >= sig.maxinst() {
            push(out, ViolationKind::PPropInstantTooLate { instant: p.instant, maxinst: sig.maxinst() }, loc);
        }
        if !seen.insert((p.action, p.instant)) {
            let action = String::from(sig.action_name(p.action));
            push(out, ViolationKind::DuplicatePProp { action, instant: p.instant }, loc);
        }
    }
}

pub(crate) fn resolve(stmts: Vec<Stmt>) -> Result<DomainDescription, Vec<Violation>> {
    let mut out = Vec::new();
    let mut fluents: Vec<(String, Vec<String>)> = Vec::new();
    let mut actions: Vec<String> = Vec::new();
    let mut maxinst: Option<u32> = None;
    let is_fluent = |fs: &[(String, Vec<String>)], n: &str| fs.iter().any(|(f, _)| f == n);

    for stmt in &stmts {
        match stmt {
            Stmt::Fluent { name, values } => {
                if is_fluent(&fluents, &name.text) {
                    push(&mut out, ViolationKind::DuplicateVProp(name.text.clone()), Some(name.loc));
                    continue;
                }
                if actions.contains(&name.text) {
                    push(&mut out, ViolationKind::NameClash(name.text.clone()), Some(name.loc));
                    continue;
                }
                let mut vals: Vec<String> = Vec::new();
                for v in values {
                    if vals.contains(&v.text) {
                        let kind = ViolationKind::DuplicateValue { fluent: name.text.clone(), value: v.text.clone() };
                        push(&mut out, kind, Some(v.loc));
                    } else {
                        vals.push(v.text.clone());
                    }
                }
                fluents.push((name.text.clone(), vals));
            }
            Stmt::Action { name } => {
                if actions.contains(&name.text) {
                    push(&mut out, ViolationKind::DuplicateAction(name.text.clone()), Some(name.loc));
                } else if is_fluent(&fluents, &name.text) {
                    push(&mut out, ViolationKind::NameClash(name.text.clone()), Some(name.loc));
                } else {
                    actions.push(name.text.clone());
                }
            }
            Stmt::Maxinst { value, loc } => {
                if maxinst.is_some() {
                    push(&mut out, ViolationKind::DuplicateMaxinst, Some(*loc));
                } else {
                    if *value < 1 {
                        push(&mut out, ViolationKind::MaxinstTooSmall, Some(*loc));
                    }
                    maxinst = Some(*value);
                }
            }
            _ => {}
        }
    }

    let iprop_locs: Vec<Location> = stmts
        .iter()
        .filter_map(|s| match s {
            Stmt::Initially { loc, .. } => Some(*loc),
            _ => None,
        })
        .collect();
    match iprop_locs.len() {
        0 => push(&mut out, ViolationKind::MissingIProp, Some(START)),
        1 => {}
        _ => {
            for loc in &iprop_locs[1..] {
                push(&mut out, ViolationKind::MultipleIProps, Some(*loc));
            }
        }
    }
    if maxinst.is_none() {
        push(&mut out, ViolationKind::MissingMaxinst, Some(START));
    }
    if fluents.is_empty() {
        push(&mut out, ViolationKind::NoFluents, Some(START));
        out.sort_by_key(|v| v.location);
        return Err(out);
    }
    let window = maxinst.filter(|m| *m >= 1);
    let sig = Signature::new(fluents, actions, window.unwrap_or(1))
        .expect("declarations were deduplicated above");

    let mut iprop = None;
    let mut cprops = Vec::new();
    let mut cprop_locs = Vec::new();
    let mut pprops = Vec::new();
    let mut pprop_locs = Vec::new();
    for stmt in &stmts {
        match stmt {
            Stmt::Initially { head, loc } => {
                if iprop.is_some() || Some(loc) != iprop_locs.first() {
                    continue;
                }
                if let Some(head) = resolve_head(&sig, head, &mut out) {
                    let ip = IProp { head };
                    check_iprop(&sig, &ip, Some(*loc), &mut out);
                    iprop = Some(ip);
                }
            }
            Stmt::Causes { body, head, loc } => {
                let body = resolve_formula_with(&sig, body, &mut |e, l| {
                    push(&mut out, lit_violation(e), Some(l));
                });
                let head = resolve_head(&sig, head, &mut out);
                if let (Some(body), Some(mut head)) = (body, head) {
                    complete_head(&mut head);
                    let c = CProp { body, head };
                    check_cprop(&sig, &c, Some(*loc), &mut out);
                    cprops.push(c);
                    cprop_locs.push(*loc);
                }
            }
            Stmt::Performed { action, instant, prob, loc } => {
                let id = match sig.lookup(&action.text) {
                    Some(Subject::Action(a)) => a,
                    Some(Subject::Fluent(_)) => {
                        push(&mut out, ViolationKind::NotAnAction(action.text.clone()), Some(action.loc));
                        continue;
                    }
                    None => {
                        push(&mut out, ViolationKind::UnknownSymbol(action.text.clone()), Some(action.loc));
                        continue;
                    }
                };
                let prob = match prob {
                    None => Probability::one(),
                    Some(r) => match Probability::new(r.clone()) {
                        Ok(p) => p,
                        Err(_) => {
                            push(&mut out, ViolationKind::PPropProbOutOfRange(ratio_text(r)), Some(*loc));
                            continue;
                        }
                    },
                };
                pprops.push(PProp { action: id, instant: *instant, prob });
                pprop_locs.push(*loc);
            }
            _ => {}
        }
    }
    check_body_pairs(&cprops, &cprop_locs, &mut out);
    if window.is_some() {
        check_pprops(&sig, &pprops, &pprop_locs, &mut out);
    }

    out.sort_by_key(|v| v.location);
    match iprop {
        Some(iprop) if out.is_empty() => Ok(DomainDescription::from_checked(sig, iprop, cprops, pprops)),
        _ => Err(out),
    }
}
