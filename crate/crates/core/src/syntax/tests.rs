use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::lang::{FluentId, PartialFluentState, ValueId};

pub(crate) const COIN: &str = include_str!("../../../pec/examples/coin.pec");
pub(crate) const ANTIBIOTIC: &str = include_str!("../../../pec/examples/antibiotic.pec");
pub(crate) const KEYS: &str = include_str!("../../../pec/examples/keys.pec");

fn kinds(err: ParseError) -> Vec<ViolationKind> {
    match err {
        ParseError::Invalid(vs) => vs.into_iter().map(|v| v.kind).collect(),
        other => panic!("expected validation errors, got {other}"),
    }
}

fn p(n: u64, d: u64) -> Probability {
    Probability::from_ratio(n, d).unwrap()
}

#[test]
fn coin_parses() {
    let dd = parse_domain(COIN).unwrap();
    assert_eq!(dd.signature().fluent_count(), 1);
    assert_eq!(dd.signature().action_count(), 1);
    assert_eq!(dd.maxinst(), 3);
    assert_eq!(dd.cprops().len(), 1);
    assert_eq!(dd.cprops()[0].head.len(), 3);
    assert_eq!(dd.cprops()[0].head[0].weight, p(49, 100));
    assert_eq!(dd.cprops()[0].head[2].weight, p(1, 50));
    assert_eq!(dd.pprops().len(), 1);
    assert!(dd.pprops()[0].prob.is_one());
}

#[test]
fn antibiotic_and_keys_parse() {
    let dd = parse_domain(ANTIBIOTIC).unwrap();
    assert_eq!(dd.signature().fluent_count(), 2);
    assert_eq!(dd.cprops().len(), 2);
    assert_eq!(dd.pprops().len(), 2);
    assert_eq!(dd.cprops()[1].head[1].weight, p(12, 13));

    let keys = parse_domain(KEYS).unwrap();
    assert_eq!(keys.cprops().len(), 3);
    assert_eq!(keys.pprops()[0].prob, p(99, 100));
    assert_eq!(keys.maxinst(), 9);
}

#[test]
fn empty_input_lacks_iprop() {
    let ks = kinds(parse_domain("").unwrap_err());
    assert!(ks.contains(&ViolationKind::MissingIProp));
    let msg = parse_domain("").unwrap_err().to_string();
    assert!(msg.contains("no i-proposition"));
    assert!(msg.contains("condition (ii)"));
}

#[test]
fn duplicate_pprop_violates_condition_iv() {
    let src = [COIN, "Toss performed-at 1\n"].concat();
    let err = parse_domain(&src).unwrap_err();
    let ks = kinds(err.clone());
    assert_eq!(ks, vec![ViolationKind::DuplicatePProp { action: "Toss".into(), instant: 1 }]);
    assert!(err.to_string().contains("condition (iv)"));
}

#[test]
fn explicit_empty_outcome_blocks_completion() {
    let src = ANTIBIOTIC.replace("12/13", "4/13");
    let ks = kinds(parse_domain(&src).unwrap_err());
    assert_eq!(ks, vec![ViolationKind::WeightSum("5/13".into())]);
}

#[test]
fn implicit_empty_outcome_is_added() {
    let src = ANTIBIOTIC.replace(",\n    ({}, 12/13)", "");
    let dd = parse_domain(&src).unwrap();
    let head = &dd.cprops()[1].head;
    assert_eq!(head.len(), 2);
    assert!(head[1].effect.is_empty());
    assert_eq!(head[1].weight, p(12, 13));
    assert_eq!(dd, parse_domain(ANTIBIOTIC).unwrap());
}

#[test]
fn round_trip_shipped_domains() {
    for src in [COIN, ANTIBIOTIC, KEYS] {
        let dd = parse_domain(src).unwrap();
        let text = render(&dd);
        assert_eq!(parse_domain(&text).unwrap(), dd, "{text}");
    }
}

#[test]
fn render_uses_reduced_fractions() {
    let text = render(&parse_domain(COIN).unwrap());
    assert!(text.contains("({Coin=Heads}, 49/100)"));
    assert!(text.contains("({}, 1/50)"));
    assert!(text.contains("Toss performed-at 1 with-prob 1"));
}

#[test]
fn queries() {
    let dd = parse_domain(COIN).unwrap();
    let sig = dd.signature();
    let heads = sig.literal("Coin", "Heads").unwrap();
    let tails = sig.literal("Coin", "Tails").unwrap();
    assert_eq!(parse_query(sig, "[Coin=Heads]@2").unwrap(), heads.at(2));
    assert_eq!(
        parse_query(sig, "[Coin=Heads]@1 & [Coin=Tails]@3").unwrap(),
        IFormula::and(heads.at(1), tails.at(3))
    );
    assert_eq!(
        parse_query(sig, "[Coin=Heads -> Coin=Heads]@0").unwrap(),
        IFormula::implies(heads.at(0), heads.at(0))
    );
    assert_eq!(
        parse_query(sig, "[!Toss]@1").unwrap(),
        sig.literal("Toss", "false").unwrap().at(1)
    );
}

#[test]
fn query_errors() {
    let dd = parse_domain(COIN).unwrap();
    let sig = dd.signature();
    assert_eq!(parse_query(sig, "[Dice=One]@1"), Err(QueryError::UnknownSymbol("Dice".into())));
    assert!(matches!(parse_query(sig, "[Coin=Edge]@1"), Err(QueryError::UnknownValue { .. })));
    assert_eq!(
        parse_query(sig, "[Coin=Heads]@4"),
        Err(QueryError::InstantOutOfRange { instant: 4, maxinst: 3 })
    );
    assert!(matches!(parse_query(sig, "[Coin=Heads]"), Err(QueryError::Syntax { .. })));
    assert!(matches!(parse_query(sig, "[Coin=Heads]@1 &"), Err(QueryError::Syntax { .. })));
}

#[test]
fn every_violation_is_located() {
    let src = "fluent F takes-values {a, a}\n\
               fluent F takes-values {b}\n\
               fluent K takes-values {x, y}\n\
               action F\n\
               action G\n\
               maxinst 2\n\
               maxinst 3\n\
               initially-one-of {({F=a}, 1/2)}\n\
               initially-one-of {({F=a}, 1)}\n\
               F=a causes-one-of {({F=b}, 1)}\n\
               G causes-one-of {({G}, 1)}\n\
               G causes-one-of {({F=a}, 1/2), ({K=x, K=y}, 1/2)}\n\
               G performed-at 2\n\
               F performed-at 0\n\
               H performed-at 0 with-prob 0\n";
    let err = parse_domain(src).unwrap_err();
    let ParseError::Invalid(vs) = err else { panic!("expected violations") };
    assert!(vs.iter().all(|v| v.location.is_some()));
    let ks: Vec<ViolationKind> = vs.iter().map(|v| v.kind.clone()).collect();
    for expected in [
        ViolationKind::DuplicateValue { fluent: "F".into(), value: "a".into() },
        ViolationKind::DuplicateVProp("F".into()),
        ViolationKind::NameClash("F".into()),
        ViolationKind::DuplicateMaxinst,
        ViolationKind::MultipleIProps,
        ViolationKind::WeightSum("1/2".into()),
        ViolationKind::UnknownValue { subject: "F".into(), value: "b".into() },
        ViolationKind::ActionInEffect("G".into()),
        ViolationKind::InconsistentEffect("K".into()),
        ViolationKind::NonTotalInitialEffect("K".into()),
        ViolationKind::PPropInstantTooLate { instant: 2, maxinst: 2 },
        ViolationKind::NotAnAction("F".into()),
        ViolationKind::UnknownSymbol("H".into()),
    ] {
        assert!(ks.contains(&expected), "missing {expected:?} in {ks:?}");
    }
}

#[test]
fn body_conditions() {
    let base = "fluent F takes-values {a, b}\naction A\naction B\nmaxinst 2\n\
                initially-one-of {({F=a}, 1)}\n";
    let no_action = [base, "F=a causes-one-of {({F=b}, 1)}\n"].concat();
    assert_eq!(kinds(parse_domain(&no_action).unwrap_err()), vec![ViolationKind::BodyNoAction]);

    let entailing = [base, "A & F=a causes-one-of {({F=b}, 1)}\nA causes-one-of {({F=a}, 1)}\n"].concat();
    assert_eq!(
        kinds(parse_domain(&entailing).unwrap_err()),
        vec![ViolationKind::BodyEntailment { first: 1, second: 2 }]
    );

    let fine = [base, "A & F=a causes-one-of {({F=b}, 1)}\nA & F=b causes-one-of {({F=a}, 1)}\n"].concat();
    assert!(parse_domain(&fine).is_ok());

    let disjunctive = [base, "(A | B) & F=a causes-one-of {({F=b}, 1)}\n"].concat();
    assert_eq!(kinds(parse_domain(&disjunctive).unwrap_err()), vec![ViolationKind::BodyNoAction]);
}

#[test]
fn initial_effects_must_be_total() {
    let src = "fluent F takes-values {a, b}\nfluent G takes-values {x}\nmaxinst 1\n\
               initially-one-of {({F=a}, 1)}\n";
    assert_eq!(kinds(parse_domain(src).unwrap_err()), vec![ViolationKind::NonTotalInitialEffect("G".into())]);
}

#[test]
fn duplicate_effects_rejected() {
    let src = "fluent F takes-values {a, b}\naction A\nmaxinst 2\n\
               initially-one-of {({F=a}, 1/2), ({F=a}, 1/2)}\n";
    assert_eq!(kinds(parse_domain(src).unwrap_err()), vec![ViolationKind::DuplicateEffect("{F=a}".into())]);
}

#[test]
fn syntax_error_location() {
    let err = parse_domain("fluent Coin takes-values {Heads\naction").unwrap_err();
    match err {
        ParseError::Syntax { location, .. } => assert_eq!(location, Location { line: 2, column: 1 }),
        other => panic!("{other}"),
    }
}

#[test]
fn programmatic_construction_checks_conditions() {
    let dd = parse_domain(COIN).unwrap();
    let sig = dd.signature().clone();
    let heads = PartialFluentState([(FluentId(0), ValueId(0))].into_iter().collect());
    let iprop = IProp { head: vec![Outcome::new(heads, Probability::one())] };
    let rebuilt = DomainDescription::new(sig.clone(), iprop.clone(), dd.cprops().to_vec(), dd.pprops().to_vec());
    assert_eq!(rebuilt.unwrap(), dd);

    let mut late = dd.pprops().to_vec();
    late[0].instant = 3;
    let errs = DomainDescription::new(sig, iprop, dd.cprops().to_vec(), late).unwrap_err();
    assert_eq!(errs[0].kind, ViolationKind::PPropInstantTooLate { instant: 3, maxinst: 3 });
    assert!(errs[0].location.is_none());
}

#[test]
fn formula_parsing() {
    let dd = parse_domain(ANTIBIOTIC).unwrap();
    let sig = dd.signature();
    let f = parse_formula(sig, "TakesMedicine & Bacteria=Weak").unwrap();
    assert_eq!(f, dd.cprops()[0].body);
    let text: String = render_formula(sig, &f);
    assert_eq!(text, "(TakesMedicine=true & Bacteria=Weak)");
    assert_eq!(parse_formula(sig, &text).unwrap(), f);
}

#[test]
fn propositions_listing() {
    let dd = parse_domain(ANTIBIOTIC).unwrap();
    let props = dd.propositions();
    assert_eq!(props.len(), 2 + 1 + 2 + 2);
    assert!(matches!(props[0], Proposition::V { values, .. } if values.len() == 3));
    let _ = props.iter().map(|p| format_prop(p)).collect::<Vec<_>>();
}

fn format_prop(p: &Proposition<'_>) -> String {
    match p {
        Proposition::V { .. } => "v".to_string(),
        Proposition::C(_) => "c".to_string(),
        Proposition::I(_) => "i".to_string(),
        Proposition::P(_) => "p".to_string(),
    }
}
