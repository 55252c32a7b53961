//! The model weight of a world factors through the narrative cut just before
//! its last cause occurrence.

use pec_core::engine::{
    enumerate, indistinguishable_up_to, narrative_eval, occurrences, restrict, transition, Restriction,
};
use pec_core::syntax::{parse_domain, DomainDescription};

const COIN: &str = include_str!("../../pec/examples/coin.pec");
const ANTIBIOTIC: &str = include_str!("../../pec/examples/antibiotic.pec");
const KEYS: &str = include_str!("../../pec/examples/keys.pec");

fn check(dd: &DomainDescription) -> usize {
    let mut checked = 0;
    for w in enumerate(dd).unwrap() {
        let occ = occurrences(dd, &w.world).unwrap();
        let Some(&(last, _)) = occ.last() else {
            // no occurrence: the weight is the narrative times the initial choice
            let ic = &w.traces[0].initial.weight;
            assert_eq!(w.weight, narrative_eval(dd, &w.world) * ic.clone());
            continue;
        };
        let before = restrict(dd, Restriction::Before(last));
        let prior = enumerate(&before).unwrap();
        let matches: Vec<_> = prior.iter().filter(|p| indistinguishable_up_to(&p.world, &w.world, last)).collect();
        assert_eq!(matches.len(), 1, "W' must be unique");
        let wp = matches[0];
        let ratio = narrative_eval(dd, &w.world).checked_div(&narrative_eval(&before, &wp.world)).unwrap();
        let after = &w.world.at(last + 1).fluents;
        let t = transition(dd, w.world.at(last), after).unwrap();
        assert_eq!(w.weight, ratio * wp.weight.clone() * t);
        checked += 1;
    }
    checked
}

#[test]
fn coin() {
    assert_eq!(check(&parse_domain(COIN).unwrap()), 2);
}

#[test]
fn antibiotic() {
    assert!(check(&parse_domain(ANTIBIOTIC).unwrap()) > 0);
}

#[test]
fn keys() {
    assert!(check(&parse_domain(KEYS).unwrap()) > 0);
}
