//! Seeded generators of valid domain descriptions and formulas, for property
//! tests and the acceptance suite.
//!
//! Generated c-propositions never activate together: every body fixes its own
//! action to true and every other action to false, and two bodies for the
//! same action disagree on the value of one fluent.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand_core::RngCore;

use crate::lang::{
    ActionId, Formula, FluentId, IFormula, Literal, Outcome, PartialFluentState, Signature, ValueId,
};
use crate::prob::Probability;
use crate::syntax::{CProp, DomainDescription, IProp, PProp};

/// Size bounds for [`random_domain`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomainShape {
    pub max_fluents: usize,
    pub max_values: usize,
    pub max_actions: usize,
    pub max_maxinst: u32,
    pub max_pprops: usize,
}

impl DomainShape {
    pub const SMALL: DomainShape =
        DomainShape { max_fluents: 3, max_values: 3, max_actions: 2, max_maxinst: 4, max_pprops: 4 };
    pub const MICRO: DomainShape =
        DomainShape { max_fluents: 2, max_values: 2, max_actions: 1, max_maxinst: 3, max_pprops: 3 };
}

/// Uniform integer in `lo..=hi`.
fn range<R: RngCore>(rng: &mut R, lo: usize, hi: usize) -> usize {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as usize
}

fn coin<R: RngCore>(rng: &mut R) -> bool {
    rng.next_u32() & 1 == 1
}

fn normalized(raw: &[u64]) -> Vec<Probability> {
    let total: u64 = raw.iter().sum();
    raw.iter()
        .map(|&w| Probability::new(BigRational::new(BigInt::from(w), BigInt::from(total))).expect("share of a total"))
        .collect()
}

fn head<R: RngCore>(rng: &mut R, effects: Vec<PartialFluentState>) -> Vec<Outcome> {
    let raw: Vec<u64> = effects.iter().map(|_| range(rng, 1, 5) as u64).collect();
    effects.into_iter().zip(normalized(&raw)).map(|(e, w)| Outcome::new(e, w)).collect()
}

fn partial_effect<R: RngCore>(rng: &mut R, sig: &Signature) -> PartialFluentState {
    sig.fluents()
        .filter_map(|f| coin(rng).then(|| (f, ValueId(range(rng, 0, sig.values(f).len() - 1)))))
        .collect()
}

fn total_effect<R: RngCore>(rng: &mut R, sig: &Signature) -> PartialFluentState {
    sig.fluents().map(|f| (f, ValueId(range(rng, 0, sig.values(f).len() - 1)))).collect()
}

fn distinct<R: RngCore, G: FnMut(&mut R) -> PartialFluentState>(rng: &mut R, n: usize, mut gen: G) -> Vec<PartialFluentState> {
    let mut out: Vec<PartialFluentState> = Vec::new();
    for _ in 0..4 * n {
        let e = gen(rng);
        if !out.contains(&e) {
            out.push(e);
        }
        if out.len() == n {
            break;
        }
    }
    out
}

fn guard(sig: &Signature, a: ActionId) -> Vec<Literal> {
    sig.actions().map(|b| Literal::action(b, a == b)).collect()
}

/// A valid description within `shape`, deterministic in the generator state.
pub fn random_domain<R: RngCore>(rng: &mut R, shape: &DomainShape) -> DomainDescription {
    let fluent_count = range(rng, 1, shape.max_fluents);
    let fluents: Vec<(String, Vec<String>)> = (0..fluent_count)
        .map(|i| {
            let n = range(rng, 1, shape.max_values);
            (format!("F{i}"), (0..n).map(|v| format!("v{v}")).collect())
        })
        .collect();
    let actions: Vec<String> = (0..range(rng, 0, shape.max_actions)).map(|i| format!("A{i}")).collect();
    let maxinst = range(rng, 1, shape.max_maxinst as usize) as u32;
    let sig = Signature::new(fluents, actions, maxinst).expect("generated names are distinct");

    let n_init = range(rng, 1, 3);
    let initial = distinct(rng, n_init, |r| total_effect(r, &sig));
    let iprop = IProp { head: head(rng, initial) };

    let mut cprops = Vec::new();
    for a in sig.actions() {
        let f = FluentId(range(rng, 0, sig.fluent_count() - 1));
        let values = sig.values(f).len();
        let split = values >= 2 && coin(rng);
        let conditions: Vec<Option<Literal>> = if split {
            let v1 = range(rng, 0, values - 1);
            let v2 = (v1 + range(rng, 1, values - 1)) % values;
            alloc::vec![Some(Literal::fluent(f, ValueId(v1))), Some(Literal::fluent(f, ValueId(v2)))]
        } else if coin(rng) {
            alloc::vec![Some(Literal::fluent(f, ValueId(range(rng, 0, values - 1))))]
        } else {
            alloc::vec![None]
        };
        for cond in conditions {
            let body = Formula::conjunction(guard(&sig, a).into_iter().chain(cond));
            let n = range(rng, 1, 3);
            let effects = distinct(rng, n, |r| partial_effect(r, &sig));
            cprops.push(CProp { body, head: head(rng, effects) });
        }
    }

    let probs = [(1, 1), (1, 2), (1, 3), (2, 5), (99, 100)];
    let mut pprops: Vec<PProp> = Vec::new();
    if sig.action_count() > 0 {
        for _ in 0..range(rng, 0, shape.max_pprops) {
            let action = ActionId(range(rng, 0, sig.action_count() - 1));
            let instant = range(rng, 0, maxinst as usize - 1) as u32;
            if pprops.iter().any(|p| p.action == action && p.instant == instant) {
                continue;
            }
            let (n, d) = probs[range(rng, 0, probs.len() - 1)];
            pprops.push(PProp { action, instant, prob: Probability::from_ratio(n, d).expect("fixed table") });
        }
    }
    DomainDescription::new(sig, iprop, cprops, pprops).expect("generated descriptions satisfy every condition")
}

/// A random literal of the signature.
pub fn random_literal<R: RngCore>(rng: &mut R, sig: &Signature) -> Literal {
    let subjects = sig.fluent_count() + sig.action_count();
    let k = range(rng, 0, subjects - 1);
    if k < sig.fluent_count() {
        let f = FluentId(k);
        Literal::fluent(f, ValueId(range(rng, 0, sig.values(f).len() - 1)))
    } else {
        Literal::action(ActionId(k - sig.fluent_count()), coin(rng))
    }
}

/// A formula of at most `depth` connectives over at most `max_literals`
/// distinct literals.
pub fn random_formula<R: RngCore>(rng: &mut R, sig: &Signature, depth: u32, max_literals: usize) -> Formula {
    let pool: Vec<Literal> = (0..max_literals.max(1)).map(|_| random_literal(rng, sig)).collect();
    formula_from(rng, &pool, depth)
}

fn formula_from<R: RngCore>(rng: &mut R, pool: &[Literal], depth: u32) -> Formula {
    if depth == 0 || range(rng, 0, 3) == 0 {
        return Formula::Lit(pool[range(rng, 0, pool.len() - 1)]);
    }
    let sub = |rng: &mut R| Box::new(formula_from(rng, pool, depth - 1));
    match range(rng, 0, 3) {
        0 => Formula::Not(sub(rng)),
        1 => Formula::And(sub(rng), sub(rng)),
        2 => Formula::Or(sub(rng), sub(rng)),
        _ => Formula::Implies(sub(rng), sub(rng)),
    }
}

/// An i-formula over instants `0..=maxinst`.
pub fn random_iformula<R: RngCore>(rng: &mut R, sig: &Signature, depth: u32) -> IFormula {
    if depth == 0 || range(rng, 0, 2) == 0 {
        let instant = range(rng, 0, sig.maxinst() as usize) as u32;
        return random_literal(rng, sig).at(instant);
    }
    match range(rng, 0, 3) {
        0 => IFormula::not(random_iformula(rng, sig, depth - 1)),
        1 => IFormula::and(random_iformula(rng, sig, depth - 1), random_iformula(rng, sig, depth - 1)),
        2 => IFormula::or(random_iformula(rng, sig, depth - 1), random_iformula(rng, sig, depth - 1)),
        _ => IFormula::implies(random_iformula(rng, sig, depth - 1), random_iformula(rng, sig, depth - 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::enumerate;
    use rand_chacha::ChaCha8Rng;
    use rand_core::SeedableRng;

    #[test]
    fn generated_domains_enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let dd = random_domain(&mut rng, &DomainShape::SMALL);
            assert!(dd.signature().fluent_count() <= 3);
            assert!(dd.signature().action_count() <= 2);
            assert!(dd.maxinst() <= 4);
            enumerate(&dd).expect("no concurrent activation");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = random_domain(&mut ChaCha8Rng::seed_from_u64(5), &DomainShape::MICRO);
        let b = random_domain(&mut ChaCha8Rng::seed_from_u64(5), &DomainShape::MICRO);
        assert_eq!(a, b);
    }

    #[test]
    fn iformulas_stay_in_window() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let dd = random_domain(&mut rng, &DomainShape::SMALL);
        for _ in 0..50 {
            assert!(random_iformula(&mut rng, dd.signature(), 3).max_instant() <= dd.maxinst());
        }
    }
}
