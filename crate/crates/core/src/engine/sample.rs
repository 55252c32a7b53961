use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{activated_at, EngineError};
use crate::lang::{FiniteWorld, FluentState, State};
use crate::prob::Probability;
use crate::syntax::DomainDescription;

/// `ceil(p * 2^64)`. For an integer draw `r`, `r < p * 2^64` iff `r < threshold(p)`,
/// so draws compare exactly without rational arithmetic.
fn threshold(p: &Probability) -> u128 {
    let scaled = p.ratio().numer() << 64u32;
    let (q, r) = scaled.div_rem(p.ratio().denom());
    let q = if r == BigInt::from(0u8) { q } else { q + 1u8 };
    q.to_u128().expect("probabilities are at most one")
}

fn cumulative<'a, I: IntoIterator<Item = &'a Probability>>(weights: I) -> Vec<u128> {
    let mut acc = Probability::zero();
    weights
        .into_iter()
        .map(|w| {
            acc = acc.checked_add(w).expect("heads sum to one");
            threshold(&acc)
        })
        .collect()
}

/// Draws well-behaved worlds of one domain by forward simulation.
/// Deterministic for a seed.
pub struct Sampler<'a> {
    dd: &'a DomainDescription,
    rng: ChaCha8Rng,
    initial: Vec<u128>,
    heads: Vec<Vec<u128>>,
    narrative: Vec<u128>,
}

impl<'a> Sampler<'a> {
    pub fn new(dd: &'a DomainDescription, seed: u64) -> Self {
        Sampler {
            dd,
            rng: ChaCha8Rng::seed_from_u64(seed),
            initial: cumulative(dd.iprop().head.iter().map(|o| &o.weight)),
            heads: dd.cprops().iter().map(|c| cumulative(c.head.iter().map(|o| &o.weight))).collect(),
            narrative: dd.pprops().iter().map(|p| threshold(&p.prob)).collect(),
        }
    }

    fn categorical(&mut self, cum: &[u128]) -> usize {
        let r = self.rng.next_u64() as u128;
        cum.iter().position(|&t| r < t).unwrap_or(cum.len() - 1)
    }

    pub fn sample(&mut self) -> Result<FiniteWorld, EngineError> {
        let dd = self.dd;
        let len = dd.maxinst() as usize + 1;
        let mut actions = alloc::vec![alloc::vec![false; dd.signature().action_count()]; len];
        for (p, &t) in dd.pprops().iter().zip(&self.narrative) {
            actions[p.instant as usize][p.action.0] = (self.rng.next_u64() as u128) < t;
        }
        let initial = self.initial.clone();
        let ic = &dd.iprop().head[self.categorical(&initial)];
        let mut fluents: FluentState =
            ic.effect.to_total(dd.signature().fluent_count()).expect("initial effects are total");
        let mut states = Vec::with_capacity(len);
        for (i, acts) in actions.into_iter().enumerate() {
            let state = State::new(fluents, acts);
            let instant = i as u32;
            fluents = state.fluents.clone();
            if instant < dd.maxinst() {
                if let Some(c) = activated_at(dd, &state, instant)? {
                    let cum = core::mem::take(&mut self.heads[c]);
                    let k = self.categorical(&cum);
                    self.heads[c] = cum;
                    fluents = fluents.update(&dd.cprops()[c].head[k].effect)?;
                }
            }
            states.push(state);
        }
        Ok(FiniteWorld::new(states))
    }
}

pub fn sample_world(dd: &DomainDescription, seed: u64) -> Result<FiniteWorld, EngineError> {
    Sampler::new(dd, seed).sample()
}
