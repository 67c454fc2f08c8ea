//! The universe-shrinking decision procedure.
//!
//! [`check_universe`] repeatedly asks an approximation oracle for a string `a`
//! near some witness, restricts the candidate universe to the Hamming ball
//! around `a`, and compacts what is left into a smaller lexicographic universe.
//! Once the universe is small it enumerates. It never answers `true` without
//! having seen the verifier accept, whatever the oracle does.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ball::{ball_universe_count, neighborhood_radius, restrict_verifier, rank, Ball, Universe};
use crate::bits::BitString;
use crate::combinatorics::ApproxParams;
use crate::error::{HamError, Result};
use crate::seed::rng_from_seed;
use crate::verifier::{SharedVerifier, Verifier};

/// A (possibly simulated) Hamming-approximation algorithm.
pub trait ApproxOracle {
    /// Called once before each witness length is tried.
    fn start(&mut self, _n: usize) {}

    /// Returns an `n_u`-bit string, meant to lie within
    /// `⌊n_u/2 + H(n_u, α)⌋` of some accepted witness when one exists.
    fn answer(&mut self, verifier: &dyn Verifier, n_u: usize, params: &ApproxParams) -> BitString;

    /// Told about each restriction the decider performs.
    fn observe_restriction(&mut self, _parent: &Universe, _ball: &Ball, _child: &Universe) -> Result<()> {
        Ok(())
    }
}

/// Universes with at most `max(floor, n^exponent)` members are enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseCaseCap {
    pub floor: u64,
    pub exponent: u32,
}

impl BaseCaseCap {
    pub fn at(&self, n: usize) -> u64 {
        (n as u64).saturating_pow(self.exponent).max(self.floor).max(1)
    }
}

impl Default for BaseCaseCap {
    fn default() -> Self {
        Self { floor: 64, exponent: 2 }
    }
}

pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeciderConfig {
    pub params: ApproxParams,
    pub base_case_cap: BaseCaseCap,
    /// Largest universe that may be enumerated when a restriction makes no progress.
    pub enumeration_cap: u64,
}

impl DeciderConfig {
    pub fn new(params: ApproxParams) -> Self {
        Self { params, base_case_cap: BaseCaseCap::default(), enumeration_cap: DEFAULT_ENUMERATION_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    True,
    False,
}

impl From<bool> for Outcome {
    fn from(b: bool) -> Self {
        if b { Outcome::True } else { Outcome::False }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunTrace {
    pub recursion_count: u64,
    #[serde(with = "crate::serde_biguint::vec")]
    pub u_sequence: Vec<BigUint>,
    pub oracle_calls: u64,
    pub outcome: Outcome,
    pub fallback_used: bool,
}

impl RunTrace {
    pub fn accepted(&self) -> bool {
        self.outcome == Outcome::True
    }
}

fn enumerate_universe(univ: &Universe, v: &dyn Verifier) -> bool {
    univ.members().any(|w| v.accepts(&w))
}

/// Decide whether `verifier` accepts some string of `universe`.
///
/// Precondition: every accepted string lies in `universe`.
pub fn check_universe(
    n: usize,
    universe: Universe,
    verifier: SharedVerifier,
    oracle: &mut dyn ApproxOracle,
    cfg: &DeciderConfig,
) -> Result<(bool, RunTrace)> {
    let base_cap = BigUint::from(cfg.base_case_cap.at(n));
    let mut univ = universe;
    let mut v = verifier;
    let mut trace = RunTrace {
        recursion_count: 0,
        u_sequence: Vec::new(),
        oracle_calls: 0,
        outcome: Outcome::False,
        fallback_used: false,
    };
    let finish = |mut trace: RunTrace, accepted: bool| {
        trace.outcome = accepted.into();
        Ok((accepted, trace))
    };

    loop {
        trace.u_sequence.push(univ.size().clone());
        if univ.size() <= &base_cap {
            let accepted = enumerate_universe(&univ, v.as_ref());
            return finish(trace, accepted);
        }

        let n_u = univ.bit_length();
        let a = oracle.answer(v.as_ref(), n_u, &cfg.params);
        trace.oracle_calls += 1;
        if a.len() != n_u {
            return Err(HamError::MalformedOracleAnswer { expected: n_u, got: a.len() });
        }
        let ball = Ball::new(a, neighborhood_radius(n_u, &cfg.params));
        let shrunk = ball_universe_count(&univ, &ball)?;

        if shrunk.is_zero() {
            // nothing in [u] is near the answer
            return finish(trace, false);
        }
        if &shrunk == univ.size() {
            if univ.size() > &BigUint::from(cfg.enumeration_cap) {
                return Err(HamError::CannotShrink(univ.size().to_string()));
            }
            trace.fallback_used = true;
            let accepted = enumerate_universe(&univ, v.as_ref());
            return finish(trace, accepted);
        }

        let restricted = restrict_verifier(v, &univ, ball)?;
        oracle.observe_restriction(restricted.parent(), restricted.ball(), restricted.child())?;
        univ = restricted.child().clone();
        v = Arc::new(restricted);
        trace.recursion_count += 1;
    }
}

/// Try every witness length `0..=max_len`; true iff some length succeeds.
pub fn decide<F>(family: F, max_len: usize, oracle: &mut dyn ApproxOracle, cfg: &DeciderConfig) -> Result<bool>
where
    F: Fn(usize) -> SharedVerifier,
{
    for n in 0..=max_len {
        let v = family(n);
        assert_eq!(v.witness_length(), n, "family member {n} has the wrong witness length");
        oracle.start(n);
        let (accepted, _) = check_universe(n, Universe::full(n), v, oracle, cfg)?;
        if accepted {
            return Ok(true);
        }
    }
    Ok(false)
}

/// How many bits a planted oracle flips in the tracked witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlipPolicy {
    /// Exactly the full radius `⌊n_u/2 + H(n_u, α)⌋` (capped at `n_u`).
    ExactMax,
    /// Uniform in `0..=radius`.
    UniformUpToMax,
    /// Return the witness image itself.
    Zero,
}

/// Simulated compliant oracle built around a planted witness.
///
/// It follows the witness through each restriction via `φ⁻¹`, which the
/// decider reports through [`ApproxOracle::observe_restriction`]; the
/// decider itself never sees the plant.
#[derive(Debug, Clone)]
pub struct PlantedOracle {
    plant: Option<BitString>,
    image: Option<BitString>,
    policy: FlipPolicy,
    rng: ChaCha8Rng,
}

impl PlantedOracle {
    pub fn new(plant: Option<BitString>, policy: FlipPolicy, seed: u64) -> Self {
        Self { image: plant.clone(), plant, policy, rng: rng_from_seed(seed) }
    }

    /// The plant's coordinates in the current universe.
    pub fn image(&self) -> Option<&BitString> {
        self.image.as_ref()
    }
}

/// Free-function constructor mirroring [`PlantedOracle::new`].
pub fn planted_oracle(plant: Option<BitString>, policy: FlipPolicy, seed: u64) -> PlantedOracle {
    PlantedOracle::new(plant, policy, seed)
}

impl ApproxOracle for PlantedOracle {
    fn start(&mut self, n: usize) {
        self.image = self.plant.clone().filter(|p| p.len() == n);
    }

    fn answer(&mut self, _verifier: &dyn Verifier, n_u: usize, params: &ApproxParams) -> BitString {
        let Some(image) = self.image.as_ref().filter(|w| w.len() == n_u) else {
            return BitString::random(n_u, &mut self.rng);
        };
        let radius = neighborhood_radius(n_u, params).min(n_u);
        let flips = match self.policy {
            FlipPolicy::ExactMax => radius,
            FlipPolicy::UniformUpToMax => self.rng.gen_range(0..=radius),
            FlipPolicy::Zero => 0,
        };
        let mut a = image.clone();
        for i in sample(&mut self.rng, n_u, flips).into_iter() {
            a.flip(i);
        }
        a
    }

    fn observe_restriction(&mut self, parent: &Universe, ball: &Ball, child: &Universe) -> Result<()> {
        if let Some(w) = self.image.take() {
            let r = rank(parent, ball, &w).map_err(|_| HamError::TrackingBroken(w.to_string()))?;
            self.image = Some(BitString::from_value(&(r - 1u32), child.bit_length())?);
        }
        Ok(())
    }
}

/// Oracle that ignores every guarantee.
#[derive(Debug, Clone)]
pub struct NoncompliantOracle {
    rng: ChaCha8Rng,
    wrong_length: bool,
}

impl NoncompliantOracle {
    pub fn new(seed: u64) -> Self {
        Self { rng: rng_from_seed(seed), wrong_length: false }
    }

    /// Answers one bit too long.
    pub fn malformed(seed: u64) -> Self {
        Self { rng: rng_from_seed(seed), wrong_length: true }
    }
}

pub fn adversarial_noncompliant_oracle(seed: u64) -> NoncompliantOracle {
    NoncompliantOracle::new(seed)
}

impl ApproxOracle for NoncompliantOracle {
    fn answer(&mut self, _verifier: &dyn Verifier, n_u: usize, _params: &ApproxParams) -> BitString {
        let len = if self.wrong_length { n_u + 1 } else { n_u };
        BitString::random(len, &mut self.rng)
    }
}

/// `recursion_count / (n · P(n, α))`, the normalized iteration count.
pub fn normalized_recursions(trace: &RunTrace, n: usize, params: &ApproxParams) -> Result<f64> {
    let p = crate::combinatorics::p_bound(n as u64, params)?;
    Ok(trace.recursion_count.to_f64().unwrap_or(f64::INFINITY) / (n as f64 * p))
}
