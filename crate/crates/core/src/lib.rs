//! Hamming approximation of NP witnesses, made executable.
//!
//! - [`combinatorics`]: exact binomials, tail counts, `H(n, α)` and `P(n, α)`.
//! - [`ball`]: counting and ranking inside `Hamming ball ∩ lexicographic universe`,
//!   and verifier restriction through the compaction bijection.
//! - [`decider`]: the universe-shrinking decision procedure and simulated oracles.
//! - [`approx`]: `n/2`-approximators for natural verifiers and black-box baselines.
//! - [`gadgets`]: padding and path gadgets that amplify a single feasible bit.
//! - [`testkit`]: brute-force oracles and seeded instance generators.

pub mod approx;
pub mod ball;
pub mod bits;
pub mod cnf;
pub mod combinatorics;
pub mod decider;
pub mod error;
pub mod gadgets;
pub mod graph;
mod matching;
pub mod seed;
mod serde_biguint;
pub mod testkit;
pub mod verifier;

pub use num_bigint::BigUint;

pub use ball::{Ball, RestrictedVerifier, Universe};
pub use bits::{hamming_distance, BitString};
pub use cnf::{CnfFormula, CnfVerifier, Literal, NaeVerifier};
pub use combinatorics::{ApproxParams, LogBase};
pub use decider::{ApproxOracle, DeciderConfig, FlipPolicy, Outcome, RunTrace};
pub use error::{HamError, Result};
pub use graph::{Digraph, Graph};
pub use verifier::{SharedVerifier, Verifier};
