//! Fixtures shared by the benches.

use std::sync::Arc;

use hamwit_core::ball::neighborhood_radius;
use hamwit_core::seed::rng_from_seed;
use hamwit_core::verifier::SetVerifier;
use hamwit_core::{ApproxParams, Ball, BigUint, BitString, SharedVerifier, Universe};

pub fn params() -> ApproxParams {
    ApproxParams::new(0.25).expect("positive alpha")
}

/// A universe just above `2^{n-1}` and its neighborhood ball around a
/// random center.
pub fn ball_fixture(n: usize, seed: u64) -> (Universe, Ball) {
    let mut rng = rng_from_seed(seed);
    let offset = BitString::random(n - 1, &mut rng).value();
    let univ = Universe::new((BigUint::from(1u8) << (n - 1)) + offset + 1u32).expect("nonempty universe");
    let center = BitString::random(n, &mut rng);
    (univ, Ball::new(center, neighborhood_radius(n, &params())))
}

/// A verifier accepting one random `n`-bit string, and that string.
pub fn planted_fixture(n: usize, seed: u64) -> (SharedVerifier, BitString) {
    let w = BitString::random(n, &mut rng_from_seed(seed));
    (Arc::new(SetVerifier::new(n, [w.clone()])), w)
}
