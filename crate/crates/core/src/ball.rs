//! Hamming balls intersected with lexicographic universes.
//!
//! A [`Universe`] of size `u` is the set of the `u` smallest `n_u`-bit strings,
//! `n_u = ⌈log₂ u⌉`. A [`Ball`] is every `n_u`-bit string within `radius` of a
//! center. Everything here counts `ball ∩ universe` by prefix decomposition:
//! the strings below a bound `b` split by the first position where they drop
//! from a 1 of `b` to a 0, and each block is a full subcube whose ball count
//! is a binomial prefix sum.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bits::{hamming_distance, BitString};
use crate::combinatorics::{binomial_prefix_sum, h_bound, ApproxParams};
use crate::error::{HamError, Result};
use crate::verifier::{SharedVerifier, Verifier};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Universe {
    #[serde(with = "crate::serde_biguint")]
    u: BigUint,
    n_u: usize,
}

impl Universe {
    pub fn new(u: BigUint) -> Result<Self> {
        if u.is_zero() {
            return Err(HamError::InvalidParameter("universe size must be at least 1".into()));
        }
        let n_u = (&u - 1u32).bits() as usize;
        Ok(Self { u, n_u })
    }

    /// All `n`-bit strings.
    pub fn full(n: usize) -> Self {
        Self { u: BigUint::one() << n, n_u: n }
    }

    pub fn size(&self) -> &BigUint {
        &self.u
    }

    pub fn bit_length(&self) -> usize {
        self.n_u
    }

    pub fn is_full(&self) -> bool {
        self.u == BigUint::one() << self.n_u
    }

    pub fn contains(&self, w: &BitString) -> bool {
        w.len() == self.n_u && w.value() < self.u
    }

    /// The largest member.
    pub fn max_member(&self) -> BitString {
        BitString::from_value(&(&self.u - 1u32), self.n_u).expect("u - 1 fits in n_u bits")
    }

    /// Members in increasing order. Only sensible for small universes.
    pub fn members(&self) -> impl Iterator<Item = BitString> + '_ {
        let mut next = BigUint::zero();
        std::iter::from_fn(move || {
            if next >= self.u {
                return None;
            }
            let w = BitString::from_value(&next, self.n_u).expect("member fits");
            next += 1u32;
            Some(w)
        })
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self.u, self.n_u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ball {
    pub center: BitString,
    pub radius: usize,
}

impl Ball {
    pub fn new(center: BitString, radius: usize) -> Self {
        Self { center, radius }
    }

    /// The neighborhood used by the decider: radius `⌊n/2 + H(n, α)⌋`.
    pub fn neighborhood(center: BitString, params: &ApproxParams) -> Self {
        let radius = neighborhood_radius(center.len(), params);
        Self { center, radius }
    }

    pub fn contains(&self, w: &BitString) -> bool {
        hamming_distance(&self.center, w).is_ok_and(|d| d <= self.radius)
    }
}

/// `⌊n/2 + H(n, α)⌋`, taken as 0 for the empty string.
pub fn neighborhood_radius(n: usize, params: &ApproxParams) -> usize {
    if n == 0 {
        return 0;
    }
    let h = h_bound(n as u64, params).expect("n >= 1");
    (n as f64 / 2.0 + h).floor() as usize
}

fn completions(remaining: usize, mismatches: usize, radius: usize) -> BigUint {
    if mismatches > radius {
        BigUint::zero()
    } else {
        binomial_prefix_sum(remaining as u64, (radius - mismatches) as u64)
    }
}

/// Number of `n_u`-bit strings with prefix `s` within distance `d` of `a`.
///
/// Equals `Σ_{j=0}^{d−ℓ} C(n_u − |s|, j)` where `ℓ` is the distance from `s`
/// to the first `|s|` bits of `a`.
pub fn ball_prefix_count(a: &BitString, d: usize, s: &BitString) -> Result<BigUint> {
    if s.len() > a.len() {
        return Err(HamError::PrefixTooLong { prefix: s.len(), len: a.len() });
    }
    let mismatches = hamming_distance(s, &a.prefix(s.len()))?;
    Ok(completions(a.len() - s.len(), mismatches, d))
}

/// Ball members whose value is below `bound` (or at most `bound` when
/// `inclusive`), with `bound` read as an `n`-bit integer.
fn count_below(ball: &Ball, bound: &BigUint, inclusive: bool) -> BigUint {
    let a = &ball.center;
    let n = a.len();
    let mut total = BigUint::zero();
    let mut mismatches = 0usize;
    for i in 0..n {
        let bit = bound.bit((n - 1 - i) as u64);
        if bit {
            // strings agreeing with `bound` before i and holding 0 at i
            let m = mismatches + usize::from(a.get(i));
            total += completions(n - 1 - i, m, ball.radius);
        }
        if a.get(i) != bit {
            mismatches += 1;
            if mismatches > ball.radius {
                return total;
            }
        }
    }
    if inclusive {
        total += 1u32;
    }
    total
}

fn check_center(univ: &Universe, ball: &Ball) -> Result<()> {
    if ball.center.len() != univ.n_u {
        return Err(HamError::UnequalLengths { left: ball.center.len(), right: univ.n_u });
    }
    Ok(())
}

/// `|N(a) ∩ [u]|`.
pub fn ball_universe_count(univ: &Universe, ball: &Ball) -> Result<BigUint> {
    check_center(univ, ball)?;
    if univ.is_full() {
        return Ok(binomial_prefix_sum(univ.n_u as u64, ball.radius as u64));
    }
    Ok(count_below(ball, &univ.u, false))
}

/// `|{w ∈ N(a) : w ≤ z}|`, the inclusive lexicographic rank bound.
pub fn ball_rank_upto(univ: &Universe, ball: &Ball, z: &BitString) -> Result<BigUint> {
    check_center(univ, ball)?;
    if z.len() != univ.n_u {
        return Err(HamError::UnequalLengths { left: z.len(), right: univ.n_u });
    }
    Ok(count_below(ball, &z.value(), true))
}

/// The `rank`-th (1-based) member of `N(a) ∩ [u]` in lexicographic order.
///
/// Binary search over values in `[0, u)` for the smallest `z` whose inclusive
/// rank bound reaches `rank`.
pub fn unrank(univ: &Universe, ball: &Ball, rank: &BigUint) -> Result<BitString> {
    let count = ball_universe_count(univ, ball)?;
    if rank.is_zero() || rank > &count {
        return Err(HamError::RankOutOfBounds { rank: rank.to_string(), count: count.to_string() });
    }
    let mut lo = BigUint::zero();
    let mut hi = &univ.u - 1u32;
    while lo < hi {
        let mid: BigUint = (&lo + &hi) >> 1;
        if &count_below(ball, &mid, true) >= rank {
            hi = mid;
        } else {
            lo = mid + 1u32;
        }
    }
    let w = BitString::from_value(&lo, univ.n_u)?;
    debug_assert!(ball.contains(&w));
    Ok(w)
}

/// The 1-based rank of a member of `N(a) ∩ [u]`; inverse of [`unrank`].
pub fn rank(univ: &Universe, ball: &Ball, w: &BitString) -> Result<BigUint> {
    if !univ.contains(w) || !ball.contains(w) {
        return Err(HamError::NotAMember(w.to_string()));
    }
    ball_rank_upto(univ, ball, w)
}

/// A verifier on the compacted universe `[u′]`, `u′ = |N(a) ∩ [u]|`.
///
/// `w′` is accepted iff `w′ ∈ [u′]` and the inner verifier accepts `φ(w′)`,
/// where `φ` sends the `i`-th member of `[u′]` to the `i`-th member of
/// `N(a) ∩ [u]`. `φ` is evaluated on every query; chains of restrictions are
/// never flattened.
pub struct RestrictedVerifier {
    inner: SharedVerifier,
    ball: Ball,
    parent: Universe,
    child: Universe,
}

impl RestrictedVerifier {
    pub fn ball(&self) -> &Ball {
        &self.ball
    }

    pub fn parent(&self) -> &Universe {
        &self.parent
    }

    pub fn child(&self) -> &Universe {
        &self.child
    }

    pub fn inner(&self) -> &SharedVerifier {
        &self.inner
    }

    /// `φ(w′)`: the member of `N(a) ∩ [u]` with rank `value(w′) + 1`.
    pub fn phi(&self, w_prime: &BitString) -> Result<BitString> {
        if !self.child.contains(w_prime) {
            return Err(HamError::NotAMember(w_prime.to_string()));
        }
        unrank(&self.parent, &self.ball, &(w_prime.value() + 1u32))
    }

    /// `φ⁻¹(w)` for `w ∈ N(a) ∩ [u]`.
    pub fn phi_inverse(&self, w: &BitString) -> Result<BitString> {
        let r = rank(&self.parent, &self.ball, w)?;
        BitString::from_value(&(r - 1u32), self.child.n_u)
    }
}

/// Free-function form of [`RestrictedVerifier::phi`].
pub fn phi_apply(rv: &RestrictedVerifier, w_prime: &BitString) -> Result<BitString> {
    rv.phi(w_prime)
}

impl Verifier for RestrictedVerifier {
    fn witness_length(&self) -> usize {
        self.child.n_u
    }

    fn accepts(&self, w_prime: &BitString) -> bool {
        match self.phi(w_prime) {
            Ok(w) => self.inner.accepts(&w),
            Err(_) => false,
        }
    }

    fn label(&self) -> String {
        format!("restrict({} by {}±{}) of {}", self.parent, self.ball.center, self.ball.radius, self.inner.label())
    }
}

impl fmt::Debug for RestrictedVerifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RestrictedVerifier")
            .field("ball", &self.ball)
            .field("parent", &self.parent)
            .field("child", &self.child)
            .finish_non_exhaustive()
    }
}

/// Build `V_a` from `inner`, restricting `[u]` to `N(a) ∩ [u]`.
pub fn restrict_verifier(inner: SharedVerifier, univ: &Universe, ball: Ball) -> Result<RestrictedVerifier> {
    let count = ball_universe_count(univ, &ball)?;
    if count.is_zero() {
        return Err(HamError::EmptyRestriction);
    }
    Ok(RestrictedVerifier {
        inner,
        ball,
        parent: univ.clone(),
        child: Universe::new(count)?,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::verifier::{FnVerifier, SetVerifier};

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn scan(n: usize, a: &BitString, d: usize, u: u64) -> Vec<BitString> {
        (0..u)
            .map(|v| BitString::from_u64(v, n))
            .filter(|w| hamming_distance(w, a).unwrap() <= d)
            .collect()
    }

    #[test]
    fn universe_bit_lengths() {
        assert_eq!(Universe::new(big(1)).unwrap().bit_length(), 0);
        assert_eq!(Universe::new(big(2)).unwrap().bit_length(), 1);
        assert_eq!(Universe::new(big(5)).unwrap().bit_length(), 3);
        assert_eq!(Universe::new(big(8)).unwrap().bit_length(), 3);
        assert!(Universe::new(big(8)).unwrap().is_full());
        assert!(!Universe::new(big(6)).unwrap().is_full());
        assert!(Universe::new(big(0)).is_err());
        assert_eq!(Universe::full(0), Universe::new(big(1)).unwrap());
    }

    #[test]
    fn prefix_count_examples() {
        let a = bs("101");
        assert_eq!(ball_prefix_count(&a, 1, &bs("1")).unwrap(), big(3));
        assert_eq!(ball_prefix_count(&a, 3, &bs("")).unwrap(), big(8));
        assert_eq!(ball_prefix_count(&a, 0, &bs("0")).unwrap(), big(0));
        assert!(ball_prefix_count(&a, 1, &bs("1010")).is_err());
    }

    #[test]
    fn universe_count_examples() {
        let ball = Ball::new(bs("000"), 1);
        assert_eq!(ball_universe_count(&Universe::new(big(6)).unwrap(), &ball).unwrap(), big(4));
        assert_eq!(ball_universe_count(&Universe::new(big(8)).unwrap(), &ball).unwrap(), big(4));
        // N("0") + N("10") = 3 + 1
        let a = bs("000");
        let sum = ball_prefix_count(&a, 1, &bs("0")).unwrap() + ball_prefix_count(&a, 1, &bs("10")).unwrap();
        assert_eq!(sum, big(4));
        for n in 0..6 {
            let full = Universe::full(n);
            let everything = Ball::new(BitString::zeros(n), n);
            assert_eq!(ball_universe_count(&full, &everything).unwrap(), full.size().clone());
        }
    }

    #[test]
    fn rank_upto_examples() {
        let univ = Universe::full(3);
        assert_eq!(ball_rank_upto(&univ, &Ball::new(bs("000"), 1), &bs("010")).unwrap(), big(3));
        assert_eq!(ball_rank_upto(&univ, &Ball::new(bs("000"), 0), &bs("000")).unwrap(), big(1));
        assert_eq!(ball_rank_upto(&univ, &Ball::new(bs("010"), 3), &bs("111")).unwrap(), big(8));
    }

    #[test]
    fn unrank_examples() {
        let univ = Universe::new(big(6)).unwrap();
        let ball = Ball::new(bs("000"), 1);
        assert_eq!(unrank(&univ, &ball, &big(4)).unwrap(), bs("100"));
        assert_eq!(unrank(&univ, &ball, &big(1)).unwrap(), bs("000"));
        let err = unrank(&univ, &ball, &big(0)).unwrap_err();
        assert!(err.to_string().contains("rank out of bounds"));
        assert!(unrank(&univ, &ball, &big(5)).is_err());
    }

    #[test]
    fn unrank_matches_scan_and_rank_inverts() {
        for n in 1..=7usize {
            for center in 0..(1u64 << n) {
                let a = BitString::from_u64(center, n);
                for d in 0..=n {
                    for u in [(1u64 << (n - 1)) + 1, (1u64 << n) - 1, 1u64 << n] {
                        if u <= 1u64 << (n - 1) {
                            continue;
                        }
                        let univ = Universe::new(big(u)).unwrap();
                        let ball = Ball::new(a.clone(), d);
                        let members = scan(n, &a, d, u);
                        assert_eq!(ball_universe_count(&univ, &ball).unwrap(), big(members.len() as u64));
                        for (i, w) in members.iter().enumerate() {
                            let r = big(i as u64 + 1);
                            assert_eq!(&unrank(&univ, &ball, &r).unwrap(), w);
                            assert_eq!(rank(&univ, &ball, w).unwrap(), r);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rank_rejects_non_members() {
        let univ = Universe::new(big(6)).unwrap();
        let ball = Ball::new(bs("000"), 1);
        assert!(rank(&univ, &ball, &bs("011")).is_err());
        assert!(rank(&univ, &ball, &bs("110")).is_err());
    }

    #[test]
    fn phi_examples() {
        let univ = Universe::new(big(6)).unwrap();
        let inner: SharedVerifier = Arc::new(SetVerifier::new(3, [bs("100")]));
        let rv = restrict_verifier(inner, &univ, Ball::new(bs("000"), 1)).unwrap();
        assert_eq!(rv.child().size(), &big(4));
        assert_eq!(rv.child().bit_length(), 2);
        assert_eq!(phi_apply(&rv, &bs("11")).unwrap(), bs("100"));
        assert_eq!(phi_apply(&rv, &bs("00")).unwrap(), bs("000"));
        assert!(phi_apply(&rv, &bs("111")).is_err());
        assert_eq!(rv.phi_inverse(&bs("100")).unwrap(), bs("11"));
        let accepted: Vec<_> = rv.child().members().filter(|w| rv.accepts(w)).collect();
        assert_eq!(accepted, vec![bs("11")]);
    }

    #[test]
    fn phi_rejects_values_outside_child() {
        // child u' = 3, n_u' = 2, so "11" is outside [u'].
        let univ = Universe::full(2);
        let inner: SharedVerifier = Arc::new(FnVerifier::new(2, "all", |_| true));
        let rv = restrict_verifier(inner, &univ, Ball::new(bs("00"), 1)).unwrap();
        assert_eq!(rv.child().size(), &big(3));
        let err = rv.phi(&bs("11")).unwrap_err();
        assert!(err.to_string().contains("not a member"));
        assert!(!rv.accepts(&bs("11")));
    }

    #[test]
    fn restriction_preserves_empty_and_identity() {
        let univ = Universe::new(big(6)).unwrap();
        let none: SharedVerifier = Arc::new(SetVerifier::empty(3));
        let rv = restrict_verifier(none, &univ, Ball::new(bs("000"), 1)).unwrap();
        assert!(rv.child().members().all(|w| !rv.accepts(&w)));

        let all: SharedVerifier = Arc::new(FnVerifier::new(3, "below 6", |w: &BitString| w.value_u64().unwrap() < 6));
        let rv = restrict_verifier(all, &univ, Ball::new(bs("000"), 3)).unwrap();
        assert_eq!(rv.child(), &univ);
        assert!(rv.child().members().all(|w| rv.accepts(&w)));
        for w in univ.members() {
            assert_eq!(rv.phi(&w).unwrap(), w);
        }
    }

    #[test]
    fn empty_restriction_is_an_error() {
        let univ = Universe::new(big(3)).unwrap();
        let inner: SharedVerifier = Arc::new(SetVerifier::empty(2));
        let err = restrict_verifier(inner, &univ, Ball::new(bs("11"), 0)).unwrap_err();
        assert_eq!(err, HamError::EmptyRestriction);
    }

    #[test]
    fn chains_nest() {
        let target = bs("101101");
        let inner: SharedVerifier = Arc::new(SetVerifier::new(6, [target.clone()]));
        let top = Universe::full(6);
        let first = Arc::new(restrict_verifier(inner, &top, Ball::new(bs("100100"), 3)).unwrap());
        let image1 = first.phi_inverse(&target).unwrap();
        let mid = first.child().clone();
        let mut center = image1.clone();
        center.flip(0);
        let second = restrict_verifier(first.clone(), &mid, Ball::new(center, 1)).unwrap();
        let image2 = second.phi_inverse(&image1).unwrap();
        let accepted: Vec<_> = second.child().members().filter(|w| second.accepts(w)).collect();
        assert_eq!(accepted, vec![image2.clone()]);
        assert_eq!(first.phi(&second.phi(&image2).unwrap()).unwrap(), target);
    }

    #[test]
    fn telescoping_identity() {
        for u in 1u64..=64 {
            let univ = Universe::new(big(u)).unwrap();
            let n = univ.bit_length();
            for d in 0..=n {
                let ball = Ball::new(BitString::from_u64(u / 3, n), d);
                assert_eq!(
                    ball_rank_upto(&univ, &ball, &univ.max_member()).unwrap(),
                    ball_universe_count(&univ, &ball).unwrap()
                );
            }
        }
    }

    #[test]
    fn neighborhood_radius_values() {
        let p = ApproxParams::new(0.25).unwrap();
        assert_eq!(neighborhood_radius(10, &p), 7);
        assert_eq!(neighborhood_radius(1, &p), 0);
        assert_eq!(neighborhood_radius(0, &p), 0);
    }
}
