//! Fixed-length binary strings.
//!
//! Bit 0 is the most significant bit, so the derived ordering on equal-length
//! strings is both lexicographic and numeric.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{HamError, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Self { bits: vec![false; len] }
    }

    pub fn ones(len: usize) -> Self {
        Self { bits: vec![true; len] }
    }

    /// The `len`-bit big-endian encoding of `value`.
    ///
    /// Fails when `value` needs more than `len` bits.
    pub fn from_value(value: &BigUint, len: usize) -> Result<Self> {
        let needed = value.bits() as usize;
        if needed > len {
            return Err(HamError::InvalidParameter(format!(
                "{value} does not fit in {len} bits"
            )));
        }
        let bits = (0..len)
            .map(|i| value.bit((len - 1 - i) as u64))
            .collect();
        Ok(Self { bits })
    }

    /// Like [`BitString::from_value`] for values known to fit in a `u64`.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len >= 64 || value >> len == 0, "{value} does not fit in {len} bits");
        let bits = (0..len)
            .map(|i| {
                let shift = len - 1 - i;
                shift < 64 && (value >> shift) & 1 == 1
            })
            .collect();
        Self { bits }
    }

    /// Ones at the given positions, zeros elsewhere.
    pub fn from_positions(len: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::zeros(len);
        for p in positions {
            s.bits[p] = true;
        }
        s
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        Self { bits: (0..len).map(|_| rng.gen::<bool>()).collect() }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        self.bits[i] = bit;
    }

    pub fn flip(&mut self, i: usize) {
        self.bits[i] = !self.bits[i];
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Positions holding a one, in increasing order.
    pub fn ones_positions(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }

    pub fn complement(&self) -> Self {
        Self { bits: self.bits.iter().map(|b| !b).collect() }
    }

    pub fn value(&self) -> BigUint {
        let mut v = BigUint::zero();
        for (i, &b) in self.bits.iter().enumerate() {
            if b {
                v.set_bit((self.bits.len() - 1 - i) as u64, true);
            }
        }
        v
    }

    /// The integer value, when the string has at most 64 bits.
    pub fn value_u64(&self) -> Option<u64> {
        if self.bits.len() > 64 {
            return None;
        }
        Some(self.bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64))
    }

    pub fn prefix(&self, len: usize) -> Self {
        Self { bits: self.bits[..len].to_vec() }
    }

    pub fn concat(&self, other: &BitString) -> Self {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Self { bits }
    }
}

impl From<Vec<bool>> for BitString {
    fn from(bits: Vec<bool>) -> Self {
        Self { bits }
    }
}

impl FromIterator<bool> for BitString {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self { bits: iter.into_iter().collect() }
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = HamError;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(HamError::Parse { line: 0, msg: format!("bad bit {other:?}") }),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitString::new)
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Number of positions where `x` and `y` differ.
pub fn hamming_distance(x: &BitString, y: &BitString) -> Result<usize> {
    if x.len() != y.len() {
        return Err(HamError::UnequalLengths { left: x.len(), right: y.len() });
    }
    Ok(x.bits.iter().zip(&y.bits).filter(|(a, b)| a != b).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(hamming_distance(&bs("101"), &bs("101")).unwrap(), 0);
        assert_eq!(hamming_distance(&bs("000"), &bs("111")).unwrap(), 3);
        assert_eq!(hamming_distance(&bs("1011"), &bs("0010")).unwrap(), 2);
    }

    #[test]
    fn distance_rejects_unequal_lengths() {
        let err = hamming_distance(&bs("10"), &bs("101")).unwrap_err();
        assert!(err.to_string().contains("unequal lengths"));
    }

    #[test]
    fn value_roundtrip_and_order() {
        let s = bs("0110");
        assert_eq!(s.value(), BigUint::from(6u32));
        assert_eq!(BitString::from_value(&BigUint::from(6u32), 4).unwrap(), s);
        assert_eq!(BitString::from_u64(6, 4), s);
        assert!(BitString::from_value(&BigUint::from(16u32), 4).is_err());
        assert!(bs("0111") < bs("1000"));
        assert_eq!(BitString::from_u64(0, 0), BitString::zeros(0));
    }

    proptest! {
        #[test]
        fn lexicographic_matches_numeric(x in 0u64..1 << 20, y in 0u64..1 << 20) {
            let a = BitString::from_u64(x, 20);
            let b = BitString::from_u64(y, 20);
            prop_assert_eq!(a.cmp(&b), x.cmp(&y));
            prop_assert_eq!(a.value_u64(), Some(x));
        }

        #[test]
        fn distance_is_a_metric(
            bits in proptest::collection::vec(any::<(bool, bool, bool)>(), 0..=64)
        ) {
            let x: BitString = bits.iter().map(|t| t.0).collect();
            let y: BitString = bits.iter().map(|t| t.1).collect();
            let z: BitString = bits.iter().map(|t| t.2).collect();
            let d = |a: &BitString, b: &BitString| hamming_distance(a, b).unwrap();
            prop_assert_eq!(d(&x, &x), 0);
            prop_assert_eq!(d(&x, &y), d(&y, &x));
            prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z));
            if d(&x, &y) == 0 {
                prop_assert_eq!(&x, &y);
            }
        }
    }
}
