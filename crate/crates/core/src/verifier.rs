//! Verifiers as total predicates over fixed-length witnesses.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::bits::BitString;

/// A deterministic, total accept predicate on `witness_length`-bit strings.
///
/// Strings of any other length are rejected.
pub trait Verifier: Send + Sync {
    fn witness_length(&self) -> usize;

    fn accepts(&self, witness: &BitString) -> bool;

    fn label(&self) -> String {
        format!("verifier[{}]", self.witness_length())
    }
}

pub type SharedVerifier = Arc<dyn Verifier>;

impl<V: Verifier + ?Sized> Verifier for Arc<V> {
    fn witness_length(&self) -> usize {
        (**self).witness_length()
    }

    fn accepts(&self, witness: &BitString) -> bool {
        (**self).accepts(witness)
    }

    fn label(&self) -> String {
        (**self).label()
    }
}

impl<V: Verifier + ?Sized> Verifier for &V {
    fn witness_length(&self) -> usize {
        (**self).witness_length()
    }

    fn accepts(&self, witness: &BitString) -> bool {
        (**self).accepts(witness)
    }

    fn label(&self) -> String {
        (**self).label()
    }
}

/// Accepts exactly a fixed set of strings.
#[derive(Debug, Clone)]
pub struct SetVerifier {
    len: usize,
    accepted: BTreeSet<BitString>,
}

impl SetVerifier {
    pub fn new(len: usize, accepted: impl IntoIterator<Item = BitString>) -> Self {
        let accepted = accepted.into_iter().inspect(|w| assert_eq!(w.len(), len)).collect();
        Self { len, accepted }
    }

    pub fn empty(len: usize) -> Self {
        Self { len, accepted: BTreeSet::new() }
    }

    pub fn accepted(&self) -> &BTreeSet<BitString> {
        &self.accepted
    }
}

impl Verifier for SetVerifier {
    fn witness_length(&self) -> usize {
        self.len
    }

    fn accepts(&self, witness: &BitString) -> bool {
        self.accepted.contains(witness)
    }

    fn label(&self) -> String {
        format!("set[{}; {} accepted]", self.len, self.accepted.len())
    }
}

/// Wraps a closure.
pub struct FnVerifier<F> {
    len: usize,
    label: String,
    predicate: F,
}

impl<F> FnVerifier<F>
where
    F: Fn(&BitString) -> bool + Send + Sync,
{
    pub fn new(len: usize, label: impl Into<String>, predicate: F) -> Self {
        Self { len, label: label.into(), predicate }
    }
}

impl<F> Verifier for FnVerifier<F>
where
    F: Fn(&BitString) -> bool + Send + Sync,
{
    fn witness_length(&self) -> usize {
        self.len
    }

    fn accepts(&self, witness: &BitString) -> bool {
        witness.len() == self.len && (self.predicate)(witness)
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}

impl<F> fmt::Debug for FnVerifier<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FnVerifier").field("len", &self.len).field("label", &self.label).finish()
    }
}
