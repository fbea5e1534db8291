//! Bounded brute-force language enumeration, the test oracle everything else
//! is judged against.

use std::collections::BTreeSet;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::nfa::Nfa;

/// Guard shared by all enumerators: refuse bounds whose prefix tree cannot be
/// walked at desk scale.
fn check_bound(max_len: usize, alphabet_len: usize) -> Result<()> {
    let ok = max_len <= 12
        && (alphabet_len as u64)
            .checked_pow(max_len as u32)
            .is_some_and(|n| n <= 1 << 24);
    if ok {
        Ok(())
    } else {
        Err(Error::EnumerationBound {
            max_len,
            alphabet_len,
        })
    }
}

impl Nfa {
    /// Every string of length ≤ `max_len` accepted from the start set,
    /// computed by exhaustive generation over the prefix tree.
    pub fn enumerate_language(&self, max_len: usize) -> Result<BTreeSet<String>> {
        self.enumerate_from_set(self.starts().clone(), max_len)
    }

    /// The state language of `from`: strings of length ≤ `max_len` leading
    /// from `from` to an accepting state.
    pub fn enumerate_language_from(&self, from: usize, max_len: usize) -> Result<BTreeSet<String>> {
        assert!(from < self.n_states());
        self.enumerate_from_set(BTreeSet::from([from]), max_len)
    }

    fn enumerate_from_set(
        &self,
        active: BTreeSet<usize>,
        max_len: usize,
    ) -> Result<BTreeSet<String>> {
        check_bound(max_len, self.alphabet().len())?;
        let mut out = BTreeSet::new();
        let mut prefix = String::new();
        self.walk(&active, max_len, &mut prefix, &mut out);
        Ok(out)
    }

    fn walk(
        &self,
        active: &BTreeSet<usize>,
        remaining: usize,
        prefix: &mut String,
        out: &mut BTreeSet<String>,
    ) {
        if active.iter().any(|&q| self.is_accepting(q)) {
            out.insert(prefix.clone());
        }
        if remaining == 0 || active.is_empty() {
            return;
        }
        for rank in 0..self.alphabet().len() {
            let mut next = BTreeSet::new();
            for &q in active {
                next.extend(self.transitions(q, rank).iter().copied());
            }
            prefix.push(self.alphabet().symbol(rank));
            self.walk(&next, remaining - 1, prefix, out);
            prefix.pop();
        }
    }
}

impl Dfa {
    /// Every string of length ≤ `max_len` accepted from the start state.
    pub fn enumerate_language(&self, max_len: usize) -> Result<BTreeSet<String>> {
        self.enumerate_language_from(self.start(), max_len)
    }

    /// Strings of length ≤ `max_len` leading from `from` to an accepting state.
    pub fn enumerate_language_from(&self, from: usize, max_len: usize) -> Result<BTreeSet<String>> {
        assert!(from < self.n_states());
        check_bound(max_len, self.alphabet().len())?;
        let mut out = BTreeSet::new();
        let mut prefix = String::new();
        self.walk(from, max_len, &mut prefix, &mut out);
        Ok(out)
    }

    fn walk(&self, q: usize, remaining: usize, prefix: &mut String, out: &mut BTreeSet<String>) {
        if self.is_accepting(q) {
            out.insert(prefix.clone());
        }
        if remaining == 0 {
            return;
        }
        for rank in 0..self.alphabet().len() {
            prefix.push(self.alphabet().symbol(rank));
            self.walk(self.next(q, rank), remaining - 1, prefix, out);
            prefix.pop();
        }
    }
}
