//! Deterministic finite automata with a total transition function.

use std::collections::BTreeSet;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// A complete DFA: exactly one start state and one successor per
/// `(state, symbol)` pair. A dead state, when needed, is an ordinary state
/// whose transitions all point back to itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    n_states: usize,
    /// Row-major: `delta[state * |Sigma| + rank]`.
    delta: Vec<usize>,
    start: usize,
    accepting: BTreeSet<usize>,
    labels: Option<Vec<String>>,
}

impl Dfa {
    /// A DFA whose transitions all initially point at state 0; callers must
    /// overwrite every entry they care about.
    pub fn new(alphabet: Alphabet, n_states: usize, start: usize) -> Dfa {
        assert!(start < n_states);
        let width = alphabet.len();
        Dfa {
            alphabet,
            n_states,
            delta: vec![0; n_states * width],
            start,
            accepting: BTreeSet::new(),
            labels: None,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn accepting(&self) -> &BTreeSet<usize> {
        &self.accepting
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting.contains(&state)
    }

    pub fn next(&self, state: usize, rank: usize) -> usize {
        self.delta[state * self.alphabet.len() + rank]
    }

    pub fn set_transition(&mut self, from: usize, rank: usize, to: usize) {
        assert!(from < self.n_states && to < self.n_states && rank < self.alphabet.len());
        self.delta[from * self.alphabet.len() + rank] = to;
    }

    pub fn mark_accepting(&mut self, state: usize) {
        assert!(state < self.n_states);
        self.accepting.insert(state);
    }

    pub fn set_label(&mut self, state: usize, label: String) {
        assert!(state < self.n_states);
        self.labels
            .get_or_insert_with(|| vec![String::new(); self.n_states])[state] = label;
    }

    pub fn label(&self, state: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[state].as_str())
    }

    /// Runs the automaton on `s` from the start state and reports acceptance.
    pub fn accepts(&self, s: &str) -> Result<bool> {
        let mut q = self.start;
        for (i, c) in s.chars().enumerate() {
            let rank = self.alphabet.rank(c).ok_or(Error::ForeignSymbol {
                position: i + 1,
                symbol: c,
            })?;
            q = self.next(q, rank);
        }
        Ok(self.accepting.contains(&q))
    }
}
