//! Non-deterministic finite automata with a start-state set.

use std::collections::{BTreeSet, VecDeque};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// An NFA over an [`Alphabet`]: states are `0..n_states`, the transition
/// function maps `(state, symbol rank)` to a set of states, and there may be
/// several start states (no synthetic merged start state is ever added).
///
/// Optional per-state labels carry display names such as the pattern subsets
/// of the level construction or the `(e,k)` grid coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    n_states: usize,
    /// Row-major: `delta[state * |Sigma| + rank]`.
    delta: Vec<BTreeSet<usize>>,
    starts: BTreeSet<usize>,
    accepting: BTreeSet<usize>,
    labels: Option<Vec<String>>,
}

impl Nfa {
    /// An NFA with `n_states` states and no transitions, starts or accepting
    /// states yet.
    pub fn new(alphabet: Alphabet, n_states: usize) -> Nfa {
        let width = alphabet.len();
        Nfa {
            alphabet,
            n_states,
            delta: vec![BTreeSet::new(); n_states * width],
            starts: BTreeSet::new(),
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

    pub fn starts(&self) -> &BTreeSet<usize> {
        &self.starts
    }

    pub fn accepting(&self) -> &BTreeSet<usize> {
        &self.accepting
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting.contains(&state)
    }

    /// Target set of `(state, rank)`.
    pub fn transitions(&self, state: usize, rank: usize) -> &BTreeSet<usize> {
        &self.delta[state * self.alphabet.len() + rank]
    }

    /// Total number of transitions, counting each `(state, symbol, target)` once.
    pub fn transition_count(&self) -> usize {
        self.delta.iter().map(|s| s.len()).sum()
    }

    pub fn add_transition(&mut self, from: usize, rank: usize, to: usize) {
        assert!(from < self.n_states && to < self.n_states && rank < self.alphabet.len());
        self.delta[from * self.alphabet.len() + rank].insert(to);
    }

    pub fn mark_start(&mut self, state: usize) {
        assert!(state < self.n_states);
        self.starts.insert(state);
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

    /// States reachable from some start state (forward breadth-first search).
    pub fn accessible_states(&self) -> BTreeSet<usize> {
        let mut seen: BTreeSet<usize> = self.starts.clone();
        let mut queue: VecDeque<usize> = self.starts.iter().copied().collect();
        while let Some(q) = queue.pop_front() {
            for rank in 0..self.alphabet.len() {
                for &t in self.transitions(q, rank) {
                    if seen.insert(t) {
                        queue.push_back(t);
                    }
                }
            }
        }
        seen
    }

    /// States from which an accepting state is reachable, i.e. states with a
    /// non-empty language (backward breadth-first search from the accepting set).
    pub fn coaccessible_states(&self) -> BTreeSet<usize> {
        let width = self.alphabet.len();
        let mut predecessors: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.n_states];
        for from in 0..self.n_states {
            for rank in 0..width {
                for &to in self.transitions(from, rank) {
                    predecessors[to].insert(from);
                }
            }
        }
        let mut seen: BTreeSet<usize> = self.accepting.clone();
        let mut queue: VecDeque<usize> = self.accepting.iter().copied().collect();
        while let Some(q) = queue.pop_front() {
            for &p in &predecessors[q] {
                if seen.insert(p) {
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    /// Restricts to accessible-and-coaccessible states, renumbering the
    /// survivors in ascending old-index order. The accepted language is
    /// unchanged.
    pub fn trim(&self) -> Nfa {
        let accessible = self.accessible_states();
        let coaccessible = self.coaccessible_states();
        let keep: Vec<usize> = accessible.intersection(&coaccessible).copied().collect();
        let mut new_index = vec![usize::MAX; self.n_states];
        for (i, &old) in keep.iter().enumerate() {
            new_index[old] = i;
        }
        let mut out = Nfa::new(self.alphabet.clone(), keep.len());
        for (i, &old) in keep.iter().enumerate() {
            for rank in 0..self.alphabet.len() {
                for &t in self.transitions(old, rank) {
                    if new_index[t] != usize::MAX {
                        out.add_transition(i, rank, new_index[t]);
                    }
                }
            }
            if self.starts.contains(&old) {
                out.mark_start(i);
            }
            if self.accepting.contains(&old) {
                out.mark_accepting(i);
            }
            if let Some(l) = self.label(old) {
                out.set_label(i, l.to_string());
            }
        }
        out
    }

    /// Returns the automaton with a self-transition on every symbol added to
    /// each start state; nothing else changes. Turns "accepts the pattern
    /// instances" into "accepts strings with a suffix instance".
    pub fn add_start_self_loops(&self) -> Nfa {
        let mut out = self.clone();
        for &q in &self.starts {
            for rank in 0..self.alphabet.len() {
                out.delta[q * self.alphabet.len() + rank].insert(q);
            }
        }
        out
    }

    /// Set-of-states simulation of the extended transition function: true iff
    /// some run from a start state ends in an accepting state.
    pub fn accepts(&self, s: &str) -> Result<bool> {
        let mut active: BTreeSet<usize> = self.starts.clone();
        for (i, c) in s.chars().enumerate() {
            let rank = self.alphabet.rank(c).ok_or(Error::ForeignSymbol {
                position: i + 1,
                symbol: c,
            })?;
            let mut next = BTreeSet::new();
            for &q in &active {
                next.extend(self.transitions(q, rank).iter().copied());
            }
            active = next;
            if active.is_empty() {
                break;
            }
        }
        Ok(active.iter().any(|q| self.accepting.contains(q)))
    }
}
