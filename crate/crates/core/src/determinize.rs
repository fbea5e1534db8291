//! Classical subset construction, restricted to accessible subsets.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::dfa::Dfa;
use crate::nfa::Nfa;

/// Result of determinization: the DFA plus, for each DFA state, the set of
/// NFA states it stands for. The dead state, if present, is the empty set.
#[derive(Debug, Clone)]
pub struct Determinization {
    pub dfa: Dfa,
    pub subsets: Vec<BTreeSet<usize>>,
}

/// Subset construction over accessible subsets only. The start subset is the
/// NFA's start-state set and becomes DFA state 0; subsequently discovered
/// subsets are numbered in breadth-first order with symbols taken in rank
/// order, so the result is identical across runs. If some subset has no
/// successor on a symbol, the empty subset is materialized as an ordinary
/// dead state with self-loops on every symbol.
pub fn determinize(nfa: &Nfa) -> Determinization {
    let alphabet = nfa.alphabet().clone();
    let width = alphabet.len();

    let start_subset: BTreeSet<usize> = nfa.starts().clone();
    let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    let mut subsets: Vec<BTreeSet<usize>> = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();

    index.insert(start_subset.clone(), 0);
    subsets.push(start_subset);
    queue.push_back(0);

    while let Some(i) = queue.pop_front() {
        let mut row = Vec::with_capacity(width);
        for rank in 0..width {
            let mut next: BTreeSet<usize> = BTreeSet::new();
            for &q in &subsets[i] {
                next.extend(nfa.transitions(q, rank).iter().copied());
            }
            let j = *index.entry(next.clone()).or_insert_with(|| {
                let j = subsets.len();
                subsets.push(next);
                queue.push_back(j);
                j
            });
            row.push(j);
        }
        rows.push(row);
    }

    let mut dfa = Dfa::new(alphabet, subsets.len(), 0);
    for (i, row) in rows.iter().enumerate() {
        for (rank, &j) in row.iter().enumerate() {
            dfa.set_transition(i, rank, j);
        }
    }
    for (i, subset) in subsets.iter().enumerate() {
        if subset.iter().any(|q| nfa.is_accepting(*q)) {
            dfa.mark_accepting(i);
        }
        dfa.set_label(i, subset_label(subset, nfa));
    }
    Determinization { dfa, subsets }
}

/// Human-readable name for a subset: the member states' own labels when the
/// NFA carries them, otherwise the state indices.
fn subset_label(subset: &BTreeSet<usize>, nfa: &Nfa) -> String {
    let parts: Vec<String> = subset
        .iter()
        .map(|&q| match nfa.label(q) {
            Some(l) if !l.is_empty() => l.to_string(),
            _ => q.to_string(),
        })
        .collect();
    format!("{{{}}}", parts.join(","))
}
