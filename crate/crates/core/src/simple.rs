//! Simplicity checking: an NFA is simple when every state is accessible and
//! the state languages are non-empty and pairwise disjoint. Determinizing a
//! simple NFA yields a minimal DFA, which is what the constructions here bank
//! on.

use std::collections::VecDeque;

use crate::nfa::Nfa;

/// Outcome of the pairwise state-language disjointness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Disjointness {
    Disjoint,
    /// `shared` is a shortest string in 𝓛(p) ∩ 𝓛(q); `(p, q)` is the
    /// lexicographically least such pair.
    Overlap {
        p: usize,
        q: usize,
        shared: String,
    },
}

/// Decides whether all state languages are pairwise disjoint, via
/// reachability in the product graph on ordered state pairs: `(a, b)` steps
/// to `(a', b')` on σ when both components can. 𝓛(p) ∩ 𝓛(q) ≠ ∅ exactly
/// when `(p, q)` reaches a pair of accepting states.
///
/// The input must be trim; a non-trim automaton is a caller bug.
pub fn languages_disjointness_report(nfa: &Nfa) -> Disjointness {
    let n = nfa.n_states();
    assert!(
        nfa.accessible_states().len() == n && nfa.coaccessible_states().len() == n,
        "disjointness check requires a trim automaton"
    );

    // Backward reachability from F×F over the product graph.
    let mut shares = vec![false; n * n];
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for &f1 in nfa.accepting() {
        for &f2 in nfa.accepting() {
            shares[f1 * n + f2] = true;
            queue.push_back((f1, f2));
        }
    }
    // Predecessor lists per (state, rank), computed once.
    let width = nfa.alphabet().len();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n * width];
    for from in 0..n {
        for rank in 0..width {
            for &to in nfa.transitions(from, rank) {
                preds[to * width + rank].push(from);
            }
        }
    }
    while let Some((a2, b2)) = queue.pop_front() {
        for rank in 0..width {
            for &a in &preds[a2 * width + rank] {
                for &b in &preds[b2 * width + rank] {
                    if !shares[a * n + b] {
                        shares[a * n + b] = true;
                        queue.push_back((a, b));
                    }
                }
            }
        }
    }

    for p in 0..n {
        for q in 0..n {
            if p != q && shares[p * n + q] {
                return Disjointness::Overlap {
                    p,
                    q,
                    shared: shared_string(nfa, p, q),
                };
            }
        }
    }
    Disjointness::Disjoint
}

/// Shortest string accepted from both `p` and `q`: breadth-first search in
/// the product graph with symbols in rank order, reconstructed via parents.
fn shared_string(nfa: &Nfa, p: usize, q: usize) -> String {
    let n = nfa.n_states();
    let width = nfa.alphabet().len();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n * n]; // (pair, rank)
    let mut seen = vec![false; n * n];
    let start = p * n + q;
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(pair) = queue.pop_front() {
        let (a, b) = (pair / n, pair % n);
        if nfa.is_accepting(a) && nfa.is_accepting(b) {
            let mut ranks = Vec::new();
            let mut at = pair;
            while let Some((prev, rank)) = parent[at] {
                ranks.push(rank);
                at = prev;
            }
            return ranks
                .iter()
                .rev()
                .map(|&r| nfa.alphabet().symbol(r))
                .collect();
        }
        for rank in 0..width {
            for &a2 in nfa.transitions(a, rank) {
                for &b2 in nfa.transitions(b, rank) {
                    let next = a2 * n + b2;
                    if !seen[next] {
                        seen[next] = true;
                        parent[next] = Some((pair, rank));
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    unreachable!("caller established that (p,q) reaches an accepting pair");
}

/// Which of the three simplicity conditions failed, if any. Conditions are
/// checked in definition order, so a non-trim automaton is reported as such
/// rather than fed to the disjointness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplicityReport {
    Simple,
    InaccessibleState(usize),
    EmptyStateLanguage(usize),
    OverlappingStateLanguages { p: usize, q: usize, shared: String },
}

pub fn simplicity_report(nfa: &Nfa) -> SimplicityReport {
    let accessible = nfa.accessible_states();
    if let Some(q) = (0..nfa.n_states()).find(|q| !accessible.contains(q)) {
        return SimplicityReport::InaccessibleState(q);
    }
    let coaccessible = nfa.coaccessible_states();
    if let Some(q) = (0..nfa.n_states()).find(|q| !coaccessible.contains(q)) {
        return SimplicityReport::EmptyStateLanguage(q);
    }
    match languages_disjointness_report(nfa) {
        Disjointness::Disjoint => SimplicityReport::Simple,
        Disjointness::Overlap { p, q, shared } => {
            SimplicityReport::OverlappingStateLanguages { p, q, shared }
        }
    }
}

pub fn is_simple(nfa: &Nfa) -> bool {
    simplicity_report(nfa) == SimplicityReport::Simple
}
