//! DFA minimization, language equivalence, and isomorphism — the independent
//! oracle against which the subset-construction outputs are judged.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::dfa::Dfa;
use crate::error::{Error, Result};

/// A partition of a DFA's states into equivalence blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatePartition {
    /// `block_of[state]` = block id.
    pub block_of: Vec<usize>,
    /// Block id → member states. Blocks partition `0..n_states`.
    pub blocks: Vec<BTreeSet<usize>>,
}

/// Coarsest congruence that separates accepting from non-accepting states
/// (Moore's partition refinement: split blocks by per-symbol successor
/// blocks until stable). Works on all states of the input, accessible or not.
pub fn state_equivalence(dfa: &Dfa) -> StatePartition {
    let n = dfa.n_states();
    let width = dfa.alphabet().len();

    let mut block_of: Vec<usize> = (0..n)
        .map(|q| if dfa.is_accepting(q) { 1 } else { 0 })
        .collect();
    // Degenerate inputs: everything accepting (or nothing) starts as one block.
    if dfa.accepting().len() == n {
        block_of.iter_mut().for_each(|b| *b = 0);
    }

    loop {
        let mut signature_to_block: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut next: Vec<usize> = Vec::with_capacity(n);
        for q in 0..n {
            let sig = (
                block_of[q],
                (0..width)
                    .map(|r| block_of[dfa.next(q, r)])
                    .collect::<Vec<_>>(),
            );
            let id = signature_to_block.len();
            next.push(*signature_to_block.entry(sig).or_insert(id));
        }
        let stable = signature_to_block.len() == block_of.iter().collect::<BTreeSet<_>>().len();
        block_of = next;
        if stable {
            break;
        }
    }

    let n_blocks = block_of.iter().copied().max().map_or(0, |m| m + 1);
    let mut blocks = vec![BTreeSet::new(); n_blocks];
    for (q, &b) in block_of.iter().enumerate() {
        blocks[b].insert(q);
    }
    StatePartition { block_of, blocks }
}

/// States reachable from the start, in breadth-first discovery order with
/// symbols taken in rank order.
fn accessible_in_bfs_order(dfa: &Dfa) -> Vec<usize> {
    let mut order = vec![dfa.start()];
    let mut seen = BTreeSet::from([dfa.start()]);
    let mut head = 0;
    while head < order.len() {
        let q = order[head];
        head += 1;
        for rank in 0..dfa.alphabet().len() {
            let t = dfa.next(q, rank);
            if seen.insert(t) {
                order.push(t);
            }
        }
    }
    order
}

/// The unique (up to isomorphism) minimal total DFA for the same language:
/// restrict to accessible states, refine to the coarsest congruence, then
/// quotient. Output states are numbered in BFS order from the start.
pub fn minimize(dfa: &Dfa) -> Dfa {
    // Restrict first so the refinement never keeps a state alive on account
    // of an unreachable twin.
    let order = accessible_in_bfs_order(dfa);
    let mut new_index = vec![usize::MAX; dfa.n_states()];
    for (i, &old) in order.iter().enumerate() {
        new_index[old] = i;
    }
    let mut restricted = Dfa::new(dfa.alphabet().clone(), order.len(), 0);
    for (i, &old) in order.iter().enumerate() {
        for rank in 0..dfa.alphabet().len() {
            restricted.set_transition(i, rank, new_index[dfa.next(old, rank)]);
        }
        if dfa.is_accepting(old) {
            restricted.mark_accepting(i);
        }
    }

    let partition = state_equivalence(&restricted);

    // Quotient automaton on blocks, renumbered by BFS from the start block.
    let start_block = partition.block_of[restricted.start()];
    let width = restricted.alphabet().len();
    let block_step = |b: usize, rank: usize| {
        let q = *partition.blocks[b].iter().next().unwrap();
        partition.block_of[restricted.next(q, rank)]
    };
    let mut order = vec![start_block];
    let mut seen = BTreeSet::from([start_block]);
    let mut head = 0;
    while head < order.len() {
        let b = order[head];
        head += 1;
        for rank in 0..width {
            let t = block_step(b, rank);
            if seen.insert(t) {
                order.push(t);
            }
        }
    }
    let mut block_index = vec![usize::MAX; partition.blocks.len()];
    for (i, &b) in order.iter().enumerate() {
        block_index[b] = i;
    }
    let mut out = Dfa::new(restricted.alphabet().clone(), order.len(), 0);
    for (i, &b) in order.iter().enumerate() {
        for rank in 0..width {
            out.set_transition(i, rank, block_index[block_step(b, rank)]);
        }
        if partition.blocks[b]
            .iter()
            .any(|&q| restricted.is_accepting(q))
        {
            out.mark_accepting(i);
        }
    }
    out
}

/// True iff every state is accessible and no two states are equivalent, i.e.
/// the coarsest congruence is discrete.
pub fn is_minimal(dfa: &Dfa) -> bool {
    accessible_in_bfs_order(dfa).len() == dfa.n_states()
        && state_equivalence(dfa).blocks.len() == dfa.n_states()
}

/// Outcome of a language-equivalence check between two DFAs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    /// A shortest string accepted by exactly one of the two automata
    /// (ties broken by symbol rank).
    Distinguished(String),
}

/// Union-find with path halving over `0..n`.
struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Language equivalence by synchronized traversal merging state pairs; on
/// failure a separate product search reports the shortest distinguishing
/// string.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<Equivalence> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let width = a.alphabet().len();
    let offset = a.n_states(); // b's states live at offset..offset+n_b
    let mut uf = UnionFind::new(a.n_states() + b.n_states());
    let mut pending = vec![(a.start(), b.start())];
    uf.union(a.start(), offset + b.start());
    while let Some((p, q)) = pending.pop() {
        if a.is_accepting(p) != b.is_accepting(q) {
            return Ok(Equivalence::Distinguished(distinguishing_string(a, b)));
        }
        for rank in 0..width {
            let (p2, q2) = (a.next(p, rank), b.next(q, rank));
            if uf.union(p2, offset + q2) {
                pending.push((p2, q2));
            }
        }
    }
    Ok(Equivalence::Equivalent)
}

/// Shortest string on which `a` and `b` disagree: breadth-first search over
/// state pairs with symbols in rank order.
fn distinguishing_string(a: &Dfa, b: &Dfa) -> String {
    let nb = b.n_states();
    let pair_id = |p: usize, q: usize| p * nb + q;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; a.n_states() * nb];
    let mut seen = vec![false; a.n_states() * nb];
    let start = pair_id(a.start(), b.start());
    seen[start] = true;
    let mut queue = VecDeque::from([(a.start(), b.start())]);
    while let Some((p, q)) = queue.pop_front() {
        if a.is_accepting(p) != b.is_accepting(q) {
            let mut ranks = Vec::new();
            let mut at = pair_id(p, q);
            while let Some((prev, rank)) = parent[at] {
                ranks.push(rank);
                at = prev;
            }
            return ranks
                .iter()
                .rev()
                .map(|&r| a.alphabet().symbol(r))
                .collect();
        }
        for rank in 0..a.alphabet().len() {
            let (p2, q2) = (a.next(p, rank), b.next(q, rank));
            if !seen[pair_id(p2, q2)] {
                seen[pair_id(p2, q2)] = true;
                parent[pair_id(p2, q2)] = Some((pair_id(p, q), rank));
                queue.push_back((p2, q2));
            }
        }
    }
    unreachable!("caller established that the automata disagree somewhere");
}

/// True iff a state bijection preserves start, acceptance, and transitions.
/// Decided by parallel breadth-first traversal demanding a consistent
/// pairing; inputs should be accessible for a meaningful result, since
/// unreachable states can never be paired.
pub fn isomorphic(a: &Dfa, b: &Dfa) -> Result<bool> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if a.n_states() != b.n_states() {
        return Ok(false);
    }
    let n = a.n_states();
    let mut a_to_b = vec![usize::MAX; n];
    let mut b_to_a = vec![usize::MAX; n];
    a_to_b[a.start()] = b.start();
    b_to_a[b.start()] = a.start();
    let mut queue = VecDeque::from([(a.start(), b.start())]);
    let mut paired = 1;
    while let Some((p, q)) = queue.pop_front() {
        if a.is_accepting(p) != b.is_accepting(q) {
            return Ok(false);
        }
        for rank in 0..a.alphabet().len() {
            let (p2, q2) = (a.next(p, rank), b.next(q, rank));
            match (a_to_b[p2], b_to_a[q2]) {
                (usize::MAX, usize::MAX) => {
                    a_to_b[p2] = q2;
                    b_to_a[q2] = p2;
                    paired += 1;
                    queue.push_back((p2, q2));
                }
                (mapped, _) if mapped != q2 => return Ok(false),
                (_, mapped) if mapped != p2 => return Ok(false),
                _ => {}
            }
        }
    }
    Ok(paired == n)
}
