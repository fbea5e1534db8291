//! Graphviz rendering. Start states get an incoming arrow from a point
//! node, accepting states are double circles, and parallel transitions
//! collapse into one edge per (from, to) pair labeled with its symbols.
//! Node and edge order is fixed by state index, so output is stable.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use motifdfa::{Dfa, Nfa};

use crate::motif::MismatchEdges;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

fn node_line(out: &mut String, index: usize, label: Option<&str>, accepting: bool) {
    let mut attrs = Vec::new();
    if let Some(l) = label {
        attrs.push(format!("label=\"{}\"", escape(l)));
    }
    if accepting {
        attrs.push("shape=doublecircle".to_string());
    }
    if attrs.is_empty() {
        let _ = writeln!(out, "  {index};");
    } else {
        let _ = writeln!(out, "  {index} [{}];", attrs.join(", "));
    }
}

pub fn nfa_dot(nfa: &Nfa, mismatch: Option<&MismatchEdges>) -> String {
    let mut out = String::from("digraph nfa {\n  rankdir=LR;\n  node [shape=circle];\n");
    for q in 0..nfa.n_states() {
        node_line(&mut out, q, nfa.label(q), nfa.is_accepting(q));
    }
    for (i, s) in nfa.starts().iter().enumerate() {
        let _ = writeln!(out, "  start{i} [shape=point];");
        let _ = writeln!(out, "  start{i} -> {s};");
    }
    for q in 0..nfa.n_states() {
        let mut by_target: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for rank in 0..nfa.alphabet().len() {
            for &t in nfa.transitions(q, rank) {
                by_target.entry(t).or_default().push(rank);
            }
        }
        for (t, ranks) in by_target {
            let label = mismatch
                .and_then(|m| m.label_override(nfa.alphabet(), q, t))
                .unwrap_or_else(|| {
                    ranks
                        .iter()
                        .map(|&r| nfa.alphabet().symbol(r).to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                });
            let _ = writeln!(out, "  {q} -> {t} [label=\"{}\"];", escape(&label));
        }
    }
    out.push_str("}\n");
    out
}

pub fn dfa_dot(dfa: &Dfa) -> String {
    let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n");
    for q in 0..dfa.n_states() {
        node_line(&mut out, q, dfa.label(q), dfa.is_accepting(q));
    }
    let _ = writeln!(out, "  start [shape=point];");
    let _ = writeln!(out, "  start -> {};", dfa.start());
    for q in 0..dfa.n_states() {
        let mut by_target: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for rank in 0..dfa.alphabet().len() {
            by_target.entry(dfa.next(q, rank)).or_default().push(rank);
        }
        for (t, ranks) in by_target {
            let label = ranks
                .iter()
                .map(|&r| dfa.alphabet().symbol(r).to_string())
                .collect::<Vec<_>>()
                .join(",");
            let _ = writeln!(out, "  {q} -> {t} [label=\"{label}\"];");
        }
    }
    out.push_str("}\n");
    out
}
