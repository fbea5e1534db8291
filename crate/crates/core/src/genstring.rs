//! Generalized strings — strings over non-empty symbol subsets — their
//! parser, match relation, and the two NFA constructions: a chain for one
//! pattern and a levelwise automaton for a set of equal-length patterns.

use std::collections::{BTreeMap, BTreeSet};

use crate::alphabet::{Alphabet, SymbolSet};
use crate::error::{Error, Result};
use crate::nfa::Nfa;

/// How pattern text is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseMode {
    /// A bare symbol `c` denotes `{c}`; a bracket group `[c₁c₂…]` denotes
    /// the set of its symbols. Symbols must belong to the alphabet.
    Literal,
    /// DNA with IUPAC degeneracy codes: the alphabet is forced to
    /// `{A,C,G,T}`, input is case-folded to upper, and degenerate letters
    /// expand (`R`→`{A,G}`, …, `N`→`{A,C,G,T}`).
    IupacDna,
}

/// A non-empty sequence of non-empty symbol subsets of one alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedString {
    alphabet: Alphabet,
    positions: Vec<SymbolSet>,
}

impl GeneralizedString {
    /// Builds from explicit position sets, checking every set is non-empty
    /// and within the alphabet.
    pub fn new(alphabet: Alphabet, positions: Vec<SymbolSet>) -> Result<GeneralizedString> {
        if positions.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let full = alphabet.full_set();
        for set in &positions {
            if set.is_empty() {
                return Err(Error::EmptyPattern);
            }
            assert!(
                set.ranks().all(|r| full.contains(r)),
                "position set exceeds the alphabet"
            );
        }
        Ok(GeneralizedString {
            alphabet,
            positions,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Symbol set at 1-based position `i` (pattern positions are written
    /// `g[1]..g[ℓ]` throughout).
    pub fn position(&self, i: usize) -> SymbolSet {
        self.positions[i - 1]
    }

    pub fn positions(&self) -> &[SymbolSet] {
        &self.positions
    }

    /// True iff `|s| = |g|` and the i-th character of `s` lies in `g[i]`
    /// for every position.
    pub fn matches(&self, s: &str) -> Result<bool> {
        let mut count = 0;
        let mut ok = true;
        for (i, c) in s.chars().enumerate() {
            let rank = self.alphabet.rank(c).ok_or(Error::ForeignSymbol {
                position: i + 1,
                symbol: c,
            })?;
            count += 1;
            if count > self.positions.len() {
                ok = false;
                continue;
            }
            ok = ok && self.positions[count - 1].contains(rank);
        }
        Ok(ok && count == self.positions.len())
    }

    /// Render in the bracket syntax accepted by the parser.
    pub fn display(&self) -> String {
        let mut out = String::new();
        for set in &self.positions {
            if set.len() == 1 {
                out.push(self.alphabet.symbol(set.ranks().next().unwrap()));
            } else {
                out.push('[');
                for rank in set.ranks() {
                    out.push(self.alphabet.symbol(rank));
                }
                out.push(']');
            }
        }
        out
    }
}

/// IUPAC degeneracy codes over the DNA alphabet `ACGT`.
fn iupac_expand(c: char) -> Option<&'static str> {
    Some(match c {
        'A' => "A",
        'C' => "C",
        'G' => "G",
        'T' => "T",
        'R' => "AG",
        'Y' => "CT",
        'S' => "CG",
        'W' => "AT",
        'K' => "GT",
        'M' => "AC",
        'B' => "CGT",
        'D' => "AGT",
        'H' => "ACT",
        'V' => "ACG",
        'N' => "ACGT",
        _ => return None,
    })
}

/// Parses pattern text into a generalized string. Offsets in parse errors
/// are 0-based character positions into `text`.
pub fn parse_generalized_string(
    text: &str,
    alphabet: &Alphabet,
    mode: ParseMode,
) -> Result<GeneralizedString> {
    let alphabet = match mode {
        ParseMode::Literal => alphabet.clone(),
        ParseMode::IupacDna => Alphabet::dna(),
    };
    let symbol_set = |c: char, offset: usize| -> Result<SymbolSet> {
        match mode {
            ParseMode::Literal => {
                alphabet
                    .rank(c)
                    .map(|r| SymbolSet::from_ranks([r]))
                    .ok_or(Error::Parse {
                        offset,
                        message: format!("unknown symbol '{c}'"),
                    })
            }
            ParseMode::IupacDna => {
                let expansion = iupac_expand(c.to_ascii_uppercase()).ok_or(Error::Parse {
                    offset,
                    message: format!("unknown IUPAC code '{c}'"),
                })?;
                Ok(SymbolSet::from_ranks(
                    expansion.chars().map(|x| alphabet.rank(x).unwrap()),
                ))
            }
        }
    };

    let mut positions: Vec<SymbolSet> = Vec::new();
    let mut group: Option<(usize, SymbolSet, BTreeSet<char>)> = None; // (open offset, union, literal members)
    for (offset, c) in text.chars().enumerate() {
        match (c, &mut group) {
            ('[', None) => group = Some((offset, SymbolSet::EMPTY, BTreeSet::new())),
            ('[', Some(_)) => {
                return Err(Error::Parse {
                    offset,
                    message: "nested '[' in group".to_string(),
                })
            }
            (']', None) => {
                return Err(Error::Parse {
                    offset,
                    message: "']' without '['".to_string(),
                })
            }
            (']', Some((open, set, _))) => {
                if set.is_empty() {
                    return Err(Error::Parse {
                        offset: *open,
                        message: "empty bracket group".to_string(),
                    });
                }
                positions.push(*set);
                group = None;
            }
            (c, Some((_, set, members))) => {
                let folded = match mode {
                    ParseMode::Literal => c,
                    ParseMode::IupacDna => c.to_ascii_uppercase(),
                };
                if !members.insert(folded) {
                    return Err(Error::Parse {
                        offset,
                        message: format!("duplicate symbol '{c}' in group"),
                    });
                }
                *set = set.union(symbol_set(c, offset)?);
            }
            (c, None) => positions.push(symbol_set(c, offset)?),
        }
    }
    if let Some((open, _, _)) = group {
        return Err(Error::Parse {
            offset: open,
            message: "unclosed '['".to_string(),
        });
    }
    GeneralizedString::new(alphabet, positions)
}

/// Parses a motif-set file: one pattern per line, blank lines and lines
/// starting with `#` ignored; all patterns must share one length.
pub fn parse_motif_set(
    text: &str,
    alphabet: &Alphabet,
    mode: ParseMode,
) -> Result<Vec<GeneralizedString>> {
    let mut out: Vec<GeneralizedString> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_generalized_string(line, alphabet, mode)?;
        if let Some(first) = out.first() {
            if g.len() != first.len() {
                return Err(Error::UnequalPatternLengths {
                    expected: first.len(),
                    found: g.len(),
                });
            }
        }
        out.push(g);
    }
    if out.is_empty() {
        return Err(Error::EmptyPatternSet);
    }
    Ok(out)
}

/// Chain NFA for one generalized string: states `0..=ℓ`, a transition
/// `q → q+1` on each symbol of `g[q+1]`, start `{0}`, accepting `{ℓ}`.
/// Instances of `g` are exactly the accepted strings.
pub fn nfa_from_genstring(g: &GeneralizedString) -> Nfa {
    let l = g.len();
    let mut nfa = Nfa::new(g.alphabet().clone(), l + 1);
    for q in 0..l {
        for rank in g.position(q + 1).ranks() {
            nfa.add_transition(q, rank, q + 1);
        }
    }
    nfa.mark_start(0);
    nfa.mark_accepting(l);
    for q in 0..=l {
        nfa.set_label(q, q.to_string());
    }
    nfa
}

/// A state of the levelwise set construction: the patterns in `subset` all
/// match the `level` characters read so far against their first `level`
/// positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LevelState {
    pub subset: BTreeSet<usize>,
    pub level: usize,
}

impl LevelState {
    fn label(&self) -> String {
        let ids: Vec<String> = self.subset.iter().map(|i| i.to_string()).collect();
        format!("{{{}}}@{}", ids.join(","), self.level)
    }
}

/// Result of the parent mapping on a level state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParentResult {
    /// Level-0 states have no parents.
    Bottom,
    /// No pattern in the subset admits the symbol at this level.
    Empty,
    Parent(LevelState),
}

/// The parent of `q = (H, k)` under `σ`: the level-`(k−1)` state whose
/// patterns are those `h ∈ H` with `σ ∈ h[k]`. Symbols outside the alphabet
/// admit no pattern and yield `Empty`.
pub fn parent(q: &LevelState, symbol: char, set: &[GeneralizedString]) -> ParentResult {
    if q.level == 0 {
        return ParentResult::Bottom;
    }
    let subset: BTreeSet<usize> = q
        .subset
        .iter()
        .copied()
        .filter(|&h| {
            set[h]
                .alphabet()
                .rank(symbol)
                .is_some_and(|r| set[h].position(q.level).contains(r))
        })
        .collect();
    if subset.is_empty() {
        ParentResult::Empty
    } else {
        ParentResult::Parent(LevelState {
            subset,
            level: q.level - 1,
        })
    }
}

/// Output of the levelwise set construction, with the measurements the
/// complexity assertions need.
#[derive(Debug, Clone)]
pub struct GenstringSetBuild {
    pub nfa: Nfa,
    /// `level_sizes[k]` = number of states at level `k`, for `k = 0..=ℓ`.
    pub level_sizes: Vec<usize>,
    /// Number of (node, symbol) iterations the generation loop executed.
    pub inner_iterations: usize,
}

/// Guard: levels can hold up to `2^|G|` states.
pub const MAX_PATTERN_SET: usize = 20;

/// Levelwise NFA for a set of equal-length generalized strings. Level ℓ is
/// the single accepting state `(G, ℓ)`; walking levels downward, each state
/// `(H, k+1)` contributes its parent under every symbol to level `k` and a
/// transition back up. Level-0 states are the starts. Self-loops are NOT
/// added here; compose with `add_start_self_loops` for suffix matching.
///
/// Exact duplicates in `set` are removed first; pattern indices in labels
/// refer to the deduplicated list in input order.
pub fn nfa_from_genstring_set(set: &[GeneralizedString]) -> Result<GenstringSetBuild> {
    let mut patterns: Vec<GeneralizedString> = Vec::new();
    for g in set {
        if !patterns.contains(g) {
            patterns.push(g.clone());
        }
    }
    let first = patterns.first().ok_or(Error::EmptyPatternSet)?;
    let alphabet = first.alphabet().clone();
    let l = first.len();
    for g in &patterns[1..] {
        if g.alphabet() != &alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if g.len() != l {
            return Err(Error::UnequalPatternLengths {
                expected: l,
                found: g.len(),
            });
        }
    }
    if patterns.len() > MAX_PATTERN_SET {
        return Err(Error::PatternSetTooLarge {
            size: patterns.len(),
            max: MAX_PATTERN_SET,
        });
    }

    // levels[k] maps the pattern subset to its eventual per-level slot,
    // in subset order.
    let full: BTreeSet<usize> = (0..patterns.len()).collect();
    let mut levels: Vec<BTreeSet<BTreeSet<usize>>> = vec![BTreeSet::new(); l + 1];
    levels[l].insert(full.clone());
    // (from-subset, from-level, rank, to-subset) edges, resolved to indices
    // once all levels are final.
    let mut edges: Vec<(BTreeSet<usize>, usize, usize, BTreeSet<usize>)> = Vec::new();
    let mut inner_iterations = 0;

    for k in (0..l).rev() {
        let children: Vec<BTreeSet<usize>> = levels[k + 1].iter().cloned().collect();
        for child in children {
            let state = LevelState {
                subset: child.clone(),
                level: k + 1,
            };
            for rank in 0..alphabet.len() {
                inner_iterations += 1;
                match parent(&state, alphabet.symbol(rank), &patterns) {
                    ParentResult::Parent(p) => {
                        levels[k].insert(p.subset.clone());
                        edges.push((p.subset, k, rank, child.clone()));
                    }
                    ParentResult::Empty => {}
                    ParentResult::Bottom => unreachable!("level is k+1 ≥ 1"),
                }
            }
        }
    }

    // Number states level 0 upward, subsets in ascending order inside a level.
    let mut index: BTreeMap<(usize, BTreeSet<usize>), usize> = BTreeMap::new();
    let mut n = 0;
    for (k, level) in levels.iter().enumerate() {
        for subset in level {
            index.insert((k, subset.clone()), n);
            n += 1;
        }
    }
    let mut nfa = Nfa::new(alphabet, n);
    for (subset, k, rank, child) in edges {
        let from = index[&(k, subset)];
        let to = index[&(k + 1, child)];
        nfa.add_transition(from, rank, to);
    }
    for ((k, subset), &i) in &index {
        nfa.set_label(
            i,
            LevelState {
                subset: subset.clone(),
                level: *k,
            }
            .label(),
        );
        if *k == 0 {
            nfa.mark_start(i);
        }
        if *k == l {
            nfa.mark_accepting(i);
        }
    }
    Ok(GenstringSetBuild {
        nfa,
        level_sizes: levels.iter().map(|lv| lv.len()).collect(),
        inner_iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::new("ABC".chars()).unwrap()
    }

    fn abba() -> GeneralizedString {
        parse_generalized_string("A[AB]B[AC]", &abc(), ParseMode::Literal).unwrap()
    }

    #[test]
    fn literal_parse_of_bracket_groups() {
        let g = abba();
        assert_eq!(g.len(), 4);
        assert_eq!(g.position(1).display(&abc()), "A");
        assert_eq!(g.position(2).display(&abc()), "AB");
        assert_eq!(g.position(3).display(&abc()), "B");
        assert_eq!(g.position(4).display(&abc()), "AC");
        assert_eq!(g.display(), "A[AB]B[AC]");
    }

    #[test]
    fn literal_parse_of_plain_string() {
        let abcd = Alphabet::new("ABCD".chars()).unwrap();
        let g = parse_generalized_string("ADC", &abcd, ParseMode::Literal).unwrap();
        assert_eq!(g.len(), 3);
        assert!(g.matches("ADC").unwrap());
        assert!(!g.matches("ABC").unwrap());
    }

    #[test]
    fn iupac_codes_expand_over_dna() {
        let g = parse_generalized_string("ANR", &abc(), ParseMode::IupacDna).unwrap();
        assert_eq!(g.alphabet(), &Alphabet::dna());
        assert_eq!(g.position(1).display(g.alphabet()), "A");
        assert_eq!(g.position(2).display(g.alphabet()), "ACGT");
        assert_eq!(g.position(3).display(g.alphabet()), "AG");
        // case-folding
        let lower = parse_generalized_string("anr", &abc(), ParseMode::IupacDna).unwrap();
        assert_eq!(lower, g);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let err = |text: &str| parse_generalized_string(text, &abc(), ParseMode::Literal);
        assert_eq!(
            err("A[]B").unwrap_err(),
            Error::Parse {
                offset: 1,
                message: "empty bracket group".to_string()
            }
        );
        assert!(matches!(
            err("AXB").unwrap_err(),
            Error::Parse { offset: 1, .. }
        ));
        assert!(matches!(
            err("A[BC").unwrap_err(),
            Error::Parse { offset: 1, .. }
        ));
        assert!(matches!(
            err("AB]").unwrap_err(),
            Error::Parse { offset: 2, .. }
        ));
        assert!(matches!(
            err("[A[B]]").unwrap_err(),
            Error::Parse { offset: 2, .. }
        ));
        assert!(matches!(
            err("A[BB]").unwrap_err(),
            Error::Parse { offset: 3, .. }
        ));
        assert_eq!(err("").unwrap_err(), Error::EmptyPattern);
    }

    #[test]
    fn match_relation_requires_equal_length_and_membership() {
        let g = abba();
        assert!(g.matches("ABBA").unwrap());
        assert!(g.matches("ABBC").unwrap());
        assert!(!g.matches("ABB").unwrap());
        assert!(!g.matches("ABBB").unwrap());
        assert!(!g.matches("ABBAA").unwrap());
        assert_eq!(
            g.matches("AXBA").unwrap_err(),
            Error::ForeignSymbol {
                position: 2,
                symbol: 'X'
            }
        );
    }

    #[test]
    fn chain_nfa_shape() {
        let nfa = nfa_from_genstring(&abba());
        assert_eq!(nfa.n_states(), 5);
        assert_eq!(nfa.transition_count(), 6); // 1+2+1+2
        assert_eq!(nfa.starts(), &BTreeSet::from([0]));
        assert_eq!(nfa.accepting(), &BTreeSet::from([4]));
        assert!(nfa.accepts("ABBA").unwrap());
        assert!(!nfa.accepts("AB").unwrap());
        assert!(crate::simple::is_simple(&nfa));

        let tiny = parse_generalized_string(
            "A",
            &Alphabet::new("AB".chars()).unwrap(),
            ParseMode::Literal,
        )
        .unwrap();
        let nfa = nfa_from_genstring(&tiny);
        assert_eq!(nfa.n_states(), 2);
        assert_eq!(nfa.transition_count(), 1);
    }

    #[test]
    fn looped_chain_accepts_suffix_instances() {
        let nfa = nfa_from_genstring(&abba()).add_start_self_loops();
        assert!(nfa.accepts("CCABBA").unwrap());
        assert!(!nfa.accepts("ABBAC").unwrap());
    }

    /// The three patterns used throughout the levelwise examples.
    fn trio() -> Vec<GeneralizedString> {
        ["[BC][AC][AB]", "AB[ABC]", "C[BC][AC]"]
            .iter()
            .map(|t| parse_generalized_string(t, &abc(), ParseMode::Literal).unwrap())
            .collect()
    }

    #[test]
    fn parent_mapping_on_the_trio() {
        let set = trio();
        let q = LevelState {
            subset: BTreeSet::from([0, 1, 2]),
            level: 3,
        };
        assert_eq!(
            parent(&q, 'B', &set),
            ParentResult::Parent(LevelState {
                subset: BTreeSet::from([0, 1]),
                level: 2
            })
        );
        let q0 = LevelState {
            subset: BTreeSet::from([0]),
            level: 0,
        };
        assert_eq!(parent(&q0, 'A', &set), ParentResult::Bottom);
        let q12 = LevelState {
            subset: BTreeSet::from([1, 2]),
            level: 2,
        };
        assert_eq!(parent(&q12, 'A', &set), ParentResult::Empty);
    }

    #[test]
    fn levelwise_build_of_the_trio() {
        let build = nfa_from_genstring_set(&trio()).unwrap();
        assert_eq!(build.level_sizes, vec![4, 5, 3, 1]);
        assert_eq!(build.nfa.n_states(), 13);
        assert_eq!(build.nfa.accepting().len(), 1);
        assert_eq!(build.nfa.starts().len(), 4);
        assert!(crate::simple::is_simple(&build.nfa));
        // acceptance matches the union of the three pattern languages
        for s in ["BAA", "ABA", "CBA", "CCC"] {
            let direct = trio().iter().any(|g| g.matches(s).unwrap());
            assert_eq!(build.nfa.accepts(s).unwrap(), direct, "string {s}");
        }
    }

    #[test]
    fn singleton_set_collapses_to_the_chain() {
        let set = vec![abba()];
        let build = nfa_from_genstring_set(&set).unwrap();
        let chain = nfa_from_genstring(&abba());
        assert_eq!(build.nfa.n_states(), chain.n_states());
        assert_eq!(build.nfa.starts(), chain.starts());
        assert_eq!(build.nfa.accepting(), chain.accepting());
        for q in 0..chain.n_states() {
            for rank in 0..3 {
                assert_eq!(build.nfa.transitions(q, rank), chain.transitions(q, rank));
            }
        }
    }

    #[test]
    fn set_builder_rejects_bad_input() {
        assert_eq!(
            nfa_from_genstring_set(&[]).unwrap_err(),
            Error::EmptyPatternSet
        );
        let a = parse_generalized_string("AB", &abc(), ParseMode::Literal).unwrap();
        let b = parse_generalized_string("ABC", &abc(), ParseMode::Literal).unwrap();
        assert_eq!(
            nfa_from_genstring_set(&[a.clone(), b]).unwrap_err(),
            Error::UnequalPatternLengths {
                expected: 2,
                found: 3
            }
        );
        let other = parse_generalized_string(
            "AB",
            &Alphabet::new("AB".chars()).unwrap(),
            ParseMode::Literal,
        )
        .unwrap();
        assert_eq!(
            nfa_from_genstring_set(&[a.clone(), other]).unwrap_err(),
            Error::AlphabetMismatch
        );
        // duplicates are removed, not rejected
        let build = nfa_from_genstring_set(&[a.clone(), a.clone()]).unwrap();
        assert_eq!(build.nfa.n_states(), nfa_from_genstring(&a).n_states());
    }

    #[test]
    fn motif_set_file_skips_blanks_and_comments() {
        let text = "# patterns\n\nA[AB]\nCB\n";
        let set = parse_motif_set(text, &abc(), ParseMode::Literal).unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(
            parse_motif_set("A\nBC\n", &abc(), ParseMode::Literal).unwrap_err(),
            Error::UnequalPatternLengths {
                expected: 1,
                found: 2
            }
        );
        assert_eq!(
            parse_motif_set("# only comments\n", &abc(), ParseMode::Literal).unwrap_err(),
            Error::EmptyPatternSet
        );
    }
}
