//! Hamming-neighborhood NFAs: a grid automaton recognizing every string
//! within a bounded number of positionwise mismatches of a generalized
//! consensus string.

use crate::error::{Error, Result};
use crate::genstring::GeneralizedString;
use crate::nfa::Nfa;

/// Number of positions of `s` whose character falls outside the
/// corresponding position set of `g`.
pub fn hamming_distance(s: &str, g: &GeneralizedString) -> Result<usize> {
    let mut distance = 0;
    let mut count = 0;
    for (i, c) in s.chars().enumerate() {
        let rank = g.alphabet().rank(c).ok_or(Error::ForeignSymbol {
            position: i + 1,
            symbol: c,
        })?;
        count += 1;
        if count > g.len() {
            continue;
        }
        if !g.position(count).contains(rank) {
            distance += 1;
        }
    }
    if count != g.len() {
        return Err(Error::LengthMismatch {
            expected: g.len(),
            found: count,
        });
    }
    Ok(distance)
}

/// A grid state `(e, k)`: `k` characters consumed, and the remaining
/// `|g| − k` characters must contain exactly `e` further mismatches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GridState {
    pub errors_left: usize,
    pub consumed: usize,
}

/// Output of the grid construction; `grid[i]` is the coordinate of NFA
/// state `i` (needed by DOT export to tell mismatch edges apart).
#[derive(Debug, Clone)]
pub struct HammingBuild {
    pub nfa: Nfa,
    pub grid: Vec<GridState>,
}

/// Builds the grid NFA for `g` and error budget `d_max`. States are all
/// `(e, k)` with `0 ≤ k ≤ |g|` and `e ≤ min(d_max, |g| − k)`, numbered by
/// ascending `(k, e)`. From `(e, k)` a character in `g[k+1]` leads to
/// `(e, k+1)` and any other character to `(e−1, k+1)`, each dropped when it
/// falls off the grid. Starts are the `k = 0` column; the sole accepting
/// state is `(0, |g|)`.
///
/// `d_max` is not clamped: budgets beyond `|g|` are unusable by the state
/// condition, so `d_max > |g|` builds the same automaton as `d_max = |g|`.
pub fn nfa_from_hamming(g: &GeneralizedString, d_max: usize) -> HammingBuild {
    let l = g.len();
    let mut grid: Vec<GridState> = Vec::new();
    let mut column_start = vec![0; l + 2];
    for k in 0..=l {
        for e in 0..=d_max.min(l - k) {
            grid.push(GridState {
                errors_left: e,
                consumed: k,
            });
        }
        column_start[k + 1] = grid.len();
    }
    let index = |e: usize, k: usize| -> Option<usize> {
        (k <= l && e <= d_max.min(l - k)).then(|| column_start[k] + e)
    };

    let mut nfa = Nfa::new(g.alphabet().clone(), grid.len());
    for (
        i,
        &GridState {
            errors_left: e,
            consumed: k,
        },
    ) in grid.iter().enumerate()
    {
        nfa.set_label(i, format!("({e},{k})"));
        if k == 0 {
            nfa.mark_start(i);
        }
        if k == l && e == 0 {
            nfa.mark_accepting(i);
        }
        if k == l {
            continue;
        }
        for rank in 0..g.alphabet().len() {
            let target = if g.position(k + 1).contains(rank) {
                index(e, k + 1)
            } else if e > 0 {
                index(e - 1, k + 1)
            } else {
                None // z(−1, k+1) = ∅
            };
            if let Some(t) = target {
                nfa.add_transition(i, rank, t);
            }
        }
    }
    HammingBuild { nfa, grid }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::genstring::{parse_generalized_string, ParseMode};
    use std::collections::BTreeSet;

    fn abcd() -> Alphabet {
        Alphabet::new("ABCD".chars()).unwrap()
    }

    fn adc() -> GeneralizedString {
        parse_generalized_string("ADC", &abcd(), ParseMode::Literal).unwrap()
    }

    #[test]
    fn distance_counts_positions_outside_the_sets() {
        assert_eq!(hamming_distance("ADC", &adc()).unwrap(), 0);
        assert_eq!(hamming_distance("BDC", &adc()).unwrap(), 1);
        assert_eq!(hamming_distance("BBB", &adc()).unwrap(), 3);
        let g = parse_generalized_string("A[AB][BC]", &abcd(), ParseMode::Literal).unwrap();
        assert_eq!(hamming_distance("ABA", &g).unwrap(), 1);
        assert_eq!(
            hamming_distance("AD", &adc()).unwrap_err(),
            Error::LengthMismatch {
                expected: 3,
                found: 2
            }
        );
        assert_eq!(
            hamming_distance("AXC", &adc()).unwrap_err(),
            Error::ForeignSymbol {
                position: 2,
                symbol: 'X'
            }
        );
    }

    #[test]
    fn grid_for_adc_with_budget_two() {
        let build = nfa_from_hamming(&adc(), 2);
        assert_eq!(build.nfa.n_states(), 9);
        // column sizes by k: 3, 3, 2, 1
        let sizes: Vec<usize> = (0..=3)
            .map(|k| build.grid.iter().filter(|s| s.consumed == k).count())
            .collect();
        assert_eq!(sizes, vec![3, 3, 2, 1]);
        assert_eq!(build.nfa.starts().len(), 3);
        assert_eq!(build.nfa.accepting().len(), 1);
        assert!(crate::simple::is_simple(&build.nfa));

        // whole-automaton language = distance ≤ 2 neighborhood of ADC
        for s in ["ADC", "BDC", "BBC", "BBB", "AAA", "ADD"] {
            let expect = hamming_distance(s, &adc()).unwrap() <= 2;
            assert_eq!(build.nfa.accepts(s).unwrap(), expect, "string {s}");
        }
        assert!(!build.nfa.accepts("AD").unwrap());
    }

    #[test]
    fn state_count_follows_the_column_formula() {
        for (pattern, d_max) in [("ADC", 1), ("ADC", 2), ("A[AB]", 3), ("DCBA", 0)] {
            let g = parse_generalized_string(pattern, &abcd(), ParseMode::Literal).unwrap();
            let build = nfa_from_hamming(&g, d_max);
            let expected: usize = (0..=g.len()).map(|k| d_max.min(g.len() - k) + 1).sum();
            assert_eq!(build.nfa.n_states(), expected, "{pattern} d_max={d_max}");
        }
    }

    #[test]
    fn zero_budget_is_the_plain_chain() {
        let build = nfa_from_hamming(&adc(), 0);
        let chain = crate::genstring::nfa_from_genstring(&adc());
        assert_eq!(build.nfa.n_states(), chain.n_states());
        assert_eq!(build.nfa.starts(), chain.starts());
        assert_eq!(build.nfa.accepting(), chain.accepting());
        for q in 0..chain.n_states() {
            for rank in 0..4 {
                assert_eq!(build.nfa.transitions(q, rank), chain.transitions(q, rank));
            }
        }
    }

    #[test]
    fn oversized_budget_matches_the_saturated_one() {
        let saturated = nfa_from_hamming(&adc(), 3);
        let oversized = nfa_from_hamming(&adc(), 9);
        assert_eq!(oversized.grid, saturated.grid);
        assert_eq!(oversized.nfa, saturated.nfa);
        // start column has |g|+1 states
        assert_eq!(oversized.nfa.starts().len(), 4);
    }

    #[test]
    fn state_languages_have_exact_error_counts() {
        // state (1,1) of the budget-2 grid: strings of length 2 at distance
        // exactly 1 from {D}{C}.
        let build = nfa_from_hamming(&adc(), 2);
        let i = build
            .grid
            .iter()
            .position(|s| {
                *s == GridState {
                    errors_left: 1,
                    consumed: 1,
                }
            })
            .unwrap();
        let lang = build.nfa.enumerate_language_from(i, 3).unwrap();
        let expected: BTreeSet<String> = ["DA", "DB", "DD", "AC", "BC", "CC"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(lang, expected);
    }

    #[test]
    fn one_error_neighborhood_of_ab() {
        let ab = Alphabet::new("AB".chars()).unwrap();
        let g = parse_generalized_string("AB", &ab, ParseMode::Literal).unwrap();
        let build = nfa_from_hamming(&g, 1);
        assert_eq!(
            build.nfa.enumerate_language(2).unwrap(),
            BTreeSet::from(["AB".to_string(), "BB".to_string(), "AA".to_string()])
        );
    }

    #[test]
    fn transitions_advance_one_column_and_avoid_the_start_column() {
        let build = nfa_from_hamming(&adc(), 2);
        for i in 0..build.nfa.n_states() {
            for rank in 0..4 {
                for &t in build.nfa.transitions(i, rank) {
                    assert_eq!(build.grid[t].consumed, build.grid[i].consumed + 1);
                }
            }
        }
    }
}
