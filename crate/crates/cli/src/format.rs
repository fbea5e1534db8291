//! Plain-text automaton tables, one row per state:
//!
//! ```text
//! DFA v1                 NFA v1
//! alphabet:ABC           alphabet:ABC
//! states:3               states:3
//! start:0                starts:0 1
//! accepting:2            accepting:2
//! 1 0 0                  1,2 - 0
//! ...                    ...
//! ```
//!
//! Rows hold |Σ| whitespace-separated entries in rank order — a single
//! target index for a DFA, a comma-separated index list or `-` for an NFA.
//! UTF-8 with LF line endings; re-serializing a parsed table reproduces the
//! original bytes. State labels are presentation-only and not stored.

use std::fmt::Write as _;

use motifdfa::{Alphabet, Dfa, Nfa};

use crate::CliError;

fn join_indices<'a>(indices: impl Iterator<Item = &'a usize>) -> String {
    indices.map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_dfa(dfa: &Dfa) -> String {
    let mut out = String::from("DFA v1\n");
    let _ = writeln!(
        out,
        "alphabet:{}",
        dfa.alphabet().symbols().iter().collect::<String>()
    );
    let _ = writeln!(out, "states:{}", dfa.n_states());
    let _ = writeln!(out, "start:{}", dfa.start());
    let _ = writeln!(out, "accepting:{}", join_indices(dfa.accepting().iter()));
    for q in 0..dfa.n_states() {
        let row: Vec<String> = (0..dfa.alphabet().len())
            .map(|r| dfa.next(q, r).to_string())
            .collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn write_nfa(nfa: &Nfa) -> String {
    let mut out = String::from("NFA v1\n");
    let _ = writeln!(
        out,
        "alphabet:{}",
        nfa.alphabet().symbols().iter().collect::<String>()
    );
    let _ = writeln!(out, "states:{}", nfa.n_states());
    let _ = writeln!(out, "starts:{}", join_indices(nfa.starts().iter()));
    let _ = writeln!(out, "accepting:{}", join_indices(nfa.accepting().iter()));
    for q in 0..nfa.n_states() {
        let row: Vec<String> = (0..nfa.alphabet().len())
            .map(|r| {
                let targets = nfa.transitions(q, r);
                if targets.is_empty() {
                    "-".to_string()
                } else {
                    targets
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                }
            })
            .collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

struct Cursor<'a> {
    lines: std::str::Lines<'a>,
    line_no: usize,
}

fn bad(line_no: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("automaton table, line {line_no}: {msg}"))
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        Cursor {
            lines: text.lines(),
            line_no: 0,
        }
    }

    fn next_line(&mut self) -> Result<&'a str, CliError> {
        self.line_no += 1;
        self.lines
            .next()
            .ok_or_else(|| bad(self.line_no, "unexpected end of table"))
    }

    fn expect(&mut self, literal: &str) -> Result<(), CliError> {
        let line = self.next_line()?;
        if line == literal {
            Ok(())
        } else {
            Err(bad(
                self.line_no,
                format!("expected \"{literal}\", found \"{line}\""),
            ))
        }
    }

    fn field(&mut self, prefix: &str) -> Result<&'a str, CliError> {
        let line = self.next_line()?;
        line.strip_prefix(prefix)
            .ok_or_else(|| bad(self.line_no, format!("expected a \"{prefix}\" line")))
    }

    fn no_trailing_content(mut self) -> Result<(), CliError> {
        for line in self.lines.by_ref() {
            self.line_no += 1;
            if !line.trim().is_empty() {
                return Err(bad(self.line_no, "trailing content after transition rows"));
            }
        }
        Ok(())
    }
}

fn parse_count(text: &str, line_no: usize, what: &str) -> Result<usize, CliError> {
    text.parse()
        .map_err(|_| bad(line_no, format!("invalid {what} \"{text}\"")))
}

fn parse_state(text: &str, n: usize, line_no: usize) -> Result<usize, CliError> {
    let index: usize = parse_count(text, line_no, "state index")?;
    if index < n {
        Ok(index)
    } else {
        Err(bad(
            line_no,
            format!("state index {index} out of range ({n} states)"),
        ))
    }
}

fn parse_state_list(text: &str, n: usize, line_no: usize) -> Result<Vec<usize>, CliError> {
    text.split_whitespace()
        .map(|t| parse_state(t, n, line_no))
        .collect()
}

fn parse_header(cursor: &mut Cursor<'_>) -> Result<(Alphabet, usize), CliError> {
    let alphabet =
        Alphabet::new(cursor.field("alphabet:")?.chars()).map_err(|e| bad(cursor.line_no, e))?;
    let n = parse_count(cursor.field("states:")?, cursor.line_no, "state count")?;
    Ok((alphabet, n))
}

fn row_entries<'a>(cursor: &mut Cursor<'a>, width: usize) -> Result<Vec<&'a str>, CliError> {
    let entries: Vec<&str> = cursor.next_line()?.split_whitespace().collect();
    if entries.len() == width {
        Ok(entries)
    } else {
        Err(bad(
            cursor.line_no,
            format!("expected {width} entries, found {}", entries.len()),
        ))
    }
}

pub fn read_dfa(text: &str) -> Result<Dfa, CliError> {
    let mut cursor = Cursor::new(text);
    cursor.expect("DFA v1")?;
    let (alphabet, n) = parse_header(&mut cursor)?;
    let start = parse_state(cursor.field("start:")?, n, cursor.line_no)?;
    let accepting = parse_state_list(cursor.field("accepting:")?, n, cursor.line_no)?;
    let mut dfa = Dfa::new(alphabet, n, start);
    for f in accepting {
        dfa.mark_accepting(f);
    }
    for q in 0..n {
        let entries = row_entries(&mut cursor, dfa.alphabet().len())?;
        for (rank, entry) in entries.iter().enumerate() {
            dfa.set_transition(q, rank, parse_state(entry, n, cursor.line_no)?);
        }
    }
    cursor.no_trailing_content()?;
    Ok(dfa)
}

pub fn read_nfa(text: &str) -> Result<Nfa, CliError> {
    let mut cursor = Cursor::new(text);
    cursor.expect("NFA v1")?;
    let (alphabet, n) = parse_header(&mut cursor)?;
    let starts = parse_state_list(cursor.field("starts:")?, n, cursor.line_no)?;
    let accepting = parse_state_list(cursor.field("accepting:")?, n, cursor.line_no)?;
    let mut nfa = Nfa::new(alphabet, n);
    for s in starts {
        nfa.mark_start(s);
    }
    for f in accepting {
        nfa.mark_accepting(f);
    }
    for q in 0..n {
        let entries = row_entries(&mut cursor, nfa.alphabet().len())?;
        for (rank, entry) in entries.iter().enumerate() {
            if *entry == "-" {
                continue;
            }
            for target in entry.split(',') {
                nfa.add_transition(q, rank, parse_state(target, n, cursor.line_no)?);
            }
        }
    }
    cursor.no_trailing_content()?;
    Ok(nfa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use motifdfa::{determinize, nfa_from_genstring, parse_generalized_string, ParseMode};

    fn sample_nfa() -> Nfa {
        let alphabet = Alphabet::new("ABC".chars()).unwrap();
        let g = parse_generalized_string("A[AB]B[AC]", &alphabet, ParseMode::Literal).unwrap();
        nfa_from_genstring(&g).add_start_self_loops()
    }

    #[test]
    fn nfa_round_trip_is_byte_identical() {
        let nfa = sample_nfa();
        let text = write_nfa(&nfa);
        let back = read_nfa(&text).unwrap();
        assert_eq!(write_nfa(&back), text);
        assert_eq!(back.starts(), nfa.starts());
        assert_eq!(back.accepting(), nfa.accepting());
        assert_eq!(
            back.enumerate_language(5).unwrap(),
            nfa.enumerate_language(5).unwrap()
        );
    }

    #[test]
    fn dfa_round_trip_is_byte_identical() {
        let dfa = determinize(&sample_nfa()).dfa;
        let text = write_dfa(&dfa);
        let back = read_dfa(&text).unwrap();
        assert_eq!(write_dfa(&back), text);
        assert!(back.accepts("CCABBA").unwrap());
    }

    #[test]
    fn fixed_nfa_table_layout() {
        let alphabet = Alphabet::new("AB".chars()).unwrap();
        let mut nfa = Nfa::new(alphabet, 2);
        nfa.mark_start(0);
        nfa.mark_accepting(1);
        nfa.add_transition(0, 0, 0);
        nfa.add_transition(0, 0, 1);
        assert_eq!(
            write_nfa(&nfa),
            "NFA v1\nalphabet:AB\nstates:2\nstarts:0\naccepting:1\n0,1 -\n- -\n"
        );
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(read_dfa("NFA v1\n").is_err());
        assert!(read_dfa("DFA v1\nalphabet:AB\nstates:1\nstart:1\naccepting:\n0 0\n").is_err());
        assert!(read_nfa("NFA v1\nalphabet:AB\nstates:1\nstarts:0\naccepting:0\n-\n").is_err());
        assert!(
            read_nfa("NFA v1\nalphabet:AB\nstates:1\nstarts:0\naccepting:0\n- -\njunk\n").is_err()
        );
        assert!(read_dfa("DFA v1\nalphabet:AB\nstates:2\nstart:0\naccepting:1\n1 1\n").is_err());
    }
}
