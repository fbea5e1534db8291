//! Streaming text search with a compiled suffix-matching DFA, plus a FASTA
//! reader for sequence input.

use std::fmt;
use std::io::BufRead;

use crate::dfa::Dfa;
use crate::error::{Error, Result};

/// A DFA compiled from a self-looped construction, ready for scanning. All
/// match instances have length exactly `motif_length`, so start positions
/// are recoverable from end positions.
#[derive(Debug, Clone)]
pub struct CompiledMotif {
    pub dfa: Dfa,
    pub motif_length: usize,
    /// Human-readable origin, e.g. the pattern text.
    pub description: String,
    /// Fold input to upper case before rank lookup (IUPAC mode).
    pub case_fold: bool,
}

/// A reported match: `text[start_pos..=end_pos]` (1-based, inclusive) is an
/// instance of the motif.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Occurrence {
    pub sequence_id: String,
    pub end_pos: usize,
    pub length: usize,
}

impl Occurrence {
    pub fn start_pos(&self) -> usize {
        self.end_pos - self.length + 1
    }
}

/// What to do with characters outside the motif's alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForeignSymbolPolicy {
    /// Reset the scanner to the start state and continue: a match cannot
    /// span an unknown character, but matches on either side still count.
    Reset,
    /// Fail with an error identifying the character and its position.
    Strict,
}

/// Single-pass scanner: one DFA step per character, emitting an occurrence
/// whenever the state is accepting. Constant memory; input is consumed as
/// it is read.
pub struct StreamSearch<'a, I: Iterator<Item = char>> {
    motif: &'a CompiledMotif,
    chars: I,
    sequence_id: &'a str,
    policy: ForeignSymbolPolicy,
    state: usize,
    pos: usize,
    foreign_symbols: usize,
    failed: bool,
}

/// Scans `text` and yields occurrences in position order. The prefix ending
/// at position `p` is accepted exactly when a motif instance ends there
/// (suffix semantics of the self-looped construction).
pub fn stream_search<'a, I>(
    motif: &'a CompiledMotif,
    text: I,
    sequence_id: &'a str,
    policy: ForeignSymbolPolicy,
) -> StreamSearch<'a, I::IntoIter>
where
    I: IntoIterator<Item = char>,
{
    StreamSearch {
        motif,
        chars: text.into_iter(),
        sequence_id,
        policy,
        state: motif.dfa.start(),
        pos: 0,
        foreign_symbols: 0,
        failed: false,
    }
}

impl<I: Iterator<Item = char>> StreamSearch<'_, I> {
    /// Number of foreign characters skipped so far under the reset policy.
    pub fn foreign_symbols(&self) -> usize {
        self.foreign_symbols
    }
}

impl<I: Iterator<Item = char>> Iterator for StreamSearch<'_, I> {
    type Item = Result<Occurrence>;

    fn next(&mut self) -> Option<Result<Occurrence>> {
        if self.failed {
            return None;
        }
        for c in self.chars.by_ref() {
            self.pos += 1;
            let folded = if self.motif.case_fold {
                c.to_ascii_uppercase()
            } else {
                c
            };
            match self.motif.dfa.alphabet().rank(folded) {
                None => match self.policy {
                    ForeignSymbolPolicy::Strict => {
                        self.failed = true;
                        return Some(Err(Error::ForeignSymbol {
                            position: self.pos,
                            symbol: c,
                        }));
                    }
                    ForeignSymbolPolicy::Reset => {
                        self.foreign_symbols += 1;
                        self.state = self.motif.dfa.start();
                    }
                },
                Some(rank) => {
                    self.state = self.motif.dfa.next(self.state, rank);
                    if self.motif.dfa.is_accepting(self.state) {
                        return Some(Ok(Occurrence {
                            sequence_id: self.sequence_id.to_string(),
                            end_pos: self.pos,
                            length: self.motif.motif_length,
                        }));
                    }
                }
            }
        }
        None
    }
}

/// One FASTA record; `sequence` is the concatenation of its sequence lines
/// with newlines and surrounding blanks stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    pub id: String,
    pub sequence: String,
}

#[derive(Debug)]
pub enum FastaError {
    Io(std::io::Error),
    /// Non-blank content before the first `>` header.
    MissingHeader {
        line: usize,
    },
}

impl fmt::Display for FastaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FastaError::Io(e) => write!(f, "{e}"),
            FastaError::MissingHeader { line } => {
                write!(f, "line {line}: expected '>' header before sequence data")
            }
        }
    }
}

impl std::error::Error for FastaError {}

impl From<std::io::Error> for FastaError {
    fn from(e: std::io::Error) -> FastaError {
        FastaError::Io(e)
    }
}

/// Streaming FASTA reader: yields records in file order. The id is the
/// header token up to the first whitespace; a header with no sequence lines
/// yields an empty sequence.
pub struct FastaReader<R: BufRead> {
    lines: std::iter::Enumerate<std::io::Lines<R>>,
    pending_id: Option<String>,
    started: bool,
    done: bool,
}

impl<R: BufRead> FastaReader<R> {
    pub fn new(reader: R) -> FastaReader<R> {
        FastaReader {
            lines: reader.lines().enumerate(),
            pending_id: None,
            started: false,
            done: false,
        }
    }
}

fn header_id(line: &str) -> String {
    line[1..]
        .split_whitespace()
        .next()
        .unwrap_or("")
        .to_string()
}

impl<R: BufRead> Iterator for FastaReader<R> {
    type Item = std::result::Result<FastaRecord, FastaError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut id = self.pending_id.take();
        let mut sequence = String::new();
        for (index, line) in self.lines.by_ref() {
            let line = match line {
                Ok(l) => l,
                Err(e) => {
                    self.done = true;
                    return Some(Err(FastaError::Io(e)));
                }
            };
            let line = line.trim();
            if line.starts_with('>') {
                self.started = true;
                match id {
                    None => id = Some(header_id(line)),
                    Some(current) => {
                        self.pending_id = Some(header_id(line));
                        return Some(Ok(FastaRecord {
                            id: current,
                            sequence,
                        }));
                    }
                }
            } else if line.is_empty() {
                continue;
            } else if !self.started {
                self.done = true;
                return Some(Err(FastaError::MissingHeader { line: index + 1 }));
            } else {
                sequence.push_str(line);
            }
        }
        self.done = true;
        id.map(|id| Ok(FastaRecord { id, sequence }))
    }
}
