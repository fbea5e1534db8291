//! Ordered alphabets and machine-word symbol sets.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported alphabet; keeps a symbol set representable as one `u64`.
pub const MAX_ALPHABET: usize = 64;

/// An ordered set of distinct symbols with a symbol <-> rank bijection.
///
/// Ranks run 0..len and define the canonical symbol order used everywhere:
/// transition tables, serialization, DOT output and witness construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
    rank: HashMap<char, usize>,
}

impl Alphabet {
    /// Builds an alphabet from symbols in the given order.
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Alphabet> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > MAX_ALPHABET {
            return Err(Error::AlphabetTooLarge(symbols.len()));
        }
        let mut rank = HashMap::with_capacity(symbols.len());
        for (i, &c) in symbols.iter().enumerate() {
            if rank.insert(c, i).is_some() {
                return Err(Error::DuplicateSymbol(c));
            }
        }
        Ok(Alphabet { symbols, rank })
    }

    /// The DNA alphabet ACGT, used by IUPAC mode.
    pub fn dna() -> Alphabet {
        Alphabet::new("ACGT".chars()).expect("ACGT is a valid alphabet")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Rank of a symbol, or `None` for foreign symbols.
    pub fn rank(&self, symbol: char) -> Option<usize> {
        self.rank.get(&symbol).copied()
    }

    /// Symbol at a rank. Panics on out-of-range ranks.
    pub fn symbol(&self, rank: usize) -> char {
        self.symbols[rank]
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    /// Set containing every symbol of the alphabet.
    pub fn full_set(&self) -> SymbolSet {
        SymbolSet::full(self.len())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A set of symbol ranks packed into one machine word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SymbolSet(u64);

impl SymbolSet {
    pub const EMPTY: SymbolSet = SymbolSet(0);

    pub fn full(alphabet_len: usize) -> SymbolSet {
        debug_assert!(alphabet_len <= MAX_ALPHABET);
        if alphabet_len == MAX_ALPHABET {
            SymbolSet(u64::MAX)
        } else {
            SymbolSet((1u64 << alphabet_len) - 1)
        }
    }

    pub fn from_ranks<I: IntoIterator<Item = usize>>(ranks: I) -> SymbolSet {
        let mut s = SymbolSet::EMPTY;
        for r in ranks {
            s.insert(r);
        }
        s
    }

    pub fn insert(&mut self, rank: usize) {
        debug_assert!(rank < MAX_ALPHABET);
        self.0 |= 1u64 << rank;
    }

    pub fn contains(&self, rank: usize) -> bool {
        rank < MAX_ALPHABET && self.0 & (1u64 << rank) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Set of the alphabet's symbols not in `self`.
    pub fn complement(&self, alphabet_len: usize) -> SymbolSet {
        SymbolSet(!self.0 & SymbolSet::full(alphabet_len).0)
    }

    pub fn union(self, other: SymbolSet) -> SymbolSet {
        SymbolSet(self.0 | other.0)
    }

    /// Ranks in ascending order.
    pub fn ranks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_ALPHABET).filter(move |&r| self.contains(r))
    }

    /// Renders as the symbols of `alphabet`, in rank order.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        self.ranks().map(|r| alphabet.symbol(r)).collect()
    }
}
