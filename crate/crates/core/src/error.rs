use std::fmt;

/// Errors produced by alphabet construction, pattern parsing, automaton
/// building and the string-processing operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Alphabet must contain at least one symbol.
    EmptyAlphabet,
    /// Alphabet symbols must be distinct.
    DuplicateSymbol(char),
    /// Alphabets are capped at 64 symbols so symbol sets fit in a machine word.
    AlphabetTooLarge(usize),
    /// A character outside the automaton's alphabet, with its 1-based position.
    ForeignSymbol { position: usize, symbol: char },
    /// Pattern syntax error at a 0-based character offset.
    Parse { offset: usize, message: String },
    /// String length does not match the generalized string length.
    LengthMismatch { expected: usize, found: usize },
    /// Operands use different alphabets.
    AlphabetMismatch,
    /// Automaton construction requires a pattern of length >= 1.
    EmptyPattern,
    /// A set construction needs at least one pattern.
    EmptyPatternSet,
    /// Pattern-set construction is capped (levels can hold up to 2^|G| states).
    PatternSetTooLarge { size: usize, max: usize },
    /// Patterns in a set must share one length.
    UnequalPatternLengths { expected: usize, found: usize },
    /// Language enumeration bound exceeded (max_len <= 12 and |Sigma|^max_len <= 2^24).
    EnumerationBound { max_len: usize, alphabet_len: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyAlphabet => write!(f, "alphabet is empty"),
            Error::DuplicateSymbol(c) => write!(f, "duplicate symbol '{c}' in alphabet"),
            Error::AlphabetTooLarge(n) => {
                write!(f, "alphabet has {n} symbols, at most 64 are supported")
            }
            Error::ForeignSymbol { position, symbol } => {
                write!(
                    f,
                    "symbol '{symbol}' at position {position} is not in the alphabet"
                )
            }
            Error::Parse { offset, message } => {
                write!(f, "pattern syntax error at offset {offset}: {message}")
            }
            Error::LengthMismatch { expected, found } => {
                write!(
                    f,
                    "string length {found} does not match pattern length {expected}"
                )
            }
            Error::AlphabetMismatch => write!(f, "operands use different alphabets"),
            Error::EmptyPattern => write!(f, "pattern must have length >= 1"),
            Error::EmptyPatternSet => write!(f, "pattern set is empty"),
            Error::PatternSetTooLarge { size, max } => {
                write!(
                    f,
                    "pattern set has {size} patterns, at most {max} are supported"
                )
            }
            Error::UnequalPatternLengths { expected, found } => {
                write!(f, "patterns of lengths {expected} and {found} in one set")
            }
            Error::EnumerationBound {
                max_len,
                alphabet_len,
            } => write!(
                f,
                "enumeration bound exceeded: max_len {max_len} over {alphabet_len} symbols \
                 (requires max_len <= 12 and |alphabet|^max_len <= 2^24)"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
