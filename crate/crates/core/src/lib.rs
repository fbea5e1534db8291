//! Motif matching via provably minimal DFAs.
//!
//! Three motif classes — generalized strings, sets of equal-length
//! generalized strings, and Hamming neighborhoods of a consensus string —
//! compile into NFAs whose state languages are pairwise disjoint ("simple"
//! NFAs). Determinizing a simple NFA by plain subset construction yields the
//! minimal DFA directly, with no minimization pass; [`minimize`] exists as
//! an independent oracle so that claim stays checkable.
//!
//! The usual pipeline:
//!
//! ```
//! use motifdfa::{
//!     determinize, nfa_from_genstring, parse_generalized_string, Alphabet, ParseMode,
//! };
//!
//! let alphabet = Alphabet::new("ABC".chars()).unwrap();
//! let g = parse_generalized_string("A[AB]B[AC]", &alphabet, ParseMode::Literal).unwrap();
//! let nfa = nfa_from_genstring(&g).add_start_self_loops();
//! let dfa = determinize(&nfa).dfa;
//! assert!(dfa.accepts("CCABBA").unwrap());
//! assert!(motifdfa::is_minimal(&dfa));
//! ```

mod alphabet;
mod determinize;
mod dfa;
mod enumerate;
mod error;
mod genstring;
mod hamming;
mod minimize;
mod nfa;
mod search;
mod simple;

pub use alphabet::{Alphabet, SymbolSet, MAX_ALPHABET};
pub use determinize::{determinize, Determinization};
pub use dfa::Dfa;
pub use error::{Error, Result};
pub use genstring::{
    nfa_from_genstring, nfa_from_genstring_set, parent, parse_generalized_string, parse_motif_set,
    GeneralizedString, GenstringSetBuild, LevelState, ParentResult, ParseMode, MAX_PATTERN_SET,
};
pub use hamming::{hamming_distance, nfa_from_hamming, GridState, HammingBuild};
pub use minimize::{
    equivalent, is_minimal, isomorphic, minimize, state_equivalence, Equivalence, StatePartition,
};
pub use nfa::Nfa;
pub use search::{
    stream_search, CompiledMotif, FastaError, FastaReader, FastaRecord, ForeignSymbolPolicy,
    Occurrence, StreamSearch,
};
pub use simple::{
    is_simple, languages_disjointness_report, simplicity_report, Disjointness, SimplicityReport,
};
