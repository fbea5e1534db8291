//! Turning motif flags into automata: pattern parsing, builder selection,
//! optional start-state self-loops, determinization.

use std::fs;
use std::path::PathBuf;

use motifdfa::{
    determinize, nfa_from_genstring, nfa_from_genstring_set, nfa_from_hamming,
    parse_generalized_string, parse_motif_set, Alphabet, Determinization, GridState, Nfa,
    ParseMode, SymbolSet,
};

use crate::CliError;

/// Everything the motif-selection flags can express. Exactly one of
/// `pattern` / `patterns_file` must be set; `hamming` wraps a single
/// pattern in an error budget.
#[derive(Debug, Clone)]
pub struct MotifSpec {
    pub pattern: Option<String>,
    pub patterns_file: Option<PathBuf>,
    pub alphabet: Option<String>,
    pub mode: ParseMode,
    pub hamming: Option<usize>,
    pub suffix_loop: bool,
}

/// Grid bookkeeping kept for DOT rendering: an edge that drops one unit of
/// error budget carries exactly the complement of the consensus position it
/// crosses, so it is labeled `not:<position symbols>` instead of the
/// (longer) complement list.
#[derive(Debug, Clone)]
pub struct MismatchEdges {
    grid: Vec<GridState>,
    positions: Vec<SymbolSet>,
}

impl MismatchEdges {
    pub fn label_override(&self, alphabet: &Alphabet, from: usize, to: usize) -> Option<String> {
        let a = self.grid.get(from)?;
        let b = self.grid.get(to)?;
        if from != to && a.errors_left == b.errors_left + 1 && b.consumed == a.consumed + 1 {
            let symbols: Vec<String> = self.positions[a.consumed]
                .ranks()
                .map(|r| alphabet.symbol(r).to_string())
                .collect();
            Some(format!("not:{}", symbols.join(",")))
        } else {
            None
        }
    }
}

/// A built NFA plus what the other commands need to know about it. The
/// self-loops from `suffix_loop` are already applied; they keep state
/// indices intact, so `mismatch` stays valid.
pub struct Built {
    pub nfa: Nfa,
    pub motif_length: usize,
    pub description: String,
    pub mismatch: Option<MismatchEdges>,
}

/// A built and determinized motif.
pub struct Compiled {
    pub nfa: Nfa,
    pub det: Determinization,
    pub motif_length: usize,
    pub description: String,
    pub case_fold: bool,
    pub mismatch: Option<MismatchEdges>,
}

fn resolve_alphabet(spec: &MotifSpec) -> Result<Alphabet, CliError> {
    match spec.mode {
        ParseMode::IupacDna => {
            if spec.alphabet.is_some() {
                return Err(CliError::Usage(
                    "--alphabet conflicts with --mode iupac-dna (alphabet is fixed to ACGT)".into(),
                ));
            }
            Ok(Alphabet::dna())
        }
        ParseMode::Literal => match &spec.alphabet {
            Some(s) => Ok(Alphabet::new(s.chars())?),
            None => Err(CliError::Usage(
                "--alphabet is required in literal mode".into(),
            )),
        },
    }
}

pub fn build(spec: &MotifSpec) -> Result<Built, CliError> {
    let alphabet = resolve_alphabet(spec)?;
    let mut built = match (&spec.pattern, &spec.patterns_file) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "choose one of --pattern or --patterns-file".into(),
            ))
        }
        (None, None) => {
            return Err(CliError::Usage(
                "one of --pattern or --patterns-file is required".into(),
            ))
        }
        (Some(p), None) => {
            let g = parse_generalized_string(p, &alphabet, spec.mode)?;
            match spec.hamming {
                None => Built {
                    nfa: nfa_from_genstring(&g),
                    motif_length: g.len(),
                    description: format!("genstring {}", g.display()),
                    mismatch: None,
                },
                Some(d_max) => {
                    let build = nfa_from_hamming(&g, d_max);
                    Built {
                        nfa: build.nfa,
                        motif_length: g.len(),
                        description: format!("hamming({d_max}) {}", g.display()),
                        mismatch: Some(MismatchEdges {
                            grid: build.grid,
                            positions: g.positions().to_vec(),
                        }),
                    }
                }
            }
        }
        (None, Some(path)) => {
            if spec.hamming.is_some() {
                return Err(CliError::Usage(
                    "--hamming takes a single consensus via --pattern, not --patterns-file".into(),
                ));
            }
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let set = parse_motif_set(&text, &alphabet, spec.mode)?;
            let build = nfa_from_genstring_set(&set)?;
            Built {
                nfa: build.nfa,
                motif_length: set[0].len(),
                description: format!("genstring-set {} ({} patterns)", path.display(), set.len()),
                mismatch: None,
            }
        }
    };
    if spec.suffix_loop {
        built.nfa = built.nfa.add_start_self_loops();
    }
    Ok(built)
}

pub fn compile(spec: &MotifSpec) -> Result<Compiled, CliError> {
    let built = build(spec)?;
    let det = determinize(&built.nfa);
    Ok(Compiled {
        nfa: built.nfa,
        det,
        motif_length: built.motif_length,
        description: built.description,
        case_fold: spec.mode == ParseMode::IupacDna,
        mismatch: built.mismatch,
    })
}
