//! The four subcommands. All user-facing output goes through here; the
//! building blocks live in `motif`, `format`, and `dot`.

use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};

use motifdfa::{
    determinize, is_simple, minimize, stream_search, CompiledMotif, FastaError, FastaReader,
    ForeignSymbolPolicy, Nfa,
};

use crate::motif::{self, MotifSpec};
use crate::{dot, format, CliError};

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    fs::write(path, content).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn cmd_compile(
    spec: &MotifSpec,
    out_nfa: Option<&Path>,
    out_dfa: Option<&Path>,
    out_dot: Option<&Path>,
) -> Result<(), CliError> {
    let compiled = motif::compile(spec)?;
    if let Some(path) = out_nfa {
        write_file(path, &format::write_nfa(&compiled.nfa))?;
    }
    if let Some(path) = out_dfa {
        write_file(path, &format::write_dfa(&compiled.det.dfa))?;
    }
    if let Some(path) = out_dot {
        write_file(
            path,
            &dot::nfa_dot(&compiled.nfa, compiled.mismatch.as_ref()),
        )?;
    }
    println!("motif: {}", compiled.description);
    println!("nfa_states: {}", compiled.nfa.n_states());
    println!("nfa_transitions: {}", compiled.nfa.transition_count());
    println!("dfa_states: {}", compiled.det.dfa.n_states());
    Ok(())
}

/// Where stats/export-dot get their automaton: compile a motif spec or load
/// a hand-written NFA table.
pub enum AutomatonSource {
    Spec(MotifSpec),
    NfaFile(PathBuf),
}

fn load_nfa(source: &AutomatonSource) -> Result<Nfa, CliError> {
    match source {
        AutomatonSource::Spec(spec) => Ok(motif::build(spec)?.nfa),
        AutomatonSource::NfaFile(path) => format::read_nfa(&read_file(path)?),
    }
}

pub fn cmd_stats(source: &AutomatonSource) -> Result<(), CliError> {
    let nfa = load_nfa(source)?;
    let dfa = determinize(&nfa).dfa;
    let oracle = minimize(&dfa);
    println!("nfa_states: {}", nfa.n_states());
    println!("nfa_transitions: {}", nfa.transition_count());
    println!("dfa_states: {}", dfa.n_states());
    println!("minimized_dfa_states: {}", oracle.n_states());
    println!("is_simple: {}", is_simple(&nfa));
    println!("dfa_is_minimal: {}", dfa.n_states() == oracle.n_states());
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Nfa,
    Dfa,
}

pub fn cmd_export_dot(
    source: &AutomatonSource,
    which: Which,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let rendered = match source {
        AutomatonSource::Spec(spec) => {
            let compiled = motif::compile(spec)?;
            match which {
                Which::Nfa => dot::nfa_dot(&compiled.nfa, compiled.mismatch.as_ref()),
                Which::Dfa => dot::dfa_dot(&compiled.det.dfa),
            }
        }
        AutomatonSource::NfaFile(path) => {
            let nfa = format::read_nfa(&read_file(path)?)?;
            match which {
                Which::Nfa => dot::nfa_dot(&nfa, None),
                Which::Dfa => dot::dfa_dot(&determinize(&nfa).dfa),
            }
        }
    };
    match out {
        Some(path) => write_file(path, &rendered),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

/// Where search gets its automaton. A loaded DFA table carries no record of
/// how it was built, so the caller must supply the motif length and is
/// trusted that the table came from a suffix-loop compile.
pub enum SearchSource {
    Spec(MotifSpec),
    DfaFile {
        path: PathBuf,
        motif_length: usize,
        case_fold: bool,
    },
}

pub fn cmd_search(
    source: &SearchSource,
    input: Option<&Path>,
    fasta: bool,
    strict_symbols: bool,
) -> Result<(), CliError> {
    let motif = match source {
        SearchSource::Spec(spec) => {
            if !spec.suffix_loop {
                return Err(CliError::Usage(
                    "search needs --suffix-loop: without self-loops on the start states \
                     the automaton accepts whole-input matches only, not occurrences \
                     inside a text"
                        .into(),
                ));
            }
            let compiled = motif::compile(spec)?;
            CompiledMotif {
                dfa: compiled.det.dfa,
                motif_length: compiled.motif_length,
                description: compiled.description,
                case_fold: compiled.case_fold,
            }
        }
        SearchSource::DfaFile {
            path,
            motif_length,
            case_fold,
        } => CompiledMotif {
            dfa: format::read_dfa(&read_file(path)?)?,
            motif_length: *motif_length,
            description: path.display().to_string(),
            case_fold: *case_fold,
        },
    };
    let policy = if strict_symbols {
        ForeignSymbolPolicy::Strict
    } else {
        ForeignSymbolPolicy::Reset
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if fasta {
        for record in FastaReader::new(open_input(input)?) {
            let record = record.map_err(|e| match e {
                FastaError::Io(io_err) => CliError::Io(io_err.to_string()),
                other => CliError::Usage(other.to_string()),
            })?;
            scan(
                &motif,
                record.sequence.chars(),
                &record.id,
                policy,
                &mut out,
            )?;
        }
    } else {
        let (text, id) = match input {
            Some(path) => (read_file(path)?, path.display().to_string()),
            None => (read_stdin()?, "stdin".to_string()),
        };
        // newlines never reach the automaton and do not count as positions
        let chars = text.chars().filter(|c| *c != '\n' && *c != '\r');
        scan(&motif, chars, &id, policy, &mut out)?;
    }
    Ok(())
}

fn scan<I: Iterator<Item = char>>(
    motif: &CompiledMotif,
    chars: I,
    sequence_id: &str,
    policy: ForeignSymbolPolicy,
    out: &mut impl Write,
) -> Result<(), CliError> {
    for occurrence in stream_search(motif, chars, sequence_id, policy) {
        let occurrence = occurrence.map_err(|e| CliError::Usage(e.to_string()))?;
        writeln!(
            out,
            "{}\t{}\t{}",
            occurrence.sequence_id,
            occurrence.start_pos(),
            occurrence.end_pos
        )
        .map_err(|e| CliError::Io(e.to_string()))?;
    }
    Ok(())
}

fn open_input(path: Option<&Path>) -> Result<Box<dyn BufRead>, CliError> {
    match path {
        Some(p) => File::open(p)
            .map(|f| Box::new(BufReader::new(f)) as Box<dyn BufRead>)
            .map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => Ok(Box::new(BufReader::new(io::stdin()))),
    }
}

fn read_stdin() -> Result<String, CliError> {
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| CliError::Io(e.to_string()))?;
    Ok(text)
}
