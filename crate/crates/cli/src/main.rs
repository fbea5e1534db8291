use std::path::PathBuf;
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};
use motifdfa::ParseMode;
use motifdfa_cli::commands::{self, AutomatonSource, SearchSource, Which};
use motifdfa_cli::motif::MotifSpec;
use motifdfa_cli::CliError;

#[derive(Parser)]
#[command(
    name = "motifdfa",
    version,
    about = "Compile sequence motifs into minimal DFAs and search texts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Pattern symbols are taken verbatim from the declared alphabet
    Literal,
    /// Patterns use IUPAC nucleotide codes; alphabet is fixed to ACGT
    IupacDna,
}

impl From<ModeArg> for ParseMode {
    fn from(mode: ModeArg) -> ParseMode {
        match mode {
            ModeArg::Literal => ParseMode::Literal,
            ModeArg::IupacDna => ParseMode::IupacDna,
        }
    }
}

#[derive(Args)]
struct MotifArgs {
    /// Single pattern, e.g. "A[AB]B[AC]"
    #[arg(long, conflicts_with = "patterns_file")]
    pattern: Option<String>,
    /// File with one pattern per line, all the same length ('#' comments allowed)
    #[arg(long, value_name = "PATH")]
    patterns_file: Option<PathBuf>,
    /// Alphabet symbols in rank order, e.g. "ABC" (literal mode only)
    #[arg(long, value_name = "SYMBOLS")]
    alphabet: Option<String>,
    /// Pattern syntax
    #[arg(long, value_enum, default_value_t = ModeArg::Literal)]
    mode: ModeArg,
    /// Match everything within this Hamming distance of the pattern
    #[arg(long, value_name = "D_MAX")]
    hamming: Option<usize>,
    /// Self-loop the start states so matches are found at any position
    #[arg(long)]
    suffix_loop: bool,
}

impl MotifArgs {
    fn into_spec(self) -> MotifSpec {
        MotifSpec {
            pattern: self.pattern,
            patterns_file: self.patterns_file,
            alphabet: self.alphabet,
            mode: self.mode.into(),
            hamming: self.hamming,
            suffix_loop: self.suffix_loop,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichArg {
    Nfa,
    Dfa,
}

#[derive(Subcommand)]
enum Command {
    /// Build the automata for a motif and write table/DOT files
    Compile {
        #[command(flatten)]
        motif: MotifArgs,
        /// Write the NFA table here
        #[arg(long, value_name = "PATH")]
        out_nfa: Option<PathBuf>,
        /// Write the DFA table here
        #[arg(long, value_name = "PATH")]
        out_dfa: Option<PathBuf>,
        /// Write the NFA's DOT rendering here
        #[arg(long, value_name = "PATH")]
        out_dot: Option<PathBuf>,
    },
    /// Report automaton sizes and verify the DFA is already minimal
    Stats {
        #[command(flatten)]
        motif: MotifArgs,
        /// Read an NFA table instead of compiling a motif
        #[arg(
            long,
            value_name = "PATH",
            conflicts_with_all = ["pattern", "patterns_file", "alphabet", "mode", "hamming", "suffix_loop"]
        )]
        nfa_in: Option<PathBuf>,
    },
    /// Scan text or FASTA input and print occurrences as TSV
    Search {
        #[command(flatten)]
        motif: MotifArgs,
        /// Load a DFA table (from a --suffix-loop compile) instead of compiling
        #[arg(
            long,
            value_name = "PATH",
            requires = "motif_length",
            conflicts_with_all = ["pattern", "patterns_file", "alphabet", "hamming", "suffix_loop"]
        )]
        dfa_in: Option<PathBuf>,
        /// Motif instance length for --dfa-in (matches are this long)
        #[arg(long, value_name = "L", requires = "dfa_in")]
        motif_length: Option<usize>,
        /// Input file; stdin when omitted
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
        /// Treat input as FASTA records instead of plain text
        #[arg(long)]
        fasta: bool,
        /// Fail on characters outside the alphabet instead of resetting
        #[arg(long)]
        strict_symbols: bool,
    },
    /// Emit a Graphviz rendering of the automaton
    ExportDot {
        #[command(flatten)]
        motif: MotifArgs,
        /// Read an NFA table instead of compiling a motif
        #[arg(
            long,
            value_name = "PATH",
            conflicts_with_all = ["pattern", "patterns_file", "alphabet", "mode", "hamming", "suffix_loop"]
        )]
        nfa_in: Option<PathBuf>,
        /// Which automaton to render
        #[arg(long, value_enum, default_value_t = WhichArg::Nfa)]
        which: WhichArg,
        /// Output path; stdout when omitted
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compile {
            motif,
            out_nfa,
            out_dfa,
            out_dot,
        } => commands::cmd_compile(
            &motif.into_spec(),
            out_nfa.as_deref(),
            out_dfa.as_deref(),
            out_dot.as_deref(),
        ),
        Command::Stats { motif, nfa_in } => {
            let source = match nfa_in {
                Some(path) => AutomatonSource::NfaFile(path),
                None => AutomatonSource::Spec(motif.into_spec()),
            };
            commands::cmd_stats(&source)
        }
        Command::Search {
            motif,
            dfa_in,
            motif_length,
            input,
            fasta,
            strict_symbols,
        } => {
            let case_fold = motif.mode == ModeArg::IupacDna;
            let source = match dfa_in {
                Some(path) => SearchSource::DfaFile {
                    path,
                    // clap's `requires` guarantees the length is present
                    motif_length: motif_length.unwrap(),
                    case_fold,
                },
                None => SearchSource::Spec(motif.into_spec()),
            };
            commands::cmd_search(&source, input.as_deref(), fasta, strict_symbols)
        }
        Command::ExportDot {
            motif,
            nfa_in,
            which,
            out,
        } => {
            let source = match nfa_in {
                Some(path) => AutomatonSource::NfaFile(path),
                None => AutomatonSource::Spec(motif.into_spec()),
            };
            let which = match which {
                WhichArg::Nfa => Which::Nfa,
                WhichArg::Dfa => Which::Dfa,
            };
            commands::cmd_export_dot(&source, which, out.as_deref())
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too; they exit 0
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            process::exit(code);
        }
    };
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        process::exit(e.exit_code());
    }
}
