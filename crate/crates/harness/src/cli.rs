//! Command-line front end. Exit codes: 0 verified, 1 violation, 2 input
//! error, 3 precondition failure.

use std::ffi::OsString;
use std::io::Write;

use brickforge_core::families::{self, FamilySpec};
use brickforge_core::{CutPolicy, PieceKind};
use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{analyze, is_precondition, Options};
use crate::io::{emit_edge_list, emit_sparse6, read_graph};
use crate::report::to_line;
use crate::sweep::{run_sweep, write_json, write_pretty, SweepConfig, SweepError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "brickforge", version, about = "Matching structure of cubic bricks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    S6,
    Edges,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the edges of a graph and check the lower bound.
    Classify {
        /// Edge-list or sparse6 file, or - for standard input.
        input: String,
        #[arg(long)]
        pretty: bool,
        /// Base seed for the randomized decomposition policies.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the tight cut decomposition of a matching covered graph.
    Decompose { input: String },
    /// Emit a named graph.
    Family {
        name: String,
        size: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::S6)]
        format: Format,
    },
    /// Verify the lower bound and property suites on all small cubic graphs.
    Sweep {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        pretty: bool,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return e.exit_code();
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match command {
        Command::Classify { input, pretty, seed } => {
            let g = match read_graph(&input) {
                Ok(g) => g,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            let a = match analyze(&g, &Options::with_seed(seed)) {
                Ok(a) => a,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(if is_precondition(&e) { EXIT_PRECONDITION } else { EXIT_INPUT });
                }
            };
            if pretty {
                crate::sweep::write_pretty_header(out)?;
                crate::sweep::write_pretty_row(out, &a.record)?;
                for v in &a.violations {
                    writeln!(out, "    VIOLATION {}: {}", v.check, v.detail)?;
                }
            } else {
                writeln!(out, "{}", to_line(&a.record))?;
                for v in &a.violations {
                    writeln!(out, "{}", to_line(v))?;
                }
            }
            Ok(if !a.violations.is_empty() {
                EXIT_VIOLATION
            } else if !a.record.brick {
                writeln!(err, "not a brick")?;
                EXIT_PRECONDITION
            } else {
                EXIT_OK
            })
        }
        Command::Decompose { input } => {
            let g = match read_graph(&input) {
                Ok(g) => g,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            let d = match g.tight_cut_decomposition(CutPolicy::LeastShore) {
                Ok(d) => d,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(if is_precondition(&e) { EXIT_PRECONDITION } else { EXIT_INPUT });
                }
            };
            writeln!(out, "b {} p {} pieces {}", d.bricks, d.petersen_bricks, d.pieces.len())?;
            for (i, piece) in d.pieces.iter().enumerate() {
                let tag = match piece.kind {
                    PieceKind::Brick => "brick",
                    PieceKind::Brace => "brace",
                };
                writeln!(out, "piece {i} {tag}")?;
                write!(out, "{}", emit_edge_list(&piece.graph))?;
            }
            Ok(EXIT_OK)
        }
        Command::Family { name, size, format } => {
            let g = match FamilySpec::parse(&name, size).and_then(families::generate) {
                Ok(g) => g,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            match format {
                Format::S6 => writeln!(out, "{}", emit_sparse6(&g))?,
                Format::Edges => write!(out, "{}", emit_edge_list(&g))?,
            }
            Ok(EXIT_OK)
        }
        Command::Sweep { max_n, jobs, seed, pretty } => {
            let outcome = match run_sweep(SweepConfig { max_n, jobs, seed }) {
                Ok(o) => o,
                Err(e @ (SweepError::BadMaxN(_) | SweepError::Pool(..))) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT);
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_PRECONDITION);
                }
            };
            if pretty {
                write_pretty(&outcome, out)?;
            } else {
                write_json(&outcome, out)?;
            }
            Ok(if outcome.summary.verified { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}
