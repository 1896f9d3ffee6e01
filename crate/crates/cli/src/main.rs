//! `symdyn`: analyze shifts and cellular automata from the command line.
//!
//! Human-readable lines are interleaved with machine-readable ones, which
//! start with `#:`. Exit status: 0 when the analysis ran, 1 on input errors,
//! 2 when a check that must hold failed.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "symdyn", version, about = "Subshifts over Z and cellular automata on them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a shift.
    #[command(subcommand)]
    Shift(ShiftCommand),
    /// Analyze a cellular automaton on a shift.
    #[command(subcommand)]
    Ca(CaCommand),
    /// Run a seeded corpus of random endomorphisms.
    Corpus(CorpusArgs),
    /// Tilings of Z.
    #[command(subcommand)]
    Tiling(TilingCommand),
    /// Entropy drop from forbidding a pattern on every tile.
    #[command(subcommand)]
    Pattern(PatternCommand),
}

#[derive(Subcommand)]
enum ShiftCommand {
    /// Irreducibility, mixing, strong irreducibility certificate and entropy.
    Analyze(ShiftAnalyzeArgs),
    /// Entropy by block counts and by the Perron root.
    Entropy(ShiftEntropyArgs),
}

#[derive(Args)]
struct ShiftAnalyzeArgs {
    /// Shift file, or the name of a bundled fixture.
    shift: String,
    /// Also compute the least uniform gap, searching up to this bound.
    #[arg(long, value_name = "N")]
    minimal_gap: Option<usize>,
    /// Print the block-count table up to this length.
    #[arg(long, value_name = "n")]
    table: Option<usize>,
    /// Tolerance of the spectral entropy.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args)]
struct ShiftEntropyArgs {
    shift: String,
    /// Largest block length for the block-count estimate.
    #[arg(long, default_value_t = 40)]
    n_max: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Print the block-count table up to `n_max`.
    #[arg(long)]
    table: bool,
}

#[derive(Subcommand)]
enum CaCommand {
    /// Injectivity, pre-injectivity, surjectivity and entropy preservation.
    Analyze(CaAnalyzeArgs),
    /// Search for a surjective endomorphism that is not pre-injective.
    Moore(MooreArgs),
}

#[derive(Args)]
struct CaAnalyzeArgs {
    /// Shift file, or the name of a bundled fixture.
    shift: String,
    /// Automaton file, or the name of a bundled automaton.
    ca: String,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args)]
struct MooreArgs {
    shift: String,
    /// Largest memory width tried.
    #[arg(long, default_value_t = 3)]
    memory_bound: usize,
    /// Number of rule tables examined at most.
    #[arg(long, default_value_t = 10_000)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct CorpusArgs {
    /// Bundled shift names or shift files (repeatable).
    #[arg(long = "shift", value_name = "SHIFT")]
    shifts: Vec<String>,
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Memory interval `l..r` of the generated automata.
    #[arg(long, default_value = "0..2", value_parser = parse_memory)]
    memory: (i64, i64),
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Run the bundled worked examples end to end.
    #[arg(long)]
    worked_examples: bool,
    /// Omit per-instance lines.
    #[arg(long)]
    quiet: bool,
}

#[derive(Subcommand)]
enum TilingCommand {
    /// Verify the tiling with tile [0, k) and its density in [0, n).
    Check {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand)]
enum PatternCommand {
    /// Count words avoiding a pattern on every tile and compare with the bound.
    Check {
        shift: String,
        /// Length of the forbidden pattern.
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Tile length; defaults to `d + 2 N0` from the certificate.
        #[arg(long)]
        k: Option<usize>,
        /// Window length.
        #[arg(long, default_value_t = 18)]
        n: usize,
        /// Pattern of length `d` (defaults to the largest word of that length).
        #[arg(long)]
        pattern: Option<String>,
    },
}

fn parse_memory(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected l..r, got {s:?}"))?;
    let l = a.trim().parse::<i64>().map_err(|e| e.to_string())?;
    let r = b.trim().parse::<i64>().map_err(|e| e.to_string())?;
    if l > r {
        return Err(format!("empty memory interval {s}"));
    }
    Ok((l, r))
}

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Ok,
    Contradiction,
}

fn main() -> ExitCode {
    // usage errors exit 1; 2 is reserved for contradictions
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Shift(ShiftCommand::Analyze(a)) => commands::shift_analyze(&a.shift, a.minimal_gap, a.table, a.tol),
        Command::Shift(ShiftCommand::Entropy(a)) => commands::shift_entropy(&a.shift, a.n_max, a.tol, a.table),
        Command::Ca(CaCommand::Analyze(a)) => commands::ca_analyze(&a.shift, &a.ca, a.tol),
        Command::Ca(CaCommand::Moore(a)) => commands::moore(&a.shift, a.memory_bound, a.budget, a.seed),
        Command::Corpus(a) => {
            if a.worked_examples {
                commands::worked_examples(a.tol)
            } else {
                commands::corpus(&a.shifts, a.count, a.seed, a.memory, a.tol, a.quiet)
            }
        }
        Command::Tiling(TilingCommand::Check { k, n }) => commands::tiling_check(k, n),
        Command::Pattern(PatternCommand::Check {
            shift,
            d,
            k,
            n,
            pattern,
        }) => commands::pattern(&shift, d, k, n, pattern.as_deref()),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Contradiction) => {
            println!("#: status=contradiction");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
