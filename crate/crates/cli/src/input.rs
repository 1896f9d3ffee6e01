//! Loading shifts and automata from files or bundled fixtures.

use std::path::Path;

use anyhow::{Context, Result};
use symdyn::parse::{parse_ca, parse_shift};
use symdyn::{fixtures, CellularAutomaton, Shift};

/// A named shift loaded from a file, or from the bundled fixture of that
/// name (an optional `.shift` suffix is ignored) when no such file exists.
pub fn load_shift(arg: &str) -> Result<(String, Shift)> {
    let path = Path::new(arg);
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg).to_string();
    if path.exists() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        let shift = parse_shift(&text).with_context(|| format!("parsing {arg}"))?;
        return Ok((name, shift));
    }
    let text = fixtures::shift_text(&name).with_context(|| format!("{arg}: no such file or bundled shift"))?;
    Ok((name, parse_shift(text)?))
}

/// An automaton over `source`, from a file or a bundled automaton.
pub fn load_ca(arg: &str, source: &symdyn::Alphabet) -> Result<CellularAutomaton> {
    let path = Path::new(arg);
    let text = if path.exists() {
        std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?
    } else {
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg);
        fixtures::ca_text(name)
            .with_context(|| format!("{arg}: no such file or bundled automaton"))?
            .to_string()
    };
    parse_ca(&text, source).with_context(|| format!("parsing {arg}"))
}
