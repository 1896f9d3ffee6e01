//! Line-oriented text formats for shifts and automata.
//!
//! Shift files:
//!
//! ```text
//! # golden mean
//! alphabet: 0 1
//! forbidden:
//! 11
//! ```
//!
//! or a `graph:` section of `edge <src> <dst> <label>` lines. Automaton files
//! carry a `memory: l r` line, an optional `alphabet:` line naming the target
//! alphabet (default: the source alphabet), and one `rule <input> <output>`
//! line for every input word. `#` starts a comment.

use std::collections::HashMap;

use crate::alphabet::{Alphabet, Symbol};
use crate::ca::CellularAutomaton;
use crate::error::{Error, Result};
use crate::graph::{Edge, LabeledGraph};
use crate::sft::SftSpec;
use crate::shift::{Origin, Shift};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_alphabet(rest: &str, line: usize) -> Result<Alphabet> {
    let symbols: Vec<&str> = rest
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .collect();
    Alphabet::new(symbols).map_err(|e| perr(line, e.to_string()))
}

enum Section {
    Header,
    Forbidden,
    Graph,
}

pub fn parse_shift(text: &str) -> Result<Shift> {
    let mut alphabet: Option<Alphabet> = None;
    let mut section = Section::Header;
    let mut forbidden = Vec::new();
    let mut vertex_ids: HashMap<String, usize> = HashMap::new();
    let mut names = Vec::new();
    let mut edges = Vec::new();
    let mut last_line = 0;

    for (ln, line) in content_lines(text) {
        last_line = ln;
        if let Some(rest) = line.strip_prefix("alphabet:") {
            if alphabet.is_some() {
                return Err(perr(ln, "duplicate alphabet line"));
            }
            alphabet = Some(parse_alphabet(rest, ln)?);
            continue;
        }
        let Some(alpha) = alphabet.as_ref() else {
            return Err(perr(ln, "expected `alphabet:` before anything else"));
        };
        match line {
            "forbidden:" | "graph:" => {
                if !matches!(section, Section::Header) {
                    return Err(perr(ln, "a shift file has exactly one of `forbidden:` or `graph:`"));
                }
                section = if line == "forbidden:" {
                    Section::Forbidden
                } else {
                    Section::Graph
                };
                continue;
            }
            _ => {}
        }
        match section {
            Section::Header => return Err(perr(ln, format!("unknown directive {line:?}"))),
            Section::Forbidden => {
                let w = alpha.parse_word(line).map_err(|e| perr(ln, e.to_string()))?;
                if w.is_empty() {
                    return Err(perr(ln, "forbidden words must be nonempty"));
                }
                forbidden.push(w);
            }
            Section::Graph => {
                let toks: Vec<&str> = line.split_whitespace().collect();
                if toks.first() != Some(&"edge") {
                    return Err(perr(ln, format!("unknown directive {line:?}")));
                }
                if toks.len() != 4 {
                    return Err(perr(ln, "expected `edge <src> <dst> <label>`"));
                }
                let mut vid = |name: &str| {
                    let next = names.len();
                    *vertex_ids.entry(name.to_string()).or_insert_with(|| {
                        names.push(name.to_string());
                        next
                    })
                };
                let src = vid(toks[1]);
                let dst = vid(toks[2]);
                let label = alpha
                    .index_of(toks[3])
                    .ok_or_else(|| perr(ln, format!("unknown label {:?}", toks[3])))?;
                edges.push(Edge { src, dst, label });
            }
        }
    }
    let alphabet = alphabet.ok_or_else(|| perr(last_line.max(1), "missing `alphabet:` line"))?;
    match section {
        Section::Header => Err(perr(last_line.max(1), "missing `forbidden:` or `graph:` section")),
        Section::Forbidden => Shift::from_sft(SftSpec::new(alphabet, forbidden)?),
        Section::Graph => Shift::from_graph(LabeledGraph::new(alphabet, names, edges)?),
    }
}

/// Text form of a shift's origin, parseable by [`parse_shift`].
pub fn shift_to_text(x: &Shift) -> String {
    let alpha = x.alphabet();
    let mut s = format!("alphabet: {alpha}\n");
    match x.origin() {
        Origin::Forbidden(spec) => {
            s.push_str("forbidden:\n");
            for w in spec.forbidden() {
                s.push_str(&alpha.format_word(w));
                s.push('\n');
            }
        }
        Origin::Graph(g) => {
            s.push_str("graph:\n");
            for e in g.edges() {
                s.push_str(&format!(
                    "edge {} {} {}\n",
                    g.name(e.src),
                    g.name(e.dst),
                    alpha.name(e.label)
                ));
            }
        }
    }
    s
}

pub fn parse_ca(text: &str, source: &Alphabet) -> Result<CellularAutomaton> {
    let mut target: Option<Alphabet> = None;
    let mut memory: Option<(i64, i64)> = None;
    let mut rules: Vec<(usize, String, String)> = Vec::new();
    for (ln, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("alphabet:") {
            if target.is_some() {
                return Err(perr(ln, "duplicate alphabet line"));
            }
            target = Some(parse_alphabet(rest, ln)?);
        } else if let Some(rest) = line.strip_prefix("memory:") {
            if memory.is_some() {
                return Err(perr(ln, "duplicate memory line"));
            }
            let nums: Vec<&str> = rest.split_whitespace().collect();
            let parse = |s: &str| s.parse::<i64>().map_err(|_| perr(ln, format!("bad integer {s:?}")));
            match nums.as_slice() {
                [l, r] => {
                    let (l, r) = (parse(l)?, parse(r)?);
                    if l > r {
                        return Err(perr(ln, "memory interval needs l <= r"));
                    }
                    memory = Some((l, r));
                }
                _ => return Err(perr(ln, "expected `memory: <l> <r>`")),
            }
        } else if let Some(rest) = line.strip_prefix("rule ") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(perr(ln, "expected `rule <input-word> <output-symbol>`"));
            }
            rules.push((ln, toks[0].to_string(), toks[1].to_string()));
        } else {
            return Err(perr(ln, format!("unknown directive {line:?}")));
        }
    }
    let (left, right) = memory.ok_or_else(|| perr(1, "missing `memory:` line"))?;
    let target = target.unwrap_or_else(|| source.clone());
    let width = (right - left + 1) as usize;
    let k = source.len();
    let entries = (k as u128).checked_pow(width as u32).unwrap_or(u128::MAX);
    if entries > crate::ca::MAX_TABLE_ENTRIES as u128 {
        return Err(perr(1, format!("rule table with {entries} entries is too large")));
    }
    let mut table: Vec<Option<Symbol>> = vec![None; entries as usize];
    for (ln, input, output) in rules {
        let w = source.parse_word(&input).map_err(|e| perr(ln, e.to_string()))?;
        if w.len() != width {
            return Err(perr(ln, format!("rule input {input:?} must have length {width}")));
        }
        let b = target
            .index_of(&output)
            .ok_or_else(|| perr(ln, format!("unknown output symbol {output:?}")))?;
        let idx = w.letters().iter().fold(0usize, |acc, &a| acc * k + a as usize);
        if table[idx].replace(b).is_some() {
            return Err(perr(ln, format!("duplicate rule for {input:?}")));
        }
    }
    let missing = table.iter().filter(|e| e.is_none()).count();
    if missing > 0 {
        return Err(perr(
            1,
            format!("partial rule table: {missing} input words have no rule"),
        ));
    }
    CellularAutomaton::new(
        source.clone(),
        target,
        left,
        right,
        table.into_iter().map(|e| e.unwrap()).collect(),
    )
}
