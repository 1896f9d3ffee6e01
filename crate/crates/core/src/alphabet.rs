//! Finite alphabets and words over them.
//!
//! Symbols are stored as dense indices into the alphabet. The text encoding of
//! a word is the concatenation of its symbol names when every name is a single
//! visible character, and a comma-separated list of names otherwise.

use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol inside its [`Alphabet`].
pub type Symbol = u16;

/// Largest alphabet accepted by [`Alphabet::new`].
pub const MAX_ALPHABET: usize = 4096;

/// An ordered finite set of distinct symbol names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
    compact: bool,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if symbols.len() > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet(format!(
                "{} symbols exceeds the cap of {MAX_ALPHABET}",
                symbols.len()
            )));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.contains(|c: char| c.is_whitespace() || c == ',' || c == '#') {
                return Err(Error::InvalidAlphabet(format!("bad symbol name {s:?}")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {s:?}")));
            }
        }
        let compact = symbols.iter().all(|s| s.chars().count() == 1);
        Ok(Alphabet { symbols, compact })
    }

    /// The alphabet `{0, 1, ..., n-1}` with decimal names.
    pub fn numeric(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn binary() -> Self {
        Self::numeric(2).expect("binary alphabet")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.symbols[s as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<Symbol> {
        self.symbols.iter().position(|s| s == name).map(|i| i as Symbol)
    }

    /// True when every symbol name is a single character.
    pub fn is_compact(&self) -> bool {
        self.compact
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        w.letters().iter().all(|&a| (a as usize) < self.len())
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        if self.contains_word(w) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(format!(
                "word uses a letter outside an alphabet of size {}",
                self.len()
            )))
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Word::empty());
        }
        let lookup = |tok: &str| {
            self.index_of(tok)
                .ok_or_else(|| Error::InvalidWord(format!("unknown symbol {tok:?} in {text:?}")))
        };
        let letters = if self.compact && !text.contains(',') {
            text.chars()
                .map(|c| lookup(c.encode_utf8(&mut [0u8; 4])))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.split(',').map(|t| lookup(t.trim())).collect::<Result<Vec<_>>>()?
        };
        Ok(Word::new(letters))
    }

    pub fn format_word(&self, w: &Word) -> String {
        let names = w.letters().iter().map(|&a| self.name(a));
        if self.compact {
            names.collect()
        } else {
            names.collect::<Vec<_>>().join(",")
        }
    }

    /// Every word of length `n`, in lexicographic order.
    pub fn all_words(&self, n: usize) -> impl Iterator<Item = Word> + '_ {
        let k = self.len() as u64;
        let total = k.checked_pow(n as u32).expect("word enumeration overflow");
        (0..total).map(move |mut code| {
            let mut letters = vec![0; n];
            for slot in letters.iter_mut().rev() {
                *slot = (code % k) as Symbol;
                code /= k;
            }
            Word::new(letters)
        })
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols.join(" "))
    }
}

/// A finite word, stored as symbol indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(letters: Vec<Symbol>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Symbol> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}
