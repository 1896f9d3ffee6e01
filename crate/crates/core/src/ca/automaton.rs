use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::error::{Error, Result};

/// Cap on rule-table entries for any automaton.
pub const MAX_TABLE_ENTRIES: usize = 1 << 20;

/// Default cap on memory width for [`random_ca`].
pub const DEFAULT_RANDOM_WIDTH: usize = 4;

/// A sliding-block code: the output at position `g` is the rule applied to
/// the input on `g + [left, right]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellularAutomaton {
    source: Alphabet,
    target: Alphabet,
    left: i64,
    right: i64,
    /// Indexed by the input window read as a base-`|source|` number, first
    /// letter most significant.
    table: Vec<Symbol>,
}

impl CellularAutomaton {
    pub fn new(source: Alphabet, target: Alphabet, left: i64, right: i64, table: Vec<Symbol>) -> Result<Self> {
        if left > right {
            return Err(Error::InvalidRule(format!("memory [{left}, {right}] is empty")));
        }
        let entries = table_size(source.len(), (right - left + 1) as usize)?;
        if table.len() != entries {
            return Err(Error::InvalidRule(format!(
                "rule table has {} entries, expected {entries}",
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&b| b as usize >= target.len()) {
            return Err(Error::InvalidRule(format!(
                "output symbol {bad} outside target alphabet"
            )));
        }
        Ok(CellularAutomaton {
            source,
            target,
            left,
            right,
            table,
        })
    }

    /// Builds the table by evaluating `rule` on every input window.
    pub fn from_fn(
        source: Alphabet,
        target: Alphabet,
        left: i64,
        right: i64,
        rule: impl Fn(&[Symbol]) -> Symbol,
    ) -> Result<Self> {
        if left > right {
            return Err(Error::InvalidRule(format!("memory [{left}, {right}] is empty")));
        }
        let width = (right - left + 1) as usize;
        table_size(source.len(), width)?;
        let table = source.all_words(width).map(|w| rule(w.letters())).collect();
        Self::new(source, target, left, right, table)
    }

    /// The identity on `alphabet`.
    pub fn identity(alphabet: Alphabet) -> Self {
        Self::from_fn(alphabet.clone(), alphabet, 0, 0, |w| w[0]).expect("identity rule")
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn memory(&self) -> (i64, i64) {
        (self.left, self.right)
    }

    /// Number of cells the rule reads.
    pub fn width(&self) -> usize {
        (self.right - self.left + 1) as usize
    }

    pub fn table(&self) -> &[Symbol] {
        &self.table
    }

    pub fn rule(&self, window: &[Symbol]) -> Symbol {
        debug_assert_eq!(window.len(), self.width());
        let k = self.source.len();
        let idx = window.iter().fold(0usize, |acc, &a| acc * k + a as usize);
        self.table[idx]
    }

    /// Applies the rule to every full window of `w`. Output letter `i` reads
    /// `w[i ..= i + width - 1]`, so a word on `[0, n)` yields the image on
    /// `[-left, n - right)`.
    pub fn apply_to_word(&self, w: &Word) -> Result<Word> {
        self.source.check_word(w)?;
        let width = self.width();
        if w.len() < width {
            return Err(Error::WordTooShort { len: w.len(), width });
        }
        Ok(Word::new(
            w.letters().windows(width).map(|win| self.rule(win)).collect(),
        ))
    }

    /// Image of a word that may be shorter than the memory width (empty
    /// result in that case).
    pub(crate) fn image_letters(&self, w: &[Symbol]) -> Vec<Symbol> {
        if w.len() < self.width() {
            return Vec::new();
        }
        w.windows(self.width()).map(|win| self.rule(win)).collect()
    }

    /// True when the rule ignores its input.
    pub fn is_constant(&self) -> bool {
        self.table.windows(2).all(|p| p[0] == p[1])
    }

    /// Same rule read on `[0, width)`; differs from `self` by a shift.
    pub fn normalized(&self) -> CellularAutomaton {
        CellularAutomaton {
            left: 0,
            right: self.right - self.left,
            ..self.clone()
        }
    }

    /// Text form understood by [`crate::parse::parse_ca`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if self.target != self.source {
            s.push_str(&format!("alphabet: {}\n", self.target));
        }
        s.push_str(&format!("memory: {} {}\n", self.left, self.right));
        for (w, &b) in self.source.all_words(self.width()).zip(&self.table) {
            s.push_str(&format!(
                "rule {} {}\n",
                self.source.format_word(&w),
                self.target.name(b)
            ));
        }
        s
    }
}

fn table_size(alphabet_len: usize, width: usize) -> Result<usize> {
    let entries = (alphabet_len as u128).checked_pow(width as u32).unwrap_or(u128::MAX);
    if entries > MAX_TABLE_ENTRIES as u128 {
        return Err(Error::TableTooLarge {
            entries: entries.min(usize::MAX as u128) as usize,
            cap: MAX_TABLE_ENTRIES,
        });
    }
    Ok(entries as usize)
}

/// A uniformly random rule table, reproducible from `seed`.
pub fn random_ca(source: &Alphabet, target: &Alphabet, memory: (i64, i64), seed: u64) -> Result<CellularAutomaton> {
    let (left, right) = memory;
    if left > right {
        return Err(Error::InvalidRule(format!("memory [{left}, {right}] is empty")));
    }
    let width = (right - left + 1) as usize;
    if width > DEFAULT_RANDOM_WIDTH {
        return Err(Error::TableTooLarge {
            entries: table_size(source.len(), width).unwrap_or(usize::MAX),
            cap: source.len().pow(DEFAULT_RANDOM_WIDTH as u32),
        });
    }
    let entries = table_size(source.len(), width)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let table = (0..entries).map(|_| rng.gen_range(0..target.len()) as Symbol).collect();
    CellularAutomaton::new(source.clone(), target.clone(), left, right, table)
}
