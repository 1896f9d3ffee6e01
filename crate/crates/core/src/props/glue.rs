//! Gluing finitely many language words placed on well-separated intervals
//! into a single language word.

use crate::alphabet::Word;
use crate::error::{Error, Result};
use crate::props::gaps::gap_witness;
use crate::shift::Shift;
use crate::window::{ConfigurationWindow, Interval};

/// `word` placed on `[start, start + |word|)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluePart {
    pub start: i64,
    pub word: Word,
}

impl GluePart {
    pub fn new(start: i64, word: Word) -> Self {
        GluePart { start, word }
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.start, self.start + self.word.len() as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueRequest {
    pub parts: Vec<GluePart>,
    /// Points of different parts must be more than `separation` apart.
    pub separation: usize,
}

/// Builds a language word over the hull of the parts that agrees with every
/// part, filling each hole with the lexicographically least admissible word.
///
/// Consecutive parts must satisfy `a_{i+1} - (b_i - 1) > separation`, where
/// `[a_i, b_i)` are the part intervals in order.
pub fn glue(x: &Shift, req: &GlueRequest) -> Result<ConfigurationWindow> {
    let mut parts: Vec<&GluePart> = req.parts.iter().filter(|p| !p.word.is_empty()).collect();
    if parts.is_empty() {
        return Err(Error::InvalidGlueRequest("no nonempty parts".into()));
    }
    parts.sort_by_key(|p| p.start);
    for p in &parts {
        x.alphabet().check_word(&p.word)?;
        if !x.contains_word(&p.word)? {
            return Err(Error::WordNotInLanguage(x.format_word(&p.word)));
        }
    }
    for pair in parts.windows(2) {
        let (a, b) = (pair[0].interval(), pair[1].interval());
        let distance = b.start - (a.end - 1);
        if distance <= req.separation as i64 {
            return Err(Error::SeparationTooSmall {
                first: a.start,
                second: b.start,
                distance,
                required: req.separation,
            });
        }
    }

    let start = parts[0].start;
    let mut acc = parts[0].word.clone();
    for pair in parts.windows(2) {
        let hole = (pair[1].start - pair[0].interval().end) as usize;
        let fill = gap_witness(x, &acc, &pair[1].word, hole)?.ok_or_else(|| Error::NoGapWitness {
            left: x.format_word(&acc),
            right: x.format_word(&pair[1].word),
            len: hole,
        })?;
        acc = acc.concat(&fill).concat(&pair[1].word);
    }
    Ok(ConfigurationWindow { start, word: acc })
}
