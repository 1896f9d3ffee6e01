//! Gap words: for `u, v` in the language and a length `N`, a word `w` of
//! length `N` with `u w v` in the language.
//!
//! Everything here runs on the minimal acceptor. Whether `u w v` is accepted
//! depends on `u` only through the state `u` reaches, and on `v` only
//! through the set of states from which `v` can be read. Both range over
//! finite families, and for fixed `u` the set of states reachable in exactly
//! `N` steps is an eventually periodic function of `N`, which makes the
//! quantification over all `N` exact.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Symbol, Word};
use crate::bitset::BitSet;
use crate::dfa::LanguageDfa;
use crate::error::{Error, Result};
use crate::shift::Shift;

fn require_in_language(x: &Shift, w: &Word) -> Result<usize> {
    x.alphabet().check_word(w)?;
    x.dfa()
        .run_from(x.dfa().initial(), w.letters())
        .ok_or_else(|| Error::WordNotInLanguage(x.format_word(w)))
}

/// States from which `v` can be read.
fn readable_from(dfa: &LanguageDfa, v: &[Symbol]) -> BitSet {
    let n = dfa.state_count();
    let mut set = BitSet::new(n);
    for t in 0..n {
        if dfa.run_from(t, v).is_some() {
            set.insert(t);
        }
    }
    set
}

fn step_all(dfa: &LanguageDfa, set: &BitSet) -> BitSet {
    let mut next = BitSet::new(dfa.state_count());
    for s in set.iter() {
        for a in 0..dfa.alphabet_len() as Symbol {
            if let Some(t) = dfa.step(s, a) {
                next.insert(t);
            }
        }
    }
    next
}

/// The eventually periodic sequence of sets reachable from `start` in
/// exactly `N` steps: `sets[N]` for `N < sets.len()`, repeating from
/// `cycle_start` onwards.
struct ReachSequence {
    sets: Vec<BitSet>,
    cycle_start: usize,
}

impl ReachSequence {
    fn new(dfa: &LanguageDfa, start: usize) -> Self {
        let mut seen: HashMap<BitSet, usize> = HashMap::new();
        let mut sets = Vec::new();
        let mut cur = BitSet::singleton(dfa.state_count(), start);
        loop {
            if let Some(&i) = seen.get(&cur) {
                return ReachSequence { sets, cycle_start: i };
            }
            seen.insert(cur.clone(), sets.len());
            let next = step_all(dfa, &cur);
            sets.push(cur);
            cur = next;
        }
    }

    /// Largest `N` with no fill, or `Err(())` when fills fail for infinitely
    /// many `N`.
    fn last_failure(&self, targets: &BitSet) -> std::result::Result<Option<usize>, ()> {
        if self.sets[self.cycle_start..].iter().any(|s| !s.intersects(targets)) {
            return Err(());
        }
        Ok((0..self.cycle_start).rev().find(|&n| !self.sets[n].intersects(targets)))
    }
}

/// A word `w` with `|w| = n` and `u w v` in the language, lexicographically
/// least among such words, or `None` when no such word exists.
pub fn gap_witness(x: &Shift, u: &Word, v: &Word, n: usize) -> Result<Option<Word>> {
    let s = require_in_language(x, u)?;
    require_in_language(x, v)?;
    let dfa = x.dfa();
    // layers[k]: states from which some word of length k followed by v is readable
    let mut layers = vec![readable_from(dfa, v.letters())];
    for k in 1..=n {
        let prev = &layers[k - 1];
        let mut cur = BitSet::new(dfa.state_count());
        for t in 0..dfa.state_count() {
            if (0..dfa.alphabet_len() as Symbol).any(|a| dfa.step(t, a).is_some_and(|r| prev.contains(r))) {
                cur.insert(t);
            }
        }
        layers.push(cur);
    }
    if !layers[n].contains(s) {
        return Ok(None);
    }
    let mut letters = Vec::with_capacity(n);
    let mut cur = s;
    for remaining in (0..n).rev() {
        let (a, t) = (0..dfa.alphabet_len() as Symbol)
            .find_map(|a| {
                dfa.step(cur, a)
                    .filter(|&t| layers[remaining].contains(t))
                    .map(|t| (a, t))
            })
            .expect("layer invariant");
        letters.push(a);
        cur = t;
    }
    Ok(Some(Word::new(letters)))
}

/// Least `n0` such that `u w v` is in the language for some `w` of every
/// length `N >= n0`; `None` when fills are missing for infinitely many `N`.
pub fn gap_threshold(x: &Shift, u: &Word, v: &Word) -> Result<Option<usize>> {
    let s = require_in_language(x, u)?;
    require_in_language(x, v)?;
    let seq = ReachSequence::new(x.dfa(), s);
    let targets = readable_from(x.dfa(), v.letters());
    Ok(seq.last_failure(&targets).ok().map(|f| f.map_or(0, |n| n + 1)))
}

/// Shortest words reaching each acceptor state, lexicographically least.
pub(crate) fn state_words(dfa: &LanguageDfa) -> Vec<Word> {
    let mut words: Vec<Option<Word>> = vec![None; dfa.state_count()];
    words[0] = Some(Word::empty());
    let mut queue = VecDeque::from([0]);
    while let Some(s) = queue.pop_front() {
        let base = words[s].clone().expect("visited");
        for a in 0..dfa.alphabet_len() as Symbol {
            if let Some(t) = dfa.step(s, a) {
                if words[t].is_none() {
                    let mut w = base.clone().into_letters();
                    w.push(a);
                    words[t] = Some(Word::new(w));
                    queue.push_back(t);
                }
            }
        }
    }
    words.into_iter().map(|w| w.expect("all states reachable")).collect()
}

/// One representative `v` per distinct "readable-from" state set, over all
/// `v` in the language, shortest first.
fn suffix_classes(dfa: &LanguageDfa) -> Vec<(Word, BitSet)> {
    let n = dfa.state_count();
    let full = BitSet::full(n);
    let mut seen: HashMap<BitSet, ()> = HashMap::new();
    seen.insert(full.clone(), ());
    let mut out = vec![(Word::empty(), full.clone())];
    let mut queue = VecDeque::from([(Word::empty(), full)]);
    while let Some((v, set)) = queue.pop_front() {
        for a in 0..dfa.alphabet_len() as Symbol {
            let mut pre = BitSet::new(n);
            for t in 0..n {
                if dfa.step(t, a).is_some_and(|r| set.contains(r)) {
                    pre.insert(t);
                }
            }
            // a v is in the language iff the initial state can read it
            if !pre.contains(0) || seen.contains_key(&pre) {
                continue;
            }
            seen.insert(pre.clone(), ());
            let mut letters = vec![a];
            letters.extend_from_slice(v.letters());
            let w = Word::new(letters);
            out.push((w.clone(), pre.clone()));
            queue.push_back((w, pre));
        }
    }
    out
}

/// The exact least uniform gap and a pair realizing the last failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapBound {
    pub n0: usize,
    /// `(u, v, N)` with no fill of length `N = n0 - 1`; absent when `n0 = 0`.
    pub blocking: Option<(Word, Word, usize)>,
}

/// Computes the least `N0` such that every `u, v` in the language admit a
/// fill of every length `N >= N0`. Fails with [`Error::NotMixing`] when no
/// such bound exists.
pub fn gap_bound(x: &Shift) -> Result<GapBound> {
    if x.is_empty() {
        return Err(Error::NotMixing);
    }
    let dfa = x.dfa();
    let prefixes = state_words(dfa);
    let suffixes = suffix_classes(dfa);
    let mut best = GapBound { n0: 0, blocking: None };
    for (s, u) in prefixes.iter().enumerate() {
        let seq = ReachSequence::new(dfa, s);
        for (v, targets) in &suffixes {
            match seq.last_failure(targets) {
                Err(()) => return Err(Error::NotMixing),
                Ok(Some(n)) if n + 1 > best.n0 => {
                    best = GapBound {
                        n0: n + 1,
                        blocking: Some((u.clone(), v.clone(), n)),
                    };
                }
                Ok(_) => {}
            }
        }
    }
    Ok(best)
}

/// [`gap_bound`] with a search cap: [`Error::CapExceeded`] when the bound is
/// larger than `search_cap` or does not exist.
pub fn minimal_gap(x: &Shift, search_cap: usize) -> Result<usize> {
    match gap_bound(x) {
        Ok(b) if b.n0 <= search_cap => Ok(b.n0),
        Ok(_) | Err(Error::NotMixing) => Err(Error::CapExceeded { cap: search_cap }),
        Err(e) => Err(e),
    }
}
