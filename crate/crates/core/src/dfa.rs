//! Deterministic acceptors for factorial languages.
//!
//! A [`LanguageDfa`] has one initial state, every state accepting, and a
//! partial transition function; a missing transition is the implicit dead
//! state. Built by subset construction from a presentation, it accepts
//! exactly the labels of finite paths. After minimization each state is a
//! distinct follower set, and states are numbered canonically by
//! breadth-first search from the initial state in symbol order, so two
//! minimal acceptors of the same language are equal as values.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::error::{Error, Result};
use crate::graph::{Edge, LabeledGraph};

/// Default cap on subset-construction states.
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

pub(crate) const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageDfa {
    alphabet_len: usize,
    /// `trans[s * alphabet_len + a]`, `NONE` for the dead state.
    trans: Vec<u32>,
}

impl LanguageDfa {
    /// Subset construction from the set of all vertices of `g`, followed by
    /// minimization and canonical renumbering.
    pub fn from_graph(g: &LabeledGraph, cap: usize) -> Result<Self> {
        let k = g.alphabet().len();
        let out = g.out_edges();
        let start: Vec<u32> = (0..g.vertex_count() as u32).collect();
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut sets = vec![start.clone()];
        index.insert(start, 0);
        let mut trans = Vec::new();
        let mut i = 0;
        while i < sets.len() {
            let mut row = vec![NONE; k];
            let mut targets: Vec<Vec<u32>> = vec![Vec::new(); k];
            for &v in &sets[i] {
                for e in &out[v as usize] {
                    targets[e.label as usize].push(e.dst as u32);
                }
            }
            for (a, mut t) in targets.into_iter().enumerate() {
                if t.is_empty() {
                    continue;
                }
                t.sort_unstable();
                t.dedup();
                let next = match index.get(&t) {
                    Some(&id) => id,
                    None => {
                        let id = sets.len() as u32;
                        if sets.len() >= cap {
                            return Err(Error::StateBlowup { cap });
                        }
                        index.insert(t.clone(), id);
                        sets.push(t);
                        id
                    }
                };
                row[a] = next;
            }
            trans.extend(row);
            i += 1;
        }
        let raw = LanguageDfa { alphabet_len: k, trans };
        Ok(raw.minimized())
    }

    pub fn alphabet_len(&self) -> usize {
        self.alphabet_len
    }

    pub fn state_count(&self) -> usize {
        self.trans.len() / self.alphabet_len
    }

    pub fn initial(&self) -> usize {
        0
    }

    #[inline]
    pub fn step(&self, s: usize, a: Symbol) -> Option<usize> {
        let t = self.trans[s * self.alphabet_len + a as usize];
        (t != NONE).then_some(t as usize)
    }

    pub fn run_from(&self, s: usize, w: &[Symbol]) -> Option<usize> {
        w.iter().try_fold(s, |s, &a| self.step(s, a))
    }

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        self.run_from(0, w).is_some()
    }

    pub fn successors(&self) -> Vec<Vec<usize>> {
        (0..self.state_count())
            .map(|s| {
                let mut v: Vec<usize> = (0..self.alphabet_len as Symbol)
                    .filter_map(|a| self.step(s, a))
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect()
    }

    /// True iff the language is `{ε}`.
    pub fn is_trivial(&self) -> bool {
        self.trans.iter().all(|&t| t == NONE)
    }

    /// Moore partition refinement, then canonical renumbering.
    fn minimized(&self) -> LanguageDfa {
        let n = self.state_count();
        let k = self.alphabet_len;
        let mut class = vec![0u32; n];
        let mut classes = 1;
        loop {
            let mut sig_index: HashMap<Vec<u32>, u32> = HashMap::new();
            let mut next = vec![0u32; n];
            for s in 0..n {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[s]);
                for a in 0..k {
                    let t = self.trans[s * k + a];
                    sig.push(if t == NONE { NONE } else { class[t as usize] });
                }
                let len = sig_index.len() as u32;
                next[s] = *sig_index.entry(sig).or_insert(len);
            }
            let count = sig_index.len();
            class = next;
            if count == classes {
                break;
            }
            classes = count;
        }
        let mut trans = vec![NONE; classes * k];
        for s in 0..n {
            let c = class[s] as usize;
            for a in 0..k {
                let t = self.trans[s * k + a];
                trans[c * k + a] = if t == NONE { NONE } else { class[t as usize] };
            }
        }
        let quotient = LanguageDfa { alphabet_len: k, trans };
        quotient.renumbered_from(class[0] as usize)
    }

    fn renumbered_from(&self, init: usize) -> LanguageDfa {
        let k = self.alphabet_len;
        let mut order = vec![NONE; self.state_count()];
        let mut queue = VecDeque::from([init]);
        let mut seq = vec![init];
        order[init] = 0;
        while let Some(s) = queue.pop_front() {
            for a in 0..k {
                let t = self.trans[s * k + a];
                if t != NONE && order[t as usize] == NONE {
                    order[t as usize] = seq.len() as u32;
                    seq.push(t as usize);
                    queue.push_back(t as usize);
                }
            }
        }
        let mut trans = Vec::with_capacity(seq.len() * k);
        for &s in &seq {
            for a in 0..k {
                let t = self.trans[s * k + a];
                trans.push(if t == NONE { NONE } else { order[t as usize] });
            }
        }
        LanguageDfa { alphabet_len: k, trans }
    }

    /// Minimizes again and renumbers; identity on already-minimal acceptors.
    pub fn canonical(&self) -> LanguageDfa {
        self.minimized()
    }

    /// Exact number of accepted words of length `n`.
    pub fn count_words(&self, n: usize) -> BigUint {
        self.count_from(&[0], n)
    }

    /// `count_words(n)` for every `n` in `0..=n_max`, in one pass.
    pub fn count_sequence(&self, n_max: usize) -> Vec<BigUint> {
        let mut vec = vec![BigUint::zero(); self.state_count()];
        vec[0] = BigUint::one();
        let mut out = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            out.push(vec.iter().sum());
            if n == n_max {
                break;
            }
            let mut next = vec![BigUint::zero(); self.state_count()];
            for (s, c) in vec.iter().enumerate() {
                for a in 0..self.alphabet_len as Symbol {
                    if let Some(t) = self.step(s, a) {
                        next[t] += c;
                    }
                }
            }
            vec = next;
        }
        out
    }

    pub(crate) fn count_from(&self, starts: &[usize], n: usize) -> BigUint {
        let mut vec = vec![BigUint::zero(); self.state_count()];
        for &s in starts {
            vec[s] += BigUint::one();
        }
        for _ in 0..n {
            let mut next = vec![BigUint::zero(); self.state_count()];
            for (s, c) in vec.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for a in 0..self.alphabet_len as Symbol {
                    if let Some(t) = self.step(s, a) {
                        next[t] += c;
                    }
                }
            }
            vec = next;
        }
        vec.into_iter().sum()
    }

    /// All accepted words of length `n`, in lexicographic order.
    pub fn words(&self, n: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(n);
        self.collect_words(0, n, &mut prefix, &mut out);
        out
    }

    fn collect_words(&self, s: usize, left: usize, prefix: &mut Vec<Symbol>, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word::new(prefix.clone()));
            return;
        }
        for a in 0..self.alphabet_len as Symbol {
            if let Some(t) = self.step(s, a) {
                prefix.push(a);
                self.collect_words(t, left - 1, prefix, out);
                prefix.pop();
            }
        }
    }

    /// Shortest word accepted by exactly one of the two acceptors, ties
    /// broken lexicographically. `None` when the languages agree.
    pub fn shortest_difference(&self, other: &LanguageDfa) -> Option<Word> {
        self.product_search(other, |a, b| a.is_some() != b.is_some())
    }

    /// Shortest word accepted by `self` but not by `other`.
    pub fn shortest_excess(&self, other: &LanguageDfa) -> Option<Word> {
        self.product_search(other, |a, b| a.is_some() && b.is_none())
    }

    fn product_search(&self, other: &LanguageDfa, hit: impl Fn(Option<usize>, Option<usize>) -> bool) -> Option<Word> {
        assert_eq!(self.alphabet_len, other.alphabet_len);
        type Pair = (Option<usize>, Option<usize>);
        let start: Pair = (Some(0), Some(0));
        let mut parent: HashMap<Pair, Option<(Pair, Symbol)>> = HashMap::new();
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            if hit(p.0, p.1) {
                let mut letters = Vec::new();
                let mut cur = p;
                while let Some(Some((prev, a))) = parent.get(&cur) {
                    letters.push(*a);
                    cur = *prev;
                }
                letters.reverse();
                return Some(Word::new(letters));
            }
            for a in 0..self.alphabet_len as Symbol {
                let q = (p.0.and_then(|s| self.step(s, a)), p.1.and_then(|s| other.step(s, a)));
                if q == (None, None) {
                    continue;
                }
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(q) {
                    e.insert(Some((p, a)));
                    queue.push_back(q);
                }
            }
        }
        None
    }

    /// The transition graph, one vertex per state named `q<i>`.
    pub fn to_graph(&self, alphabet: &Alphabet) -> LabeledGraph {
        let mut edges = Vec::new();
        for s in 0..self.state_count() {
            for a in 0..self.alphabet_len as Symbol {
                if let Some(t) = self.step(s, a) {
                    edges.push(Edge {
                        src: s,
                        dst: t,
                        label: a,
                    });
                }
            }
        }
        let names = (0..self.state_count()).map(|s| format!("q{s}")).collect();
        LabeledGraph::new(alphabet.clone(), names, edges).expect("dfa graph")
    }
}

/// Image of a vertex set of a right-resolving graph under a symbol.
pub(crate) fn step_set(out: &[Vec<Edge>], set: &[usize], a: Symbol) -> Vec<usize> {
    let mut next: Vec<usize> = set
        .iter()
        .flat_map(|&v| out[v].iter().filter(move |e| e.label == a).map(|e| e.dst))
        .collect();
    next.sort_unstable();
    next.dedup();
    next
}
