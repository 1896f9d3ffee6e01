//! Brute-force oracles that share no code with the library's automata.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use symdyn::{fixtures, CellularAutomaton, Symbol};

pub const LN_2: f64 = std::f64::consts::LN_2;
/// `log((1 + √5) / 2)`.
pub const LN_PHI: f64 = 0.481_211_825_059_603_4;

/// Language of a bundled binary shift, written down from its definition.
#[derive(Debug, Clone)]
pub enum Lang {
    /// Words without a forbidden factor. Every such word extends to a point
    /// for the bundled SFTs, so this is the language.
    Sft { forbidden: Vec<Vec<Symbol>> },
    /// Every run of 0s between two 1s has even length.
    Even,
}

impl Lang {
    pub fn of(name: &str) -> Lang {
        if name == "even" {
            return Lang::Even;
        }
        let text = fixtures::shift_text(name).expect("bundled");
        let forbidden = text
            .lines()
            .skip_while(|l| !l.starts_with("forbidden:"))
            .skip(1)
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(letters)
            .collect();
        Lang::Sft { forbidden }
    }

    pub fn contains(&self, w: &[Symbol]) -> bool {
        match self {
            Lang::Sft { forbidden } => !forbidden
                .iter()
                .any(|f| f.len() <= w.len() && w.windows(f.len()).any(|x| x == f.as_slice())),
            Lang::Even => {
                let ones: Vec<usize> = (0..w.len()).filter(|&i| w[i] == 1).collect();
                ones.windows(2).all(|p| (p[1] - p[0] - 1) % 2 == 0)
            }
        }
    }

    /// Longest forbidden word (SFTs only).
    pub fn memory(&self) -> usize {
        match self {
            Lang::Sft { forbidden } => forbidden.iter().map(Vec::len).max().unwrap_or(1),
            Lang::Even => panic!("not an SFT"),
        }
    }

    pub fn words(&self, n: usize) -> Vec<Vec<Symbol>> {
        all_words(n).into_iter().filter(|w| self.contains(w)).collect()
    }

    pub fn count(&self, n: usize) -> usize {
        all_words(n).into_iter().filter(|w| self.contains(w)).count()
    }
}

pub fn letters(s: &str) -> Vec<Symbol> {
    s.bytes().map(|b| (b - b'0') as Symbol).collect()
}

/// All binary words of length `n`, lexicographically.
pub fn all_words(n: usize) -> Vec<Vec<Symbol>> {
    (0..1usize << n)
        .map(|i| (0..n).map(|j| ((i >> (n - 1 - j)) & 1) as Symbol).collect())
        .collect()
}

/// Whether some `w` of length `n` puts `u w v` in the language.
pub fn fill_exists(lang: &Lang, u: &[Symbol], v: &[Symbol], n: usize) -> bool {
    fn go(lang: &Lang, cur: &mut Vec<Symbol>, left: usize, v: &[Symbol]) -> bool {
        if left == 0 {
            let mut full = cur.clone();
            full.extend_from_slice(v);
            return lang.contains(&full);
        }
        for a in 0..2 {
            cur.push(a);
            if lang.contains(cur) && go(lang, cur, left - 1, v) {
                cur.pop();
                return true;
            }
            cur.pop();
        }
        false
    }
    go(lang, &mut u.to_vec(), n, v)
}

/// Least `n0 <= horizon` with fills for every `n0 <= n <= horizon`, or
/// `None` when one of the last two lengths has no fill.
pub fn naive_threshold(lang: &Lang, u: &[Symbol], v: &[Symbol], horizon: usize) -> Option<usize> {
    let bad: Vec<usize> = (0..=horizon).filter(|&n| !fill_exists(lang, u, v, n)).collect();
    match bad.last() {
        Some(&b) if b + 2 > horizon => None,
        Some(&b) => Some(b + 1),
        None => Some(0),
    }
}

/// Exact least uniform gap of an SFT over {0, 1} by iterating, for every
/// context `u` of length `m - 1`, the set of length-`m - 1` suffixes of the
/// admissible words `u w`. The tuple of sets is eventually periodic; `None`
/// when a length without fills recurs.
pub fn sft_minimal_gap(lang: &Lang) -> Option<usize> {
    let m = lang.memory().max(2);
    let ctx = lang.words(m - 1);
    let index: HashMap<&[Symbol], usize> = ctx.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let joinable: Vec<Vec<bool>> = ctx
        .iter()
        .map(|s| {
            ctx.iter()
                .map(|v| lang.contains(&[s.as_slice(), v.as_slice()].concat()))
                .collect()
        })
        .collect();
    let step: Vec<Vec<usize>> = ctx
        .iter()
        .map(|s| {
            (0..2)
                .filter_map(|a| {
                    let mut t = s.clone();
                    t.push(a);
                    lang.contains(&t).then(|| index[&t[1..]])
                })
                .collect()
        })
        .collect();

    let mut state: Vec<Vec<usize>> = (0..ctx.len()).map(|i| vec![i]).collect();
    let mut seen: HashMap<Vec<Vec<usize>>, usize> = HashMap::new();
    let mut good = Vec::new();
    for n in 0.. {
        if let Some(&start) = seen.get(&state) {
            if good[start..].iter().any(|g| !g) {
                return None;
            }
            return Some(good.iter().rposition(|g| !g).map_or(0, |b| b + 1));
        }
        seen.insert(state.clone(), n);
        let distinct: HashSet<&Vec<usize>> = state.iter().collect();
        good.push(
            distinct
                .iter()
                .all(|set| (0..ctx.len()).all(|v| set.iter().any(|&s| joinable[s][v]))),
        );
        state = state
            .iter()
            .map(|set| {
                let mut next: Vec<usize> = set.iter().flat_map(|&s| step[s].iter().copied()).collect();
                next.sort_unstable();
                next.dedup();
                next
            })
            .collect();
    }
    unreachable!()
}

/// Whether some source word of `lang` maps onto `target` under `t`.
pub fn has_preimage(t: &CellularAutomaton, lang: &Lang, target: &[Symbol]) -> bool {
    let width = t.width();
    let k = t.source().len() as Symbol;
    fn go(
        t: &CellularAutomaton,
        lang: &Lang,
        k: Symbol,
        width: usize,
        cur: &mut Vec<Symbol>,
        target: &[Symbol],
    ) -> bool {
        let produced = cur.len().saturating_sub(width - 1);
        if produced == target.len() {
            return true;
        }
        for a in 0..k {
            cur.push(a);
            let ok = lang.contains(cur)
                && (cur.len() < width || t.rule(&cur[cur.len() - width..]) == target[cur.len() - width]);
            if ok && go(t, lang, k, width, cur, target) {
                cur.pop();
                return true;
            }
            cur.pop();
        }
        false
    }
    go(t, lang, k, width, &mut Vec::new(), target)
}

/// A shortest word of `lang` of length at most `n_max` without preimage.
pub fn shortest_orphan(t: &CellularAutomaton, lang: &Lang, n_max: usize) -> Option<Vec<Symbol>> {
    (1..=n_max).find_map(|n| lang.words(n).into_iter().find(|w| !has_preimage(t, lang, w)))
}
