//! Subshifts of finite type given by forbidden words.

use std::collections::{BTreeSet, HashMap};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::graph::{Edge, LabeledGraph};

/// A finite list of forbidden words over an alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SftSpec {
    alphabet: Alphabet,
    forbidden: Vec<Word>,
}

impl SftSpec {
    /// Deduplicates and sorts `forbidden`; rejects empty words.
    pub fn new(alphabet: Alphabet, forbidden: impl IntoIterator<Item = Word>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for w in forbidden {
            if w.is_empty() {
                return Err(Error::EmptyForbiddenWord);
            }
            alphabet.check_word(&w)?;
            set.insert(w);
        }
        let mut forbidden: Vec<Word> = set.into_iter().collect();
        forbidden.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        Ok(SftSpec { alphabet, forbidden })
    }

    /// Parses forbidden words in the alphabet's text encoding.
    pub fn from_strs(alphabet: Alphabet, forbidden: &[&str]) -> Result<Self> {
        let words = forbidden
            .iter()
            .map(|s| alphabet.parse_word(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, words)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn forbidden(&self) -> &[Word] {
        &self.forbidden
    }

    /// Length of the defining window: the longest forbidden word, at least 1.
    pub fn window(&self) -> usize {
        self.forbidden.iter().map(Word::len).max().unwrap_or(1).max(1)
    }

    /// True when no forbidden word occurs in `w`.
    pub fn avoids(&self, w: &[u16]) -> bool {
        self.forbidden.iter().all(|f| {
            let f = f.letters();
            f.len() > w.len() || !w.windows(f.len()).any(|win| win == f)
        })
    }

    fn ends_with_forbidden(&self, w: &[u16]) -> bool {
        self.forbidden.iter().any(|f| w.ends_with(f.letters()))
    }
}

/// De Bruijn-style presentation: one vertex per allowed word of length
/// `m - 1`, and an edge `u -> v` labeled `a` whenever `u a` avoids the
/// forbidden words and `v` is the suffix of `u a` of length `m - 1`.
///
/// The result is not essentialized. Every bi-infinite label sequence of the
/// result has exactly one presenting path.
pub fn sft_to_graph(spec: &SftSpec) -> LabeledGraph {
    let m = spec.window();
    let alphabet = spec.alphabet();
    let mut vertices: Vec<Word> = Vec::new();
    for w in alphabet.all_words(m - 1) {
        if spec.avoids(w.letters()) {
            vertices.push(w);
        }
    }
    let index: HashMap<&Word, usize> = vertices.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    for (src, u) in vertices.iter().enumerate() {
        for a in 0..alphabet.len() as u16 {
            let mut ua = u.letters().to_vec();
            ua.push(a);
            if spec.ends_with_forbidden(&ua) {
                continue;
            }
            let v = Word::from(&ua[1..]);
            if let Some(&dst) = index.get(&v) {
                edges.push(Edge { src, dst, label: a });
            }
        }
    }
    let names = vertices
        .iter()
        .map(|w| {
            if w.is_empty() {
                "ε".to_string()
            } else {
                alphabet.format_word(w)
            }
        })
        .collect();
    LabeledGraph::new(alphabet.clone(), names, edges).expect("de Bruijn graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::essentialize;

    fn edge_triples(g: &LabeledGraph) -> Vec<(String, String, String)> {
        let mut v: Vec<_> = g
            .edges()
            .iter()
            .map(|e| {
                (
                    g.name(e.src).to_string(),
                    g.name(e.dst).to_string(),
                    g.alphabet().name(e.label).to_string(),
                )
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn golden_mean_graph() {
        let spec = SftSpec::from_strs(Alphabet::binary(), &["11"]).unwrap();
        assert_eq!(spec.window(), 2);
        let g = sft_to_graph(&spec);
        let t = |a: &str, b: &str, c: &str| (a.to_string(), b.to_string(), c.to_string());
        assert_eq!(
            edge_triples(&g),
            vec![t("0", "0", "0"), t("0", "1", "1"), t("1", "0", "0")]
        );
    }

    #[test]
    fn full_shift_single_vertex() {
        let spec = SftSpec::new(Alphabet::binary(), []).unwrap();
        let g = sft_to_graph(&spec);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edges().len(), 2);
    }

    #[test]
    fn two_point_shift_is_two_loops() {
        let spec = SftSpec::from_strs(Alphabet::binary(), &["01", "10"]).unwrap();
        let g = essentialize(&sft_to_graph(&spec));
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.sccs().len(), 2);
        assert!(g.edges().iter().all(|e| e.src == e.dst));
    }

    #[test]
    fn rejects_empty_forbidden_word() {
        assert_eq!(
            SftSpec::new(Alphabet::binary(), [Word::empty()]),
            Err(Error::EmptyForbiddenWord)
        );
    }

    #[test]
    fn dedups_forbidden() {
        let spec = SftSpec::from_strs(Alphabet::binary(), &["11", "11", "0"]).unwrap();
        assert_eq!(spec.forbidden().len(), 2);
    }

    #[test]
    fn forbidding_everything_gives_empty_shift() {
        let spec = SftSpec::from_strs(Alphabet::binary(), &["0", "1"]).unwrap();
        assert!(essentialize(&sft_to_graph(&spec)).is_empty());
    }
}
