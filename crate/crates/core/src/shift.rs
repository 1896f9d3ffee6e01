//! Subshifts of finite type and sofic subshifts over ℤ.
//!
//! A [`Shift`] is built from either a forbidden-word list or a labeled graph
//! and eagerly caches three views of itself:
//!
//! * the essential presentation (the origin graph with every vertex that
//!   lies on no bi-infinite path removed);
//! * the minimal deterministic acceptor of its language, with canonical state
//!   numbering ([`LanguageDfa`]);
//! * a right-resolving presentation derived from that acceptor. When the
//!   shift is irreducible this is the unique sink component of the acceptor,
//!   i.e. the Fischer cover; otherwise it is the essential part of the
//!   acceptor's transition graph.
//!
//! Language queries run on the acceptor; the structural decisions in
//! [`crate::props`] run on the right-resolving presentation.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::ca::CellularAutomaton;
use crate::decision::Decision;
use crate::dfa::{LanguageDfa, DEFAULT_STATE_CAP};
use crate::error::{Error, Result};
use crate::graph::{essentialize, Edge, LabeledGraph};
use crate::recode::block_graph;
use crate::sft::{sft_to_graph, SftSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShiftKind {
    /// Presented by a graph in which every point has exactly one path.
    Sft,
    Sofic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Forbidden(SftSpec),
    Graph(LabeledGraph),
}

#[derive(Debug, Clone)]
pub struct Shift {
    origin: Origin,
    kind: ShiftKind,
    essential: LabeledGraph,
    dfa: LanguageDfa,
    presentation: LabeledGraph,
    irreducible: bool,
}

impl Shift {
    pub fn from_sft(spec: SftSpec) -> Result<Self> {
        let g = sft_to_graph(&spec);
        Self::build(Origin::Forbidden(spec), ShiftKind::Sft, &g, DEFAULT_STATE_CAP)
    }

    pub fn from_forbidden(alphabet: Alphabet, forbidden: &[&str]) -> Result<Self> {
        Self::from_sft(SftSpec::from_strs(alphabet, forbidden)?)
    }

    pub fn from_graph(g: LabeledGraph) -> Result<Self> {
        Self::from_graph_with_cap(g, DEFAULT_STATE_CAP)
    }

    pub fn from_graph_with_cap(g: LabeledGraph, cap: usize) -> Result<Self> {
        let g2 = g.clone();
        Self::build(Origin::Graph(g), ShiftKind::Sofic, &g2, cap)
    }

    /// Graph origin whose every point is known to have a single presenting
    /// path (higher-block recodings of SFTs).
    pub(crate) fn from_unique_path_graph(g: LabeledGraph) -> Result<Self> {
        let g2 = g.clone();
        Self::build(Origin::Graph(g), ShiftKind::Sft, &g2, DEFAULT_STATE_CAP)
    }

    fn build(origin: Origin, kind: ShiftKind, g: &LabeledGraph, cap: usize) -> Result<Self> {
        let essential = essentialize(&g.dedup());
        let dfa = LanguageDfa::from_graph(&essential, cap)?;
        let (presentation, irreducible) = right_resolving_presentation(&dfa, essential.alphabet());
        Ok(Shift {
            origin,
            kind,
            essential,
            dfa,
            presentation,
            irreducible,
        })
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn kind(&self) -> ShiftKind {
        self.kind
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.essential.alphabet()
    }

    /// The essentialized origin graph.
    pub fn essential(&self) -> &LabeledGraph {
        &self.essential
    }

    /// Minimal deterministic acceptor of the language.
    pub fn dfa(&self) -> &LanguageDfa {
        &self.dfa
    }

    /// Right-resolving presentation: the Fischer cover when irreducible.
    pub fn deterministic(&self) -> &LabeledGraph {
        &self.presentation
    }

    /// True when the shift has no points.
    pub fn is_empty(&self) -> bool {
        self.essential.is_empty()
    }

    pub(crate) fn irreducible_flag(&self) -> bool {
        self.irreducible
    }

    /// The length-`n` words of the language, in lexicographic order.
    pub fn blocks(&self, n: usize) -> Vec<Word> {
        self.dfa.words(n)
    }

    /// Membership in the language, by simulating every start vertex of the
    /// right-resolving presentation at once.
    pub fn contains_word(&self, w: &Word) -> Result<bool> {
        self.alphabet().check_word(w)?;
        if w.is_empty() {
            return Ok(true);
        }
        let out = self.presentation.out_edges();
        let mut current: Vec<usize> = (0..self.presentation.vertex_count()).collect();
        for &a in w.letters() {
            current = crate::dfa::step_set(&out, &current, a);
            if current.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn check_same_alphabet(&self, other: &Shift) -> Result<()> {
        if self.alphabet() == other.alphabet() {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(format!(
                "[{}] vs [{}]",
                self.alphabet(),
                other.alphabet()
            )))
        }
    }

    /// Shortest word of `other`'s language missing from this one, if any.
    pub fn inclusion_witness(&self, other: &Shift) -> Result<Option<Word>> {
        self.check_same_alphabet(other)?;
        Ok(other.dfa.shortest_excess(&self.dfa))
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.alphabet().format_word(w)
    }

    pub fn parse_word(&self, s: &str) -> Result<Word> {
        self.alphabet().parse_word(s)
    }
}

/// Decides whether the shift is irreducible and returns its right-resolving
/// presentation.
///
/// The shift is irreducible iff the acceptor has a single sink component
/// whose states, used together as start states, accept the whole language.
/// If so, every state reaches that component, so any `u` can be continued
/// into it and then into any `v`. Conversely an irreducible sofic shift has
/// a synchronizing word whose follower set every state can reach, so the
/// sink component is unique, and irreducibility makes it accept everything.
fn right_resolving_presentation(dfa: &LanguageDfa, alphabet: &Alphabet) -> (LabeledGraph, bool) {
    let graph = dfa.to_graph(alphabet);
    if dfa.is_trivial() {
        return (LabeledGraph::empty(alphabet.clone()), false);
    }
    let comps = graph.sccs();
    let idx = graph.component_index(&comps);
    let sinks: Vec<&Vec<usize>> = comps
        .iter()
        .enumerate()
        .filter(|(c, _)| graph.edges().iter().all(|e| idx[e.src] != *c || idx[e.dst] == *c))
        .map(|(_, comp)| comp)
        .collect();
    if sinks.len() == 1 && covers_language(dfa, sinks[0]) {
        (graph.induced(sinks[0]), true)
    } else {
        (essentialize(&graph), false)
    }
}

/// Whether the states in `comp` jointly accept every word the acceptor does.
fn covers_language(dfa: &LanguageDfa, comp: &[usize]) -> bool {
    let start = (comp.to_vec(), dfa.initial());
    let mut seen: HashSet<(Vec<usize>, usize)> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some((set, s)) = queue.pop_front() {
        for a in 0..dfa.alphabet_len() as Symbol {
            let Some(t) = dfa.step(s, a) else { continue };
            let mut next: Vec<usize> = set.iter().filter_map(|&q| dfa.step(q, a)).collect();
            next.sort_unstable();
            next.dedup();
            if next.is_empty() {
                return false;
            }
            let key = (next, t);
            if seen.insert(key.clone()) {
                queue.push_back(key);
            }
        }
    }
    true
}

/// Equality of two shifts over the same alphabet.
///
/// The verdict compares canonical minimal acceptors; the witness, present on
/// `false`, is a shortest word in the symmetric difference of the languages.
pub fn equal_shifts(x: &Shift, y: &Shift) -> Result<Decision<Word>> {
    x.check_same_alphabet(y)?;
    let same = x.dfa == y.dfa;
    let witness = x.dfa.shortest_difference(&y.dfa);
    debug_assert_eq!(
        same,
        witness.is_none(),
        "acceptor canonicalization disagrees with product search"
    );
    Ok(if same { Decision::yes() } else { Decision::no(witness) })
}

/// Subset construction, minimization and restriction to the right-resolving
/// presentation described in the module docs.
pub fn determinize_minimize(g: &LabeledGraph) -> Result<LabeledGraph> {
    determinize_minimize_with_cap(g, DEFAULT_STATE_CAP)
}

pub fn determinize_minimize_with_cap(g: &LabeledGraph, cap: usize) -> Result<LabeledGraph> {
    let essential = essentialize(&g.dedup());
    let dfa = LanguageDfa::from_graph(&essential, cap)?;
    Ok(right_resolving_presentation(&dfa, g.alphabet()).0)
}

/// Result of [`higher_block`].
#[derive(Debug, Clone)]
pub struct Recoding {
    pub shift: Shift,
    /// Sends a point of the original shift to its recoding.
    pub forward: CellularAutomaton,
    /// Reads the first letter of each block.
    pub inverse: CellularAutomaton,
}

/// The `k`-th higher-block recoding over the alphabet of allowed `k`-blocks,
/// together with the conjugacy and its inverse.
pub fn higher_block(x: &Shift, k: usize) -> Result<Recoding> {
    if k == 0 {
        return Err(Error::InvalidWord("block length must be at least 1".into()));
    }
    let src_alpha = x.alphabet();
    let blocks = x.blocks(k);
    if blocks.is_empty() {
        return Err(Error::InvalidWord("cannot recode the empty shift".into()));
    }
    let names: Vec<String> = blocks
        .iter()
        .map(|b| {
            if src_alpha.is_compact() {
                src_alpha.format_word(b)
            } else {
                b.letters()
                    .iter()
                    .map(|&a| src_alpha.name(a))
                    .collect::<Vec<_>>()
                    .join(".")
            }
        })
        .collect();
    let new_alpha = if k == 1 {
        src_alpha.clone()
    } else {
        Alphabet::new(names)?
    };
    let block_index: HashMap<&[Symbol], Symbol> = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| (b.letters(), i as Symbol))
        .collect();

    let bg = block_graph(&x.essential, k);
    let edges = bg
        .edges
        .iter()
        .map(|e| Edge {
            src: e.src,
            dst: e.dst,
            label: block_index[e.word.as_slice()],
        })
        .collect();
    let names = (0..bg.vertex_count()).map(|i| format!("p{i}")).collect();
    let graph = LabeledGraph::new(new_alpha.clone(), names, edges)?;
    let shift = match x.kind {
        ShiftKind::Sft => Shift::from_unique_path_graph(graph)?,
        ShiftKind::Sofic => Shift::from_graph(graph)?,
    };

    let forward = CellularAutomaton::from_fn(src_alpha.clone(), new_alpha.clone(), 0, k as i64 - 1, |w| {
        block_index.get(w).copied().unwrap_or(0)
    })?;
    let inverse = CellularAutomaton::from_fn(new_alpha, src_alpha.clone(), 0, 0, |w| {
        blocks[w[0] as usize].letters()[0]
    })?;
    Ok(Recoding {
        shift,
        forward,
        inverse,
    })
}
