//! Irreducibility, topological mixing and strong irreducibility of shifts
//! over ℤ.
//!
//! For sofic shifts strong irreducibility and mixing coincide, and a mixing
//! shift comes with a constructive certificate: a synchronizing word `u0` of
//! length `l0` for the Fischer cover, the mixing threshold `n0` of `u0`
//! against itself, and the directed diameter `D` of the cover. Closed paths
//! at the synchronized vertex exist in every length `>= L0 = n0 + l0`, hence
//! paths of every length `>= N0 = L0 + 2D` between any two vertices pass
//! through it, and `N0` is a uniform gap bound.

mod gaps;
mod glue;

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

pub use gaps::{gap_bound, gap_threshold, gap_witness, minimal_gap, GapBound};
pub use glue::{glue, GluePart, GlueRequest};

use crate::alphabet::{Symbol, Word};
use crate::bitset::BitSet;
use crate::decision::Decision;
use crate::dfa::step_set;
use crate::error::{Error, Result};
use crate::graph::gcd;
use crate::shift::Shift;

/// Words `u`, `v` of the language such that no `u w v` is in the language.
pub type DisconnectedPair = (Word, Word);

/// Decides irreducibility; on `false` the witness is a pair `(u, v)` with no
/// connecting word, minimal in total length.
pub fn is_irreducible(x: &Shift) -> Decision<DisconnectedPair> {
    if x.irreducible_flag() {
        return Decision::yes();
    }
    if x.is_empty() {
        return Decision::no(None);
    }
    Decision::no(disconnected_pair(x))
}

fn disconnected_pair(x: &Shift) -> Option<DisconnectedPair> {
    let dfa = x.dfa();
    let n = dfa.state_count();
    let succ = dfa.successors();
    let prefixes = gaps::state_words(dfa);
    let mut best: Option<DisconnectedPair> = None;
    for (s, u) in prefixes.iter().enumerate() {
        let reach = crate::graph::reachable(&succ, [s]);
        let mut start = BitSet::new(n);
        for (t, &r) in reach.iter().enumerate() {
            if r {
                start.insert(t);
            }
        }
        // shortest v readable from the initial state and from no reachable state
        let mut seen: HashMap<(BitSet, usize), ()> = HashMap::new();
        let mut queue = VecDeque::from([(start.clone(), 0usize, Vec::<Symbol>::new())]);
        seen.insert((start, 0), ());
        let mut found = None;
        while let Some((set, t, v)) = queue.pop_front() {
            if set.is_empty() {
                found = Some(Word::new(v));
                break;
            }
            for a in 0..dfa.alphabet_len() as Symbol {
                let Some(t2) = dfa.step(t, a) else { continue };
                let mut next = BitSet::new(n);
                for q in set.iter() {
                    if let Some(r) = dfa.step(q, a) {
                        next.insert(r);
                    }
                }
                if seen.insert((next.clone(), t2), ()).is_none() {
                    let mut v2 = v.clone();
                    v2.push(a);
                    queue.push_back((next, t2, v2));
                }
            }
        }
        if let Some(v) = found {
            let better = match &best {
                None => true,
                Some((bu, bv)) => (u.len() + v.len(), u.len()) < (bu.len() + bv.len(), bu.len()),
            };
            if better {
                best = Some((u.clone(), v));
            }
        }
    }
    best
}

/// A word all of whose paths in the right-resolving presentation end at one
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncWitness {
    pub word: Word,
    /// Vertex index in [`Shift::deterministic`].
    pub vertex: usize,
}

impl SyncWitness {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Re-checks the defining property by simulating every start vertex.
    pub fn verify(&self, x: &Shift) -> bool {
        let g = x.deterministic();
        let out = g.out_edges();
        let mut cur: Vec<usize> = (0..g.vertex_count()).collect();
        for &a in self.word.letters() {
            cur = step_set(&out, &cur, a);
        }
        cur == [self.vertex]
    }
}

/// Shortest synchronizing word, by breadth-first search over vertex subsets
/// of the right-resolving presentation. Ties go to the word that is largest
/// in symbol order, which favors letters that constrain the future most
/// (`1` rather than `0` in the golden mean shift).
pub fn synchronizing_word(x: &Shift) -> Result<SyncWitness> {
    let g = x.deterministic();
    if g.is_empty() {
        return Err(Error::NoSyncWord);
    }
    let out = g.out_edges();
    let start: Vec<usize> = (0..g.vertex_count()).collect();
    let mut parent: HashMap<Vec<usize>, Option<(Vec<usize>, Symbol)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(set) = queue.pop_front() {
        if set.len() == 1 {
            let mut letters = Vec::new();
            let mut cur = set.clone();
            while let Some(Some((prev, a))) = parent.get(&cur) {
                letters.push(*a);
                cur = prev.clone();
            }
            letters.reverse();
            return Ok(SyncWitness {
                word: Word::new(letters),
                vertex: set[0],
            });
        }
        for a in (0..g.alphabet().len() as Symbol).rev() {
            let next = step_set(&out, &set, a);
            if next.is_empty() || parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((set.clone(), a)));
            queue.push_back(next);
        }
    }
    Err(Error::NoSyncWord)
}

/// Why a shift fails to mix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MixingWitness {
    /// Not irreducible: `u` and `v` admit no connecting word.
    Disconnected(DisconnectedPair),
    /// Irreducible with period `p > 1`: vertex classes of the presentation by
    /// path length modulo `p`.
    Periodic(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixingReport {
    pub irreducible: bool,
    /// Gcd of cycle lengths in the right-resolving presentation.
    pub cycle_gcd: usize,
    pub mixing: bool,
    pub witness: Option<MixingWitness>,
}

/// Mixing iff irreducible and the Fischer cover is aperiodic.
pub fn is_mixing(x: &Shift) -> MixingReport {
    let g = x.deterministic();
    let cycle_gcd = g
        .nontrivial_sccs()
        .iter()
        .fold(0, |acc, comp| gcd(acc, g.cycle_gcd(comp)));
    let irr = is_irreducible(x);
    if !irr.is_true() {
        return MixingReport {
            irreducible: false,
            cycle_gcd,
            mixing: false,
            witness: irr.witness.map(MixingWitness::Disconnected),
        };
    }
    let mixing = cycle_gcd == 1;
    let witness = (!mixing).then(|| {
        let dist = g.distances_from(0);
        let mut classes = vec![Vec::new(); cycle_gcd];
        for (v, d) in dist.into_iter().enumerate() {
            classes[d % cycle_gcd].push(v);
        }
        MixingWitness::Periodic(classes)
    });
    MixingReport {
        irreducible: true,
        cycle_gcd,
        mixing,
        witness,
    }
}

/// Constructive strong irreducibility certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiCertificate {
    pub sync: SyncWitness,
    /// Mixing threshold of the sync word against itself.
    pub n0: usize,
    /// `n0 + |u0|`: closed paths at the sync vertex exist in every length `>= l0_total`.
    pub l0_total: usize,
    /// Directed diameter of the Fischer cover.
    pub diameter: usize,
    /// `l0_total + 2 * diameter`.
    pub n0_bound: usize,
    /// The exact least uniform gap, when computed.
    pub n0_min: Option<usize>,
}

impl SiCertificate {
    /// Fills in [`SiCertificate::n0_min`] with the exact least gap.
    pub fn with_minimal_gap(mut self, x: &Shift) -> Result<Self> {
        self.n0_min = Some(minimal_gap(x, self.n0_bound)?);
        Ok(self)
    }

    /// Key-value block for reports.
    pub fn to_kv(&self, x: &Shift) -> String {
        let mut s = String::new();
        let word = if self.sync.word.is_empty() {
            "ε".to_string()
        } else {
            x.format_word(&self.sync.word)
        };
        writeln!(s, "sync_word={word}").unwrap();
        writeln!(s, "sync_vertex={}", x.deterministic().name(self.sync.vertex)).unwrap();
        writeln!(s, "l0={}", self.sync.len()).unwrap();
        writeln!(s, "n0={}", self.n0).unwrap();
        writeln!(s, "L0={}", self.l0_total).unwrap();
        writeln!(s, "D={}", self.diameter).unwrap();
        writeln!(s, "N0_bound={}", self.n0_bound).unwrap();
        match self.n0_min {
            Some(m) => writeln!(s, "N0_min={m}").unwrap(),
            None => writeln!(s, "N0_min=").unwrap(),
        }
        s
    }
}

/// Certificate for a mixing sofic shift; [`Error::NotMixing`] otherwise.
///
/// A single-vertex cover is synchronized by the empty word (`l0 = 0`).
pub fn si_certificate(x: &Shift) -> Result<SiCertificate> {
    if !is_mixing(x).mixing {
        return Err(Error::NotMixing);
    }
    let sync = synchronizing_word(x)?;
    let n0 = gap_threshold(x, &sync.word, &sync.word)?.ok_or(Error::NotMixing)?;
    let diameter = x.deterministic().diameter().ok_or(Error::NotMixing)?;
    let l0_total = n0 + sync.len();
    Ok(SiCertificate {
        n0_bound: l0_total + 2 * diameter,
        sync,
        n0,
        l0_total,
        diameter,
        n0_min: None,
    })
}

/// Strong irreducibility of a sofic shift, which coincides with mixing; a
/// `true` verdict carries the certificate.
pub fn is_strongly_irreducible(x: &Shift) -> Decision<SiCertificate> {
    match si_certificate(x) {
        Ok(cert) => Decision {
            witness: Some(cert),
            ..Decision::yes()
        },
        Err(_) => Decision::no(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&fixtures::golden()).is_true());
        assert!(is_irreducible(&fixtures::even()).is_true());
        let tp = fixtures::twopoint();
        let d = is_irreducible(&tp);
        assert!(d.verdict.is_false());
        let (u, v) = d.witness.unwrap();
        assert_eq!((tp.format_word(&u), tp.format_word(&v)), ("0".into(), "1".into()));
    }

    #[test]
    fn sync_words() {
        let e = fixtures::even();
        let s = synchronizing_word(&e).unwrap();
        assert_eq!(e.format_word(&s.word), "1");
        assert!(s.verify(&e));
        // the vertex reached by 1 has a 1-labeled self-loop
        let g = e.deterministic();
        assert!(g
            .edges()
            .iter()
            .any(|ed| ed.src == s.vertex && ed.dst == s.vertex && ed.label == 1));

        let gm = fixtures::golden();
        let s = synchronizing_word(&gm).unwrap();
        assert_eq!(gm.format_word(&s.word), "1");
        assert!(s.verify(&gm));

        let f = fixtures::full2();
        let s = synchronizing_word(&f).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn mixing_examples() {
        let r = is_mixing(&fixtures::golden());
        assert!(r.mixing && r.irreducible);
        assert_eq!(r.cycle_gcd, 1);
        assert!(is_mixing(&fixtures::even()).mixing);
        let p = is_mixing(&fixtures::period2());
        assert!(p.irreducible && !p.mixing);
        assert_eq!(p.cycle_gcd, 2);
        assert!(matches!(p.witness, Some(MixingWitness::Periodic(ref c)) if c.len() == 2));
        let t = is_mixing(&fixtures::twopoint());
        assert!(!t.irreducible && !t.mixing);
    }

    #[test]
    fn certificates() {
        let c = si_certificate(&fixtures::even()).unwrap();
        assert_eq!((c.sync.len(), c.n0, c.diameter, c.n0_bound), (1, 0, 1, 3));
        let c = si_certificate(&fixtures::golden()).unwrap();
        assert_eq!((c.sync.len(), c.n0, c.diameter, c.n0_bound), (1, 1, 1, 4));
        let c = si_certificate(&fixtures::full2()).unwrap();
        assert_eq!((c.sync.len(), c.n0_bound), (0, 0));
        assert_eq!(si_certificate(&fixtures::period2()), Err(Error::NotMixing));
        assert_eq!(si_certificate(&fixtures::twopoint()), Err(Error::NotMixing));
    }

    #[test]
    fn certificate_kv_block() {
        let e = fixtures::even();
        let c = si_certificate(&e).unwrap().with_minimal_gap(&e).unwrap();
        let kv = c.to_kv(&e);
        assert!(kv.contains("sync_word=1\n"));
        assert!(kv.contains("n0=0\n"));
        assert!(kv.contains("D=1\n"));
        assert!(kv.contains("N0_bound=3\n"));
        assert!(kv.contains("N0_min=2\n"));
    }

    #[test]
    fn strong_irreducibility() {
        assert!(is_strongly_irreducible(&fixtures::even()).is_true());
        assert!(!is_strongly_irreducible(&fixtures::twopoint()).is_true());
        assert!(!is_strongly_irreducible(&fixtures::period2()).is_true());
    }

    #[test]
    fn empty_shift_is_degenerate() {
        let x = Shift::from_forbidden(crate::Alphabet::binary(), &["0", "1"]).unwrap();
        assert!(!is_irreducible(&x).is_true());
        assert!(!is_mixing(&x).mixing);
        assert!(!is_strongly_irreducible(&x).is_true());
        assert_eq!(synchronizing_word(&x), Err(Error::NoSyncWord));
    }
}
