//! Composite checks of automata against the Garden of Eden circle of
//! results: Myhill's direction on strongly irreducible shifts, entropy
//! preservation under pre-injective maps, and searches for Moore-direction
//! counterexamples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Symbol, Word};
use crate::ca::image::{image_of_code, surjective_onto, CodeGraph};
use crate::ca::pairs::{injective_on, pre_injective_on, PairGraph, PointPair};
use crate::ca::CellularAutomaton;
use crate::decision::Decision;
use crate::entropy::{entropy_spectral, EntropyEstimate};
use crate::error::{Error, Result};
use crate::props::is_strongly_irreducible;
use crate::shift::Shift;

/// All verdicts for an automaton `t: X -> X`.
#[derive(Debug, Clone)]
pub struct MyhillReport {
    pub strongly_irreducible: bool,
    pub pre_injective: Decision<PointPair>,
    pub injective: Decision<PointPair>,
    pub surjective: Decision<Word>,
}

impl MyhillReport {
    /// Strongly irreducible and pre-injective but not surjective.
    pub fn myhill_violated(&self) -> bool {
        self.strongly_irreducible && self.pre_injective.is_true() && !self.surjective.is_true()
    }

    /// Injective but not pre-injective.
    pub fn injectivity_inconsistent(&self) -> bool {
        self.injective.is_true() && !self.pre_injective.is_true()
    }

    /// Strongly irreducible and injective but not surjective.
    pub fn surjunctivity_violated(&self) -> bool {
        self.strongly_irreducible && self.injective.is_true() && !self.surjective.is_true()
    }

    pub fn contradiction(&self) -> bool {
        self.myhill_violated() || self.injectivity_inconsistent() || self.surjunctivity_violated()
    }
}

/// The image of `t` on `x`, or [`Error::NotEndomorphism`] with a shortest
/// image word outside `x`.
pub fn endomorphism_image(t: &CellularAutomaton, x: &Shift) -> Result<Shift> {
    if t.target() != x.alphabet() {
        return Err(Error::NotEndomorphism(format!("automaton writes {}", t.target())));
    }
    let image = image_of_code(t, &CodeGraph::new(t, x)?)?;
    if let Some(w) = x.inclusion_witness(&image)? {
        return Err(Error::NotEndomorphism(x.format_word(&w)));
    }
    Ok(image)
}

/// Decides strong irreducibility of `x` and pre-injectivity, injectivity and
/// surjectivity of the endomorphism `t`.
pub fn check_myhill(t: &CellularAutomaton, x: &Shift) -> Result<MyhillReport> {
    let image = endomorphism_image(t, x)?;
    Ok(myhill_with_image(t, x, &image, is_strongly_irreducible(x).is_true()))
}

pub(crate) fn myhill_with_image(t: &CellularAutomaton, x: &Shift, image: &Shift, si: bool) -> MyhillReport {
    let pg = PairGraph::from_code(CodeGraph::new(t, x).expect("alphabets checked"));
    MyhillReport {
        strongly_irreducible: si,
        pre_injective: pre_injective_on(&pg),
        injective: injective_on(&pg),
        surjective: surjective_onto(image, x).expect("image inside the shift"),
    }
}

/// Spectral entropies of a shift and its image.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyPreservation {
    pub domain: EntropyEstimate,
    pub image: EntropyEstimate,
    pub tol: f64,
    /// Entropy cannot grow under an automaton.
    pub monotone_ok: bool,
    /// Set when the domain is strongly irreducible and `t` pre-injective, so
    /// that the two entropies must agree.
    pub equality_required: bool,
    pub equality_ok: bool,
}

impl EntropyPreservation {
    pub fn contradiction(&self) -> bool {
        !self.monotone_ok || (self.equality_required && !self.equality_ok)
    }
}

pub fn check_entropy_preservation(t: &CellularAutomaton, x: &Shift, tol: f64) -> Result<EntropyPreservation> {
    let code = CodeGraph::new(t, x)?;
    let image = image_of_code(t, &code)?;
    let pre_injective = pre_injective_on(&PairGraph::from_code(code)).is_true();
    let si = is_strongly_irreducible(x).is_true();
    Ok(entropy_report(x, &image, si && pre_injective, tol))
}

pub(crate) fn entropy_report(x: &Shift, image: &Shift, equality_required: bool, tol: f64) -> EntropyPreservation {
    let domain = entropy_spectral(x, tol);
    let img = entropy_spectral(image, tol);
    let diff = domain.value - img.value;
    EntropyPreservation {
        monotone_ok: diff >= -2.0 * tol,
        equality_ok: diff.abs() <= 2.0 * tol,
        equality_required,
        domain,
        image: img,
        tol,
    }
}

/// Checks `|L_n(τ(X))| <= |L_{n + width - 1}(X)|` for `n <= n_max`; returns
/// the first failing `n`.
pub fn counting_shadow(t: &CellularAutomaton, x: &Shift, image: &Shift, n_max: usize) -> Option<usize> {
    let pad = t.width() - 1;
    let xs = x.dfa().count_sequence(n_max + pad);
    let ys = image.dfa().count_sequence(n_max);
    (1..=n_max).find(|&n| ys[n] > xs[n + pad])
}

/// Outcome of [`search_moore_counterexample`].
#[derive(Debug, Clone)]
pub struct MooreSearch {
    /// A surjective endomorphism that is not pre-injective.
    pub found: Option<CellularAutomaton>,
    pub examined: usize,
    pub endomorphisms: usize,
    /// Every table up to the memory bound was examined, so absence is a
    /// proof for that bound.
    pub exhaustive: bool,
}

/// Looks for a surjective, non-pre-injective endomorphism of `x` with memory
/// `[0, w)` for `w <= memory_bound`. Widths whose tables fit in the
/// remaining budget are enumerated exhaustively, larger ones are sampled
/// with a generator seeded by `seed`.
pub fn search_moore_counterexample(x: &Shift, memory_bound: usize, budget: usize, seed: u64) -> Result<MooreSearch> {
    let a = x.alphabet().clone();
    let k = a.len();
    let mut result = MooreSearch {
        found: None,
        examined: 0,
        endomorphisms: 0,
        exhaustive: true,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for width in 1..=memory_bound {
        let entries = k.checked_pow(width as u32).filter(|&e| e <= super::MAX_TABLE_ENTRIES);
        let Some(entries) = entries else {
            result.exhaustive = false;
            break;
        };
        let total = (k as u128).checked_pow(entries as u32);
        let remaining = budget.saturating_sub(result.examined);
        if remaining == 0 {
            result.exhaustive = false;
            break;
        }
        let exhaustive = total.is_some_and(|t| t <= remaining as u128);
        let tries = if exhaustive { total.unwrap() as usize } else { remaining };
        if !exhaustive {
            result.exhaustive = false;
        }
        for i in 0..tries {
            let table: Vec<Symbol> = if exhaustive {
                let mut idx = i;
                let mut t = vec![0; entries];
                for slot in t.iter_mut().rev() {
                    *slot = (idx % k) as Symbol;
                    idx /= k;
                }
                t
            } else {
                (0..entries).map(|_| rng.gen_range(0..k) as Symbol).collect()
            };
            result.examined += 1;
            let t = CellularAutomaton::new(a.clone(), a.clone(), 0, width as i64 - 1, table)?;
            let Ok(image) = endomorphism_image(&t, x) else { continue };
            result.endomorphisms += 1;
            if !surjective_onto(&image, x)?.is_true() {
                continue;
            }
            let pg = PairGraph::new(&t, x)?;
            if !pre_injective_on(&pg).is_true() {
                result.found = Some(t);
                return Ok(result);
            }
        }
    }
    Ok(result)
}
