//! Images of shifts under sliding-block codes.

use std::collections::BTreeSet;

use crate::alphabet::{Symbol, Word};
use crate::ca::CellularAutomaton;
use crate::decision::Decision;
use crate::error::{Error, Result};
use crate::graph::{Edge, LabeledGraph};
use crate::recode::{block_graph, BlockGraph};
use crate::shift::Shift;

/// The presentation of `x` whose edges carry the input blocks the automaton
/// reads, together with the image letter of each edge.
#[derive(Debug, Clone)]
pub(crate) struct CodeGraph {
    pub blocks: BlockGraph,
    pub images: Vec<Symbol>,
}

impl CodeGraph {
    pub fn new(t: &CellularAutomaton, x: &Shift) -> Result<Self> {
        if t.source() != x.alphabet() {
            return Err(Error::AlphabetMismatch(format!(
                "automaton reads {}, shift is over {}",
                t.source(),
                x.alphabet()
            )));
        }
        let blocks = block_graph(x.essential(), t.width());
        let images = blocks.edges.iter().map(|e| t.rule(&e.word)).collect();
        Ok(CodeGraph { blocks, images })
    }

    pub fn vertex_count(&self) -> usize {
        self.blocks.vertex_count()
    }

    /// First letter of the input block of edge `e`.
    pub fn letter(&self, e: usize) -> Symbol {
        self.blocks.edges[e].word[0]
    }
}

/// A presentation of `τ(X)`: the block presentation of `x` relabeled by the
/// rule, then essentialized and determinized.
pub fn image_presentation(t: &CellularAutomaton, x: &Shift) -> Result<Shift> {
    let code = CodeGraph::new(t, x)?;
    image_of_code(t, &code)
}

pub(crate) fn image_of_code(t: &CellularAutomaton, code: &CodeGraph) -> Result<Shift> {
    let edges = code
        .blocks
        .edges
        .iter()
        .zip(&code.images)
        .map(|(e, &label)| Edge {
            src: e.src,
            dst: e.dst,
            label,
        })
        .collect();
    let g = LabeledGraph::with_vertex_count(t.target().clone(), code.vertex_count(), edges)?;
    Shift::from_graph(g)
}

/// Compares the image language with brute-force images of blocks for every
/// length up to `n_max`. Returns the first length and word where they
/// disagree.
pub fn verify_image(t: &CellularAutomaton, x: &Shift, image: &Shift, n_max: usize) -> Option<(usize, Word)> {
    let pad = t.width() - 1;
    for n in 1..=n_max {
        let brute: BTreeSet<Vec<Symbol>> = x.blocks(n + pad).iter().map(|w| t.image_letters(w.letters())).collect();
        let computed: BTreeSet<Vec<Symbol>> = image.blocks(n).into_iter().map(Word::into_letters).collect();
        if let Some(w) = brute.symmetric_difference(&computed).next() {
            return Some((n, Word::new(w.clone())));
        }
    }
    None
}

/// Surjectivity of `t: x -> y`. A `false` verdict carries a shortest word of
/// `y` with no preimage (a Garden-of-Eden word). Fails with
/// [`Error::NotIntoTarget`] when the image is not contained in `y`.
pub fn is_surjective(t: &CellularAutomaton, x: &Shift, y: &Shift) -> Result<Decision<Word>> {
    let image = image_presentation(t, x)?;
    surjective_onto(&image, y)
}

pub(crate) fn surjective_onto(image: &Shift, y: &Shift) -> Result<Decision<Word>> {
    if image.alphabet() != y.alphabet() {
        return Err(Error::AlphabetMismatch(format!(
            "automaton writes {}, target is over {}",
            image.alphabet(),
            y.alphabet()
        )));
    }
    if let Some(w) = y.inclusion_witness(image)? {
        return Err(Error::NotIntoTarget(y.format_word(&w)));
    }
    Ok(match image.inclusion_witness(y)? {
        None => Decision::yes(),
        Some(w) => Decision::no(Some(w)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::shift::equal_shifts;

    #[test]
    fn images() {
        let full = fixtures::full2();
        let img = image_presentation(&fixtures::xor_ca(), &full).unwrap();
        assert!(equal_shifts(&img, &full).unwrap().is_true());
        assert_eq!(verify_image(&fixtures::xor_ca(), &full, &img, 12), None);

        let img = image_presentation(&fixtures::const0_ca(), &full).unwrap();
        assert_eq!(img.blocks(5).len(), 1);
        assert_eq!(img.format_word(&img.blocks(3)[0]), "000");

        let g = fixtures::golden();
        let img = image_presentation(&fixtures::identity_ca(), &g).unwrap();
        assert!(equal_shifts(&img, &g).unwrap().is_true());
    }

    #[test]
    fn surjectivity_examples() {
        let full = fixtures::full2();
        assert!(is_surjective(&fixtures::xor_ca(), &full, &full).unwrap().is_true());
        let tp = fixtures::twopoint();
        let d = is_surjective(&fixtures::collapse_ca(), &tp, &tp).unwrap();
        assert!(d.verdict.is_false());
        assert_eq!(tp.format_word(&d.witness.unwrap()), "1");
        let e = fixtures::even();
        assert!(is_surjective(&fixtures::identity_ca(), &e, &e).unwrap().is_true());
    }

    #[test]
    fn image_outside_target_is_an_error() {
        let g = fixtures::golden();
        let err = is_surjective(&fixtures::xor_ca(), &fixtures::full2(), &g).unwrap_err();
        assert_eq!(err, Error::NotIntoTarget("11".into()));
    }
}
