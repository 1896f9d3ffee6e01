//! Symbolic dynamics over ℤ: subshifts of finite type and sofic subshifts,
//! strong irreducibility with explicit gap certificates, topological entropy,
//! and exact injectivity, pre-injectivity and surjectivity decisions for
//! cellular automata.

pub mod alphabet;
mod bitset;
pub mod ca;
pub mod corpus;
pub mod decision;
pub mod dfa;
pub mod entropy;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod parse;
pub mod props;
mod recode;
pub mod sft;
pub mod shift;
pub mod tiling;
pub mod window;

pub use alphabet::{Alphabet, Symbol, Word};
pub use ca::CellularAutomaton;
pub use ca::{
    check_entropy_preservation, check_myhill, image_presentation, is_injective, is_pre_injective, is_surjective,
    random_ca, search_moore_counterexample, PairGraph, PointPair,
};
pub use decision::{Decision, Scope, Verdict};
pub use entropy::{block_count, entropy_blocks, entropy_compare, entropy_spectral, EntropyEstimate};
pub use error::{Error, Result};
pub use graph::{essentialize, Edge, LabeledGraph};
pub use props::{
    gap_witness, glue, is_irreducible, is_mixing, is_strongly_irreducible, minimal_gap, si_certificate,
    synchronizing_word, GluePart, GlueRequest, MixingReport, SiCertificate, SyncWitness,
};
pub use sft::{sft_to_graph, SftSpec};
pub use shift::{determinize_minimize, equal_shifts, higher_block, Recoding, Shift, ShiftKind};
pub use tiling::{pattern_check, tiling_density, tiling_z, FolnerWindow, TilingSpec};
pub use window::{ConfigurationWindow, Interval};
