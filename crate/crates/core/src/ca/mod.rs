mod automaton;
mod checks;
mod image;
mod pairs;

pub use automaton::{random_ca, CellularAutomaton, DEFAULT_RANDOM_WIDTH, MAX_TABLE_ENTRIES};
pub use checks::{
    check_entropy_preservation, check_myhill, counting_shadow, endomorphism_image, search_moore_counterexample,
    EntropyPreservation, MooreSearch, MyhillReport,
};
pub use image::{image_presentation, is_surjective, verify_image};
pub use pairs::{is_injective, is_pre_injective, PairEdge, PairGraph, PointPair};

pub(crate) use checks::{entropy_report, myhill_with_image};
