use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("forbidden words must be nonempty")]
    EmptyForbiddenWord,

    #[error("subset construction exceeded the state cap of {cap}")]
    StateBlowup { cap: usize },

    #[error("shift has no synchronizing word (input is not irreducible)")]
    NoSyncWord,

    #[error("shift is not topologically mixing, so it is not strongly irreducible")]
    NotMixing,

    #[error("no gap bound at most {cap} verifies")]
    CapExceeded { cap: usize },

    #[error("word {0} is not in the language of the shift")]
    WordNotInLanguage(String),

    #[error("parts at {first} and {second} are separated by {distance}, need more than {required}")]
    SeparationTooSmall {
        first: i64,
        second: i64,
        distance: i64,
        required: usize,
    },

    #[error("glue request parts overlap or have mismatched lengths: {0}")]
    InvalidGlueRequest(String),

    #[error("no fill word of length {len} joins {left} and {right}")]
    NoGapWitness { left: String, right: String, len: usize },

    #[error("window [0, {n}) is smaller than the tile size {k}")]
    WindowTooSmall { n: usize, k: usize },

    #[error("invalid tiling parameters: {0}")]
    InvalidTiling(String),

    #[error("second shift is not a subshift of the first; witness {0}")]
    NotSubshift(String),

    #[error("shift has no strong irreducibility certificate")]
    CertificateMissing,

    #[error("word of length {len} is shorter than the memory width {width}")]
    WordTooShort { len: usize, width: usize },

    #[error("rule table with {entries} entries exceeds the cap of {cap}")]
    TableTooLarge { entries: usize, cap: usize },

    #[error("invalid rule table: {0}")]
    InvalidRule(String),

    #[error("image is not contained in the target shift; witness {0}")]
    NotIntoTarget(String),

    #[error("automaton does not map the shift into itself; witness {0}")]
    NotEndomorphism(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown fixture {0}")]
    UnknownFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
