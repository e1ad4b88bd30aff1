use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("insufficient prefix: need {needed} stored digits, have {available}")]
    InsufficientPrefix { needed: usize, available: usize },

    #[error("digit {digit} outside alphabet {{1..{m}}}")]
    InvalidDigit { digit: u32, m: u32 },

    #[error("alphabet size {0} unsupported (need 2 <= m <= 255)")]
    InvalidAlphabet(u32),

    #[error("sequences differ in alphabet or side")]
    Incompatible,

    #[error("sequence leaves the pair subset at position {position}")]
    NotInSubset { position: usize },

    #[error("gap list exhausted: N_{n} requested, {len} values given")]
    GapExhausted { n: usize, len: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("contraction ratio {0} not in (0, 1)")]
    InvalidRatio(f64),

    #[error("images of maps {i} and {j} intersect (no strong separation)")]
    Overlap { i: usize, j: usize },

    #[error("image of map {0} leaves the domain box")]
    NotContained(usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("orthogonal part must be a signed permutation matrix")]
    InvalidOrthogonal,

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("point {0:?} lies in an undefined region of the map")]
    UndefinedRegion(Vec<f64>),

    #[error("empty input")]
    EmptyInput,

    #[error("degenerate fit: {usable} usable ladder points, need at least 4")]
    DegenerateFit { usable: usize },

    #[error("too few checkpoints: {0}, need at least 3 of each kind")]
    TooFewCheckpoints(usize),
}
