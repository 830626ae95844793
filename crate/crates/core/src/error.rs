use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("step exceeds ambient rank (step {step}, rank {ambient})")]
    StepExceedsRank { step: usize, ambient: usize },

    #[error("ambient rank must be between 1 and {max}, got {ambient}")]
    BadAmbient { ambient: usize, max: usize },

    #[error("row {row} has {found} coordinates, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("invalid place set {places:?} for rank {ambient}")]
    BadPlaces { places: Vec<usize>, ambient: usize },

    #[error("ambient ranks differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("steps differ ({left} vs {right})")]
    StepMismatch { left: usize, right: usize },

    #[error("bracket requires a pseudo-scalar (step {step}, rank {ambient})")]
    NotPseudoScalar { step: usize, ambient: usize },

    #[error("decomposability undefined for zero")]
    ZeroTensor,

    #[error("tensor is not decomposable")]
    NotDecomposable,

    #[error("meet undefined below complementary steps ({r} + {s} < {ambient})")]
    MeetBelowComplementary { r: usize, s: usize, ambient: usize },

    #[error("boundary of an empty point list")]
    EmptyPointList,

    #[error("expected ambient rank {expected}, got {found}")]
    WrongAmbient { expected: usize, found: usize },

    #[error("expected a step-{expected} tensor, got step {found}")]
    WrongStep { expected: usize, found: usize },

    #[error("no finite support point")]
    NoFiniteSupport,

    #[error("slice ({i},{j}) does not split a word of length {len}")]
    SliceLength { i: usize, j: usize, len: usize },

    #[error("unbound letter `{0}`")]
    UnboundLetter(String),

    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),

    #[error("words share letter `{0}`")]
    SharedLetter(String),

    #[error("word `{0}` is dependent")]
    DependentWord(String),

    #[error("dotted letters must be distinct (`{0}` repeats)")]
    RepeatedDottedLetter(String),

    #[error("no cell at row {row}, position {pos}")]
    BadCell { row: usize, pos: usize },

    #[error("`{0}` is not a circuit")]
    NotACircuit(String),

    #[error("ground set of size {size} exceeds the enumeration cap {max}")]
    GroundSetTooLarge { size: usize, max: usize },

    #[error("degenerate column choice")]
    DegenerateColumns,

    #[error("cardinality mismatch: {0}")]
    Cardinality(String),

    #[error("degenerate line `{0}`")]
    DegenerateLine(String),
}

pub type Result<T> = std::result::Result<T, Error>;
