use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("family parameters need n >= 1 (got an empty k list)")]
    EmptyFamily,
    #[error("n = {n} does not match the {len} values given for k")]
    FamilySizeMismatch { n: usize, len: usize },
    #[error("duplicate generator name {0:?}")]
    DuplicateGenerator(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator index {index} out of range for an alphabet of {size}")]
    GeneratorOutOfRange { index: u32, size: usize },
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("substitution has {got} images but the source presentation has {expected} generators")]
    SubstitutionSize { expected: usize, got: usize },
    #[error("proof replay failed at step {step}: {reason}")]
    Replay { step: usize, reason: String },
    #[error("coset table is not complete")]
    IncompleteTable,
    #[error("free-group identity {0} failed to reduce")]
    FreeIdentity(String),
    #[error("invalid index {i} for n = {n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("identity {identity} {reason}")]
    InstanceShape { identity: String, reason: String },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
