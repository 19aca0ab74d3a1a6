//! Crate-wide error type.

/// Errors produced by growth-function algebra, model construction, scenario
/// parsing and the measurement harness.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty growth function")]
    EmptyGrowthFn,

    #[error("evaluation below domain: N = {0} (minimum is 2)")]
    EvalBelowDomain(u64),

    #[error("invalid growth term: {0}")]
    InvalidTerm(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown key `{0}`")]
    UnknownKey(String),

    #[error("missing key `{0}`")]
    MissingKey(String),

    #[error("duplicate key `{0}`")]
    DuplicateKey(String),

    #[error("invalid value for `{key}`: {reason}")]
    InvalidValue { key: String, reason: String },

    #[error("unknown complexity model `{0}`")]
    UnknownModel(String),

    #[error("unknown DFT implementation `{0}`")]
    UnknownImpl(String),

    #[error("radix-2 requires power-of-two length, got {0}")]
    NotPowerOfTwo(u64),

    #[error("N = {n} is outside the domain of complexity model `{model}`")]
    UnsupportedSize { model: String, n: u64 },

    #[error("invalid waveform: {0}")]
    InvalidWaveform(String),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("invalid sweep range: {0}")]
    InvalidRange(String),

    #[error("range too narrow to discriminate models")]
    RangeTooNarrow,

    #[error("not enough samples: {0}")]
    InsufficientSamples(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
