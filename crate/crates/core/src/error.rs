use std::fmt;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("state width {n_bits} outside supported range [{min}, {max}]")]
    Width { n_bits: u32, min: u32, max: u32 },

    #[error("vector of images has {actual} entries, expected {expected}")]
    Length { expected: usize, actual: usize },

    #[error("image {value} at position {position} exceeds 2^N - 1 = {max}")]
    ImageOutOfRange { position: usize, value: u32, max: u32 },

    #[error("invalid mutation (position {position}, bit {bit}): {reason}")]
    Mutation {
        position: usize,
        bit: u32,
        reason: String,
    },

    #[error("search produced more than {cap} candidates")]
    CandidateCap { cap: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("scripted source exhausted after {consumed} values")]
    ScriptExhausted { consumed: usize },

    #[error("scripted value {value} outside [{min}, {max}]")]
    ScriptValue { value: u64, min: u64, max: u64 },

    #[error("xorshift seed must be nonzero")]
    ZeroSeed,

    #[error("{test} needs at least {minimum} bits, got {actual}")]
    StreamTooShort {
        test: &'static str,
        minimum: usize,
        actual: usize,
    },

    #[error("chi-square needs at least {minimum} samples, got {actual}")]
    TooFewSamples { minimum: usize, actual: usize },

    #[error("state {value} does not fit in {n_bits} bits")]
    StateOutOfRange { value: u64, n_bits: u32 },

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("{}:{source}", path.display())]
    ParseFile {
        path: std::path::PathBuf,
        source: ParseError,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Text-format error with a 1-based line/column position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}
