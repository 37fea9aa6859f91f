use std::path::PathBuf;

/// Errors produced by loading, supervision, training and evaluation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("duplicate document for ({subject}, {predicate})")]
    DuplicateDocument { subject: String, predicate: String },

    #[error("no knowledge-base count for ({subject}, {predicate})")]
    MissingCount { subject: String, predicate: String },

    #[error("token index {index} out of range for sentence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("label sequence of length {labels} does not match {tokens} tokens")]
    LengthMismatch { labels: usize, tokens: usize },

    #[error("CARD label at position {position}, which is not a candidate number")]
    NonCandidateLabel { position: usize },

    #[error("training dataset is empty")]
    EmptyDataset,

    #[error("training dataset has no CARD labels across {sequences} sequences; the model would never predict a count")]
    NoPositiveLabels { sequences: usize },

    #[error("model format version mismatch: file is `{found}`, expected `{expected}`")]
    ModelVersion { found: String, expected: String },

    #[error("invalid model file at line {line}: {message}")]
    ModelFormat { line: usize, message: String },

    #[error("prediction for ({subject}, {predicate}) has no gold count")]
    UnknownPrediction { subject: String, predicate: String },

    #[error("duplicate prediction for ({subject}, {predicate})")]
    DuplicatePrediction { subject: String, predicate: String },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}
