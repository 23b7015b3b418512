use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("window length must be at least 1")]
    ZeroWindow,

    #[error("match of length {length} at subfield {index}, offset {offset} lies outside the subfield list")]
    MatchOutOfRange {
        index: usize,
        offset: usize,
        length: usize,
    },

    #[error("weight table has no entries")]
    EmptyWeightTable,

    #[error("line {line}: {reason}")]
    MalformedWeightLine { line: usize, reason: String },

    #[error("invalid weight entry {token:?}: {reason}")]
    InvalidWeightEntry { token: String, reason: String },

    #[error("trials must be at least 1")]
    ZeroTrials,

    #[error("top-k must be at least 1")]
    ZeroTopK,

    #[error("threshold {0} is outside [0, 1]")]
    ThresholdOutOfRange(f64),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
