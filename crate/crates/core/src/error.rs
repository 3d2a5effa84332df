use thiserror::Error;

/// Problems reading the instance or labeling text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: expected `key = value`")]
    MissingEquals { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: `{key}` given twice")]
    DuplicateKey { line: usize, key: String },
    #[error("line {line}: cannot parse `{value}`")]
    BadValue { line: usize, value: String },
    #[error("missing `{0}`")]
    MissingKey(&'static str),
    #[error("line {line}: {message}")]
    BadRecord { line: usize, message: String },
}
