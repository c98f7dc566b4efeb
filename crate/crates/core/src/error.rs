/// Errors raised while reading one of the text formats.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("input has no content lines")]
    Empty,
    #[error("line {line}: cannot parse `{token}`")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected {expected} fields, found {found}")]
    FieldCount { line: usize, expected: usize, found: usize },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("{0}")]
    Invalid(String),
}
