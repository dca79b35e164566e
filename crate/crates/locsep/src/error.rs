use thiserror::Error;

/// Crate-wide error type. Precondition breaches surface as `Contract`,
/// structural axiom failures as `Validation` (with a machine-readable
/// axiom name and a human-readable witness).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("empty input: a graph needs at least one edge")]
    EmptyInput,
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("cap exceeded: more than {cap} {what}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("validation failed [{axiom}]: {witness}")]
    Validation { axiom: String, witness: String },
    #[error("window insufficient: {0}")]
    WindowInsufficient(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn validation(axiom: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Validation { axiom: axiom.into(), witness: witness.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
