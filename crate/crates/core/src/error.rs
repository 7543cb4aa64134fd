use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("subset {subset} is not contained in a ground set of size {n}")]
    InvalidSubset { subset: String, n: usize },

    #[error("deleting every element leaves the empty matroid")]
    EmptyMatroid,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("basepoint {0} is a loop")]
    InvalidBasepoint(usize),

    #[error("{0} is not a flat")]
    InvalidFlat(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not a matroid: {0}")]
    NotAMatroid(String),

    #[error("invalid Grassmann necklace: {0}")]
    InvalidNecklace(String),

    #[error("invalid decorated permutation: {0}")]
    InvalidPermutation(String),

    #[error("ground set of size {n} exceeds the cap of {cap}: {what}")]
    TooLarge { n: usize, cap: usize, what: String },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("not a chirotope: {0}")]
    NotAChirotope(String),

    #[error("cannot contract {0}: it is a loop")]
    InvalidContraction(usize),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
