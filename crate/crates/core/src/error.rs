use thiserror::Error;

use crate::ring::{Axiom, Elem};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} would have order {size}, which exceeds the size cap {cap}")]
    CapExceeded {
        what: String,
        size: u128,
        cap: usize,
    },

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("axiom violated: {axiom} (witness {witness:?})")]
    AxiomViolation { axiom: Axiom, witness: Vec<Elem> },

    #[error("not a two-sided ideal: {0}")]
    NotAnIdeal(String),

    #[error("not a ring homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("invalid Peirce split: {0}")]
    InvalidSplit(String),

    #[error("operation is not defined on the trivial ring")]
    TrivialRing,

    #[error("isomorphism search is capped at order {cap}, got order {order}")]
    IsoCapExceeded { order: usize, cap: usize },

    #[error("element {element} is out of range for a ring of order {order}")]
    ElementOutOfRange { element: Elem, order: usize },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown result id `{0}`")]
    UnknownResult(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
