use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set size {0} is outside the supported range 1..=63")]
    GroundSetSize(usize),

    #[error("vertex {vertex} is outside the ground set [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph edge {{{0}, {1}}} is a loop")]
    Loop(usize, usize),

    #[error("operation is undefined on the void complex")]
    VoidComplex,

    #[error("ground set of size {n} exceeds the oracle bound of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("invalid resolution degrees: {0}")]
    InvalidDegrees(String),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("Reisner criterion ({reisner}) and dual-linearity criterion ({dual_linear}) disagree")]
    CriteriaDisagree { reisner: bool, dual_linear: bool },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
