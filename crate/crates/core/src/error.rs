use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid universe: {0}")]
    InvalidUniverse(String),

    #[error("class {index} is empty")]
    EmptyClass { index: usize },

    #[error("coalition {0} appears more than once")]
    DuplicateCoalition(String),

    #[error("coalition {0} is not placed in any class")]
    MissingCoalition(String),

    #[error("coalitions must be nonempty")]
    EmptyCoalition,

    #[error("{0} is outside the universe")]
    OutOfUniverse(String),

    #[error("rankings are defined over different universes ({left} vs {right} individuals)")]
    UniverseMismatch { left: usize, right: usize },

    #[error("invalid slide: {0}")]
    InvalidMove(String),

    #[error("unknown rule `{0}`")]
    UnknownRule(String),

    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),

    #[error("universe of {n} individuals is too large for {what} (maximum {max})")]
    UniverseTooLarge {
        n: usize,
        max: usize,
        what: &'static str,
    },

    #[error("universe of {n} individuals is too small for {what} (minimum {min})")]
    UniverseTooSmall {
        n: usize,
        min: usize,
        what: &'static str,
    },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}
