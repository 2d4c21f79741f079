use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("expected a ring with {expected} variables, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("operation undefined for the unit ideal")]
    UnitIdeal,
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("ideal is not primary")]
    NotPrimary,
    #[error("component is not irreducible (generators must be pure powers of distinct variables)")]
    NotIrreducible,
    #[error("associated primes are comparable: {0}")]
    ComparablePrimes(String),
    #[error("no qualifying witness: {0}")]
    NoQualifyingWitness(String),
    #[error("graph error: {0}")]
    Graph(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("{0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// True for input errors that come from malformed text.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::UnknownVariable(_))
    }
}
