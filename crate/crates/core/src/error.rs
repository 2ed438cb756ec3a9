use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("structure tensor fails the Leibniz identity at basis triple ({}, {}, {})", .0.0, .0.1, .0.2)]
    NotLeibniz((usize, usize, usize)),

    #[error("algebra `{0}` is not a Lie algebra")]
    NotLie(String),

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subspace is not a subalgebra")]
    NotASubalgebra,

    #[error("representation axiom ({axiom}) fails on the pair ({left}, {right})")]
    AxiomViolation {
        axiom: u8,
        left: String,
        right: String,
    },

    #[error("map is not a Lie homomorphism on the pair ({left}, {right})")]
    NotLieHomomorphism { left: String, right: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("representations act on different algebras")]
    AlgebraMismatch,

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("parse error at {locus}: {message}")]
    Parse { locus: String, message: String },

    #[error("duplicate bracket entry for ({0}, {1})")]
    DuplicateBracket(String, String),

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },

    /// A check that the mathematics guarantees has failed. Indicates a bug
    /// rather than bad input.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
