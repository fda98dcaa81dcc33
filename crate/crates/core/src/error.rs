//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division left a nonzero remainder.
    #[error("not divisible: remainder is nonzero")]
    NonDivisible,

    /// A descent set was required to be contained in a given index set.
    #[error("descent set {found:?} is not contained in {required:?}")]
    DescentsNotContained {
        found: Vec<usize>,
        required: Vec<usize>,
    },

    /// The cocharge condition (leftmost h has an h-1 strictly above) fails.
    #[error("not a cocharge tableau")]
    NotCocharge,

    /// The box is not an addable corner of the shape.
    #[error("({0},{1}) is not an external corner")]
    NotExternalCorner(usize, usize),

    /// Element already present where a new one was expected.
    #[error("{0} is already in the set")]
    AlreadyInSet(usize),

    /// A span was acted on by a permutation that maps it outside itself.
    #[error("span is not invariant under the permutation")]
    NotInvariant,

    /// The index set overflows the ambient bound and the policy is to reject.
    #[error("index set {set:?} does not fit inside {{1..{max}}}")]
    SetOutOfRange { set: Vec<usize>, max: usize },

    /// Malformed input data.
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
