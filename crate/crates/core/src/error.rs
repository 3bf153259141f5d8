//! Error type shared by every module of the crate.

use thiserror::Error;

/// Convenient result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or querying a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two elements of different kinds, degrees or Rees matrix contexts were combined.
    #[error("incompatible elements: {0}")]
    IncompatibleElements(String),

    /// An element, permutation or context failed validation on construction.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A weak inverse was requested for an element that has none in this representation.
    #[error("no weak inverse: {0}")]
    NoWeakInverse(String),

    /// `ubar` was asked for a multiplier that leaves the strongly connected component.
    #[error("invalid ubar request: {0}")]
    InvalidUbar(String),

    /// `mu`/`nu` was asked for an element that does not stabilise the class.
    #[error("element does not stabilise the Green's class: {0}")]
    NotInStabiliser(String),

    /// No idempotent exists in the requested H-class.
    #[error("H-class contains no idempotent")]
    NoIdempotent,

    /// An element (or permutation) is not a member of the structure it was looked up in.
    #[error("not a member: {0}")]
    NotMember(String),

    /// Two orbit points do not lie in one strongly connected component.
    #[error("points {0} and {1} lie in different strongly connected components")]
    NotConnected(usize, usize),

    /// An orbit point index is out of range.
    #[error("invalid orbit point index {0}")]
    InvalidIndex(usize),

    /// A subgroup argument is not contained in the group.
    #[error("not a subgroup")]
    NotSubgroup,

    /// A representative element does not match the data it should represent.
    #[error("representative mismatch: {0}")]
    RepresentativeMismatch(String),

    /// A caller-asserted enumeration mode is violated by the input.
    #[error("mode violation: {0}")]
    ModeViolation(String),

    /// A computation exceeded its size cap.
    #[error("too large: {0}")]
    TooLarge(String),

    /// A text input could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
