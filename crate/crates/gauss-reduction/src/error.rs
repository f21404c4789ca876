//! Error type shared across the crate.

use crate::gauss::SpectrumKind;
use crate::lattice::Int;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("matrix is not in GL(2,Z): determinant is {det}, expected +1 or -1")]
    NotUnimodular { det: Int },

    #[error("wrong spectral kind: operation requires {expected}, matrix is {found}")]
    WrongSpectralKind {
        expected: SpectrumKind,
        found: SpectrumKind,
    },

    #[error("word is empty")]
    EmptyWord,

    #[error("word is not reduced: element {element} is not positive")]
    NotReducedWord { element: Int },

    #[error("continued fraction expansion requires a non-negative rational, got {value}")]
    NegativeRational { value: String },

    #[error("angle precondition violated: vector {which} is zero")]
    ZeroVector { which: &'static str },

    #[error(
        "angle precondition violated: vector {which} = {vector} is proportional to (1,0) or (0,1)"
    )]
    AxisProportional { which: &'static str, vector: String },

    #[error("angle precondition violated: vectors {a} and {b} are collinear")]
    CollinearVectors { a: String, b: String },

    #[error("segment endpoints coincide at {point}")]
    CoincidingPoints { point: String },

    #[error("integer sine is undefined: edge at {point} has zero length")]
    ZeroLengthEdge { point: String },

    #[error("sail enumeration guard exceeded: coordinates must satisfy |x|,|y| <= {limit}")]
    GuardExceeded { limit: i64 },

    #[error(
        "LLS period extraction failed after trying {tried} seed points \
         (difference undefined or halves unequal for every candidate)"
    )]
    PeriodSeedsExhausted { tried: usize },

    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),
}

impl Error {
    /// Process exit code for the CLI: 2 parse (handled by the argument parser),
    /// 3 not unimodular, 4 wrong spectral kind, 5 angle/geometry precondition,
    /// 6 internal assertion.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotUnimodular { .. } => 3,
            Error::WrongSpectralKind { .. } => 4,
            Error::ZeroVector { .. }
            | Error::AxisProportional { .. }
            | Error::CollinearVectors { .. }
            | Error::CoincidingPoints { .. }
            | Error::ZeroLengthEdge { .. }
            | Error::GuardExceeded { .. } => 5,
            Error::PeriodSeedsExhausted { .. } | Error::InternalAssertion(_) => 6,
            Error::EmptyWord | Error::NotReducedWord { .. } | Error::NegativeRational { .. } => 2,
        }
    }
}
