use thiserror::Error;

use crate::parser::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring declaration: {0}")]
    InvalidRing(String),

    #[error("polynomials live in different rings ({left} vs {right})")]
    ContextMismatch { left: String, right: String },

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("ideal has no nonzero generators")]
    EmptyIdeal,

    #[error("non-Artinian quotient: no power of {variable} lies in the leading-term ideal")]
    NonArtinian { variable: String },

    #[error("multiplier is not homogeneous (degrees {degrees:?})")]
    InhomogeneousMultiplier { degrees: Vec<u32> },

    #[error("class has components outside the top degree {top}: degrees {degrees:?}")]
    NotTopDegree { top: u32, degrees: Vec<u32> },

    #[error("degenerate point normalization: {0}")]
    DegenerateNormalization(String),

    #[error("unknown graph type {0:?} (expected G1..G7)")]
    UnknownGraphType(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
