//! Exact graded-ring toolkit: sparse rational polynomials, Gröbner bases,
//! Artinian quotient rings, and the cohomology rings of the two components
//! of the genus-2 spin moduli space.

pub mod cli;
pub mod error;
pub mod groebner;
pub mod parser;
pub mod poly;
pub mod quotient;
pub mod spindomain;

pub use error::{Error, Result};
pub use groebner::{buchberger, is_member, normal_form, GroebnerBasis, Ideal};
pub use parser::{parse_polynomial, parse_ring_file, ParseError, RingFile};
pub use poly::{rat, Degree, Monomial, MonomialOrder, Polynomial, Rational, RingContext};
pub use quotient::{rank, PointNormalization, QuotientRing};
