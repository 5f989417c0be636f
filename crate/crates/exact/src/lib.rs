//! Exact arithmetic over real algebraic numbers.
//!
//! Values are pairs (square-free integer polynomial, isolating rational
//! interval). Arithmetic goes through resultants with square-free reduction;
//! comparisons and signs are exact (interval refinement + exact zero test).
//! A small parser handles the scalar-expression grammar used by the rest of
//! the workspace.

pub mod parse;
pub mod poly;
pub mod real;
pub mod resultant;
pub mod sturm;

pub use parse::{parse_scalar, ParseError, ParseErrorKind};
pub use poly::{Int, IntPoly, Rational};
pub use real::{isolate_roots_in, isolating_intervals, AlgebraicReal, Endpoint, RealError};

use num_bigint::BigInt;

/// Convenience: rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience: exact value from an integer.
pub fn int(n: i64) -> AlgebraicReal {
    AlgebraicReal::from_int(n)
}
