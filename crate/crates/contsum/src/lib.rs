//! Exact continuant algebra over Euclidean rings with an
//! anti-automorphism, and the sums-of-squares algorithms built on it.
//!
//! The crate is organized bottom-up:
//!
//! - [`ring`]: the supported rings (integers, prime fields, rationals,
//!   polynomials over a field, Gaussian and Eisenstein integers,
//!   Z[sqrt(3)], and 2x2 integer matrices), with exact arithmetic,
//!   conjugation, Euclidean division, and a plain-text element syntax;
//! - [`continuants`]: continuants of sequences from any of those rings,
//!   evaluated three independent ways, plus the rescaling and Bezout
//!   identities that the algorithms rely on;
//! - [`euclid`]: instrumented Euclidean algorithm runs that keep their
//!   quotient and remainder trails, with early stopping and exact
//!   reconstruction of the inputs from any prefix of a trail;
//! - [`two_squares`]: two-square decompositions of primes and of
//!   polynomials over fields where -1 is not a square, including the
//!   gcd-in-an-extension alternative and unit absorption over the
//!   rationals;
//! - [`forms`]: descent chains in the quadratic rings and the
//!   four-variable forms they produce — four squares over Z[i], the
//!   Eisenstein form x^2 - xy + y^2 + z^2 - zu + u^2 and its companion
//!   x^2 + 3y^2 + z^2 + 3u^2, and the indefinite form
//!   x^2 - 3y^2 + z^2 - 3u^2 over Z[sqrt(3)].
//!
//! All arithmetic is exact: big integers, big rationals, and dense
//! polynomials, never floating point.

mod arith;
mod error;

pub mod continuants;
pub mod euclid;
pub mod forms;
pub mod ring;
pub mod two_squares;

pub use error::{Error, Result};
