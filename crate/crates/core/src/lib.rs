//! Exact construction of generalized cluster complexes `Δ^m(Φ)` and
//! m-divisible noncrossing partition posets `NC_(m)(γ)` for finite
//! crystallographic root systems, with verification routines tying the two
//! together.
//!
//! All arithmetic is exact. The linear algebra in [`exact`] and the
//! polynomials in [`triangles`] are generic over the scalar type; the
//! aliases below fix the concrete choices used by the rest of the crate.

pub mod cli;
pub mod cluster;
pub mod error;
pub mod exact;
pub mod group;
pub mod noncrossing;
pub mod roots;
pub mod triangles;

pub use error::{Error, Result};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Rational coordinate vector.
pub type QVector = exact::Vector<Rational>;
/// Rational square matrix.
pub type QMatrix = exact::Matrix<Rational>;
/// Bivariate polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = triangles::IntPoly;
