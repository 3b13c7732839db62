//! Exact computations around the lowest interesting Milnor-fiber cohomology of
//! a homogeneous polynomial.
//!
//! * [`polyring`]: sparse polynomials over any [`Field`], text parsing.
//! * [`localalg`]: Buchberger and Mora bases, ideal dimension, Milnor numbers.
//! * [`critlocus`]: critical locus, coordinate components, generic Milnor numbers.
//! * [`bounds`]: integer rank bounds built from the generic Milnor numbers.
//! * [`monolab`]: integer-matrix checks of the monodromy facts behind the bounds.
//!
//! Polynomial code is generic over the coefficient field; the aliases below
//! fix the concrete choices used by the pipeline.

pub mod bounds;
pub mod critlocus;
pub mod error;
pub mod localalg;
pub mod monolab;
pub mod polyring;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Field, Fp};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

/// Polynomials with rational coefficients; the default for all geometry.
pub type QPolynomial = polyring::Polynomial<Rational>;

/// The prime `2^31 - 1`, used for modular cross-checks.
pub const LARGE_PRIME: u64 = 2_147_483_647;

/// Coefficients modulo [`LARGE_PRIME`].
pub type Fbig = Fp<LARGE_PRIME>;

/// Polynomials over `Z / (2^31 - 1)`.
pub type FpPolynomial = polyring::Polynomial<Fbig>;

/// Square matrices of arbitrary-precision integers.
pub type IntMatrix = monolab::Matrix<num_bigint::BigInt>;

/// Dense univariate polynomials with arbitrary-precision integer coefficients.
pub type IntPolynomial = monolab::UniPoly<num_bigint::BigInt>;
