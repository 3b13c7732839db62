//! Exact sparse multivariate polynomials.

mod instance;
mod monomial;
mod order;
mod parse;
mod polynomial;

pub use instance::{is_prime, prime_power_of, PrimePower, ProblemInstance};
pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, Substitution};
