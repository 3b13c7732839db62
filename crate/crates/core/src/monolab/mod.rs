//! Integer-matrix laboratory for monodromy representatives.
//!
//! Nothing here computes the monodromy of a given polynomial. The functions
//! check, on concrete integer matrices, the facts the rank bounds rest on:
//! characteristic polynomials are products of cyclotomic factors and are
//! stable under inversion, `char(A)` and `char(A^(p^m))` agree mod `p`, and
//! the internal monodromy is the `d`-th power of the inverse.

mod cyclotomic;
mod lefschetz;
mod matrix;
mod unipoly;

pub use cyclotomic::{
    charpoly_inverse_invariance, cyclotomic, euler_phi, is_quasiunipotent, CyclotomicFactorization,
};
pub use lefschetz::{eigenvalue_one_bound, lefschetz_divisibility_check, lefschetz_number};
pub use matrix::{Matrix, MatrixRole};
pub use unipoly::UniPoly;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::is_prime;
use crate::scalar::reduce_mod;

/// Both sides of the mod-`p` comparison, reduced into `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerIdentity {
    pub char_a: UniPoly<BigInt>,
    pub char_power: UniPoly<BigInt>,
}

impl PowerIdentity {
    pub fn holds(&self) -> bool {
        self.char_a == self.char_power
    }
}

/// Characteristic polynomials of `A` and of `A^(p^m)`, both reduced mod `p`.
/// The power is formed with entries reduced mod `p` throughout.
pub fn charpoly_mod_p_power(a: &Matrix<BigInt>, p: u64, m: u32) -> Result<PowerIdentity> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidArgument(
            "the exponent m must be positive".into(),
        ));
    }
    let e = p
        .checked_pow(m)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{m} does not fit in 64 bits")))?;
    let modulus = BigInt::from(p);
    let power = a.pow_with(e, |v| reduce_mod(&v, &modulus));
    Ok(PowerIdentity {
        char_a: a.charpoly_exact().reduce_mod(p),
        char_power: power.charpoly_exact().reduce_mod(p),
    })
}

/// Whether `char(A) = char(A^(p^m))` holds mod `p`.
pub fn charpoly_mod_p_power_identity(a: &Matrix<BigInt>, p: u64, m: u32) -> Result<bool> {
    Ok(charpoly_mod_p_power(a, p, m)?.holds())
}

/// Internal monodromy `Q = (T^-1)^d` of a Milnor monodromy representative.
pub fn internal_from_milnor(t: &Matrix<BigInt>, d: u64) -> Result<Matrix<BigInt>> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be positive".into()));
    }
    Ok(t.unimodular_inverse()?
        .pow(d)
        .with_role(MatrixRole::InternalQ))
}
