//! Coefficient fields.
//!
//! Every polynomial routine in this crate is generic over [`Field`]. Two
//! implementations ship: arbitrary-precision rationals (the default for all
//! geometry) and the prime fields [`Fp`], which are used to cross-check local
//! algebra computations modulo a large prime.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

/// Exact coefficient field.
pub trait Field:
    Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// Image of an integer under the canonical map `Z -> K`.
    fn from_bigint(n: &BigInt) -> Self;

    /// Image of a rational; `None` when the denominator vanishes in `K`.
    fn from_rational(q: &BigRational) -> Option<Self> {
        let den = Self::from_bigint(q.denom());
        if den.is_zero() {
            None
        } else {
            Some(Self::from_bigint(q.numer()) / den)
        }
    }

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// Rescales a coefficient vector (a nonzero polynomial, leading term first)
    /// to a canonical representative of its line.
    ///
    /// The default makes the leading coefficient one.
    fn normalize(coeffs: &mut [Self]) {
        let Some(lead) = coeffs.first().cloned() else {
            return;
        };
        if lead.is_one() {
            return;
        }
        for c in coeffs.iter_mut() {
            *c = c.clone() / lead.clone();
        }
    }
}

impl Field for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }

    /// Clears denominators and removes the content, leaving a primitive
    /// integer vector with a positive leading entry.
    fn normalize(coeffs: &mut [Self]) {
        if coeffs.is_empty() {
            return;
        }
        let mut den = BigInt::one();
        for c in coeffs.iter() {
            den = den.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| {
                let v = c.numer() * (&den / c.denom());
                content = content.gcd(&v);
                v
            })
            .collect();
        if ints[0].sign() == Sign::Minus {
            content = -content;
        }
        for (c, v) in coeffs.iter_mut().zip(ints) {
            *c = BigRational::from_integer(v / &content);
        }
    }
}

/// Element of the prime field `Z/PZ`.
///
/// `P` must be a prime below `2^32` so that products fit in `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in prime field")
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        // Every nonzero element is a unit, so the remainder is always zero.
        let _ = rhs.inverse().expect("division by zero in prime field");
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        u64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn from_bigint(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(P));
        let (_, digits) = r.to_u64_digits();
        Fp(digits.first().copied().unwrap_or(0))
    }
}

/// Reduces an integer into `[0, modulus)`.
pub fn reduce_mod(n: &BigInt, modulus: &BigInt) -> BigInt {
    let r = n % modulus;
    if r.is_negative() {
        r + modulus
    } else {
        r
    }
}
