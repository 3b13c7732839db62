use num_traits::Zero;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::Rational;

/// `p^m` decomposition of the degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePower {
    pub p: u64,
    pub m: u32,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Writes `d = p^m` with `p` prime, if possible.
pub fn prime_power_of(d: u64) -> Option<PrimePower> {
    if d < 2 {
        return None;
    }
    let p = (2..=d).find(|k| d.is_multiple_of(*k))?;
    let mut rest = d;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some(PrimePower { p, m })
}

/// A homogeneous polynomial together with the integers the bounds are
/// expressed in.
#[derive(Clone, Debug)]
pub struct ProblemInstance {
    pub f: Polynomial<Rational>,
    /// `f` lives in `n + 1` variables.
    pub n: usize,
    pub d: u64,
    pub prime_power: Option<PrimePower>,
    /// Dimension of the critical locus, filled in by the critical-locus pass.
    pub s: Option<usize>,
}

impl ProblemInstance {
    /// Validates homogeneity and detects a prime-power degree.
    pub fn new(f: Polynomial<Rational>) -> Result<Self> {
        let d = f.homogeneous_degree()?.ok_or(Error::NotHomogeneous)?;
        if d == 0 || f.nvars() == 0 {
            return Err(Error::InvalidArgument(
                "polynomial must be non-constant".into(),
            ));
        }
        Ok(ProblemInstance {
            n: f.nvars() - 1,
            d,
            prime_power: prime_power_of(d),
            f,
            s: None,
        })
    }

    /// Replaces the detected prime power, checking `p^m = d`.
    pub fn with_prime_power(mut self, pp: PrimePower) -> Result<Self> {
        if !is_prime(pp.p) {
            return Err(Error::NotPrime(pp.p));
        }
        if pp.m == 0 || pp.p.checked_pow(pp.m) != Some(self.d) {
            return Err(Error::InvalidArgument(format!(
                "{}^{} does not equal the degree {}",
                pp.p, pp.m, self.d
            )));
        }
        self.prime_power = Some(pp);
        Ok(self)
    }

    pub fn has_constant_term(&self) -> bool {
        !self.f.constant_term().is_zero()
    }
}
