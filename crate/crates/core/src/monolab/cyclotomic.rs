use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use super::UniPoly;
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(mut k: u64) -> u64 {
    let mut phi = k;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            while k.is_multiple_of(p) {
                k /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if k > 1 {
        phi -= phi / k;
    }
    phi
}

fn mobius(mut k: u64) -> i8 {
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

/// The `k`-th cyclotomic polynomial, as `prod_{e | k} (x^e - 1)^{mobius(k/e)}`.
/// Results are cached for the lifetime of the process.
pub fn cyclotomic(k: u64) -> Arc<UniPoly<BigInt>> {
    assert!(k >= 1, "cyclotomic index starts at 1");
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<UniPoly<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&k) {
        return p.clone();
    }
    let binomial = |e: u64| UniPoly::monomial(e as usize).sub(&UniPoly::one());
    let divisors: Vec<u64> = (1..=k).filter(|e| k.is_multiple_of(*e)).collect();
    let mut acc: UniPoly<BigInt> = UniPoly::one();
    for &e in &divisors {
        if mobius(k / e) == 1 {
            acc = acc.mul(&binomial(e));
        }
    }
    for &e in &divisors {
        if mobius(k / e) == -1 {
            let (q, r) = acc.div_rem_monic(&binomial(e)).expect("x^e - 1 is monic");
            debug_assert!(r.is_zero());
            acc = q;
        }
    }
    let out = Arc::new(acc);
    cache.lock().unwrap().insert(k, out.clone());
    out
}

/// Outcome of cyclotomic trial division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    pub quasi_unipotent: bool,
    /// Indices `k` of the factors `Phi_k` found, with multiplicity, ascending.
    pub factors: Vec<u64>,
    /// What remains after removing every cyclotomic factor; `1` when quasi-unipotent.
    pub cofactor: UniPoly<BigInt>,
}

/// Splits off cyclotomic factors by trial division. Every `k` with
/// `phi(k) <= deg q` satisfies `k <= 2 deg(q)^2`, so the search is exhaustive.
pub fn is_quasiunipotent(q: &UniPoly<BigInt>) -> Result<CyclotomicFactorization> {
    if !q.is_monic() {
        return Err(Error::InvalidArgument(format!("{q} is not monic")));
    }
    let deg = q.degree().unwrap() as u64;
    let mut rest = q.clone();
    let mut factors = Vec::new();
    let limit = 2 * deg * deg + 1;
    for k in 1..=limit {
        let remaining = rest.degree().unwrap() as u64;
        if remaining == 0 {
            break;
        }
        if euler_phi(k) > remaining {
            continue;
        }
        let phi_k = cyclotomic(k);
        loop {
            let (quo, rem) = rest.div_rem_monic(&phi_k)?;
            if !rem.is_zero() {
                break;
            }
            rest = quo;
            factors.push(k);
        }
    }
    Ok(CyclotomicFactorization {
        quasi_unipotent: rest.degree() == Some(0),
        factors,
        cofactor: rest,
    })
}

/// Checks that `q` is also the characteristic polynomial of the inverse
/// operator, namely `x^deg q(1/x) / q(0)`.
pub fn charpoly_inverse_invariance(q: &UniPoly<BigInt>) -> Result<bool> {
    let q0 = q.coeff(0);
    if !(q0.is_one() || q0 == -BigInt::one()) {
        return Err(Error::InvalidArgument(format!(
            "constant term {q0} is not a unit"
        )));
    }
    if !is_quasiunipotent(q)?.quasi_unipotent {
        return Err(Error::InvalidArgument(format!(
            "{q} is not a product of cyclotomic polynomials"
        )));
    }
    Ok(q.reversed().scale(&q0) == *q)
}
