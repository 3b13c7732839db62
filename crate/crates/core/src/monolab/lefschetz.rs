use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::is_prime;

/// Alternating trace sum `sum_k (-1)^k tr_k` over the listed degrees.
pub fn lefschetz_number(traces: &[(usize, BigInt)]) -> Result<BigInt> {
    let mut by_degree = BTreeMap::new();
    for (k, t) in traces {
        if by_degree.insert(*k, t).is_some() {
            return Err(Error::InvalidArgument(format!("degree {k} listed twice")));
        }
    }
    if !by_degree.contains_key(&0) {
        return Err(Error::InvalidArgument("degree 0 trace is required".into()));
    }
    Ok(by_degree.into_iter().fold(
        BigInt::zero(),
        |acc, (k, t)| if k % 2 == 0 { acc + t } else { acc - t },
    ))
}

/// Whether `p` divides the Lefschetz number of the given traces.
pub fn lefschetz_divisibility_check(traces: &[(usize, BigInt)], p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(lefschetz_number(traces)?.is_multiple_of(&BigInt::from(p)))
}

/// Upper bound `floor((mu + trace) / 2)` on the multiplicity of the
/// eigenvalue 1 for a root-of-unity spectrum of size `mu` with real trace.
pub fn eigenvalue_one_bound(mu: u64, trace: i64) -> Result<u64> {
    if trace.unsigned_abs() > mu {
        return Err(Error::InvalidArgument(format!(
            "|trace| = {} exceeds mu = {mu}",
            trace.unsigned_abs()
        )));
    }
    Ok(((mu as i128 + trace as i128) / 2) as u64)
}
