//! Integer rank bounds for the lowest interesting Milnor-fiber cohomology.
//!
//! Every floor is taken with Euclidean division on integer numerators; no
//! rational or floating intermediate appears anywhere in this module.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::polyring::{is_prime, PrimePower};

/// One component's contribution to the prime-power bound.
///
/// Satisfies `mu - epsilon = p * quotient + r` with `0 <= r < p` and
/// `value = floor(mu - r/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundTerm {
    pub mu: u64,
    /// `(-1)^(n + 1 - s)`.
    pub epsilon: i8,
    pub p: u64,
    pub n: usize,
    pub s: usize,
    pub r: u64,
    pub quotient: u64,
    pub value: u64,
}

/// Sum of the generic Milnor numbers.
pub fn naive_bound(mus: &[u64]) -> u64 {
    mus.iter().sum()
}

pub fn component_bound(mu: u64, p: u64, n: usize, s: usize) -> Result<BoundTerm> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if mu == 0 {
        return Err(Error::InvalidArgument(
            "generic Milnor number must be positive".into(),
        ));
    }
    if s > n {
        return Err(Error::InvalidArgument(format!("s = {s} exceeds n = {n}")));
    }
    let epsilon: i8 = if (n + 1 - s).is_multiple_of(2) { 1 } else { -1 };
    let shifted = i128::from(mu) - i128::from(epsilon);
    let (quotient, r) = shifted.div_mod_floor(&i128::from(p));
    let r = r as u64;
    // floor(mu - r/2) = floor((2 mu - r) / 2), with 2 mu - r > 0
    let value = (2 * mu - r) / 2;
    Ok(BoundTerm {
        mu,
        epsilon,
        p,
        n,
        s,
        r,
        quotient: quotient as u64,
        value,
    })
}

/// The second floor form, `floor((mu + p*floor((mu - e)/p) + e) / 2)`.
pub fn component_bound_floor_form(mu: u64, p: u64, epsilon: i8) -> i128 {
    let (mu, p, e) = (i128::from(mu), i128::from(p), i128::from(epsilon));
    (mu + p * (mu - e).div_euclid(p) + e).div_euclid(2)
}

/// Sum of component values; all terms must come from the same `(p, n, s)`.
pub fn total_bound(terms: &[BoundTerm]) -> Result<u64> {
    if let Some(first) = terms.first() {
        if terms
            .iter()
            .any(|t| (t.p, t.n, t.s) != (first.p, first.n, first.s))
        {
            return Err(Error::InvalidArgument(
                "bound terms from different instances".into(),
            ));
        }
    }
    Ok(terms.iter().map(|t| t.value).sum())
}

/// Rank bound for the invariants of one component in the small-Milnor-number
/// cases, or `None` when no case applies.
///
/// Callers must ensure `s >= 1` and `n - s >= 1`.
pub fn special_case_bound(mu: u64, d: u64, n_minus_s: usize) -> Option<u64> {
    let even = n_minus_s.is_multiple_of(2);
    let d_odd = d % 2 == 1;
    match mu {
        1 if d_odd && even => Some(0),
        2 if even && !d.is_multiple_of(3) => Some(0),
        2 if !even && !d.is_multiple_of(6) => Some(0),
        3 if d_odd && even => Some(1),
        3 if d_odd && !even => Some(2),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonreducedReport {
    /// `gcd` of the multiplicities: the number of connected components of the fiber.
    pub components_count: u64,
    pub rank_h0: u64,
    /// `sum (a_k - 1)`.
    pub naive: u64,
    /// Sum of `a_k - 1` over the multiplicities not in the coprime set.
    pub item3_bound: u64,
}

/// Degree-zero analysis for a non-reduced `f = prod g_k^{a_k}`.
///
/// `factor_degrees`, when given, must satisfy `sum a_k deg g_k = d`. Without
/// them, the weaker consistency checks `sum a_k <= d` and `gcd | d` apply.
pub fn nonreduced_analysis(
    mults: &[u64],
    d: u64,
    coprime_set: Option<&[u64]>,
    factor_degrees: Option<&[u64]>,
) -> Result<NonreducedReport> {
    if mults.is_empty() || mults.contains(&0) {
        return Err(Error::InvalidArgument(
            "multiplicities must be positive".into(),
        ));
    }
    let gcd = mults.iter().fold(0u64, |g, &a| g.gcd(&a));
    match factor_degrees {
        Some(degs) => {
            if degs.len() != mults.len() || degs.contains(&0) {
                return Err(Error::InvalidArgument(
                    "need one positive degree per multiplicity".into(),
                ));
            }
            let total: u64 = mults.iter().zip(degs).map(|(a, k)| a * k).sum();
            if total != d {
                return Err(Error::InvalidArgument(format!(
                    "sum of a_k * deg g_k is {total}, not the degree {d}"
                )));
            }
        }
        None => {
            let total: u64 = mults.iter().sum();
            if total > d || !d.is_multiple_of(gcd) {
                return Err(Error::InvalidArgument(format!(
                    "multiplicities {mults:?} are inconsistent with degree {d}"
                )));
            }
        }
    }
    let set = coprime_set.unwrap_or(&[]);
    if let Some(&bad) = set.iter().find(|&&m| m.gcd(&d) != 1) {
        return Err(Error::InvalidArgument(format!(
            "{bad} is not coprime to {d}"
        )));
    }
    let naive = mults.iter().map(|a| a - 1).sum();
    let item3_bound = mults
        .iter()
        .filter(|a| !set.contains(a))
        .map(|a| a - 1)
        .sum();
    Ok(NonreducedReport {
        components_count: gcd,
        rank_h0: gcd - 1,
        naive,
        item3_bound,
    })
}

/// `(d - 1)^(n - s + 1)`.
pub fn le_attaching_bound(d: u64, n: usize, s: usize) -> Result<BigUint> {
    if d < 2 {
        return Err(Error::InvalidArgument("degree must be at least 2".into()));
    }
    if s > n {
        return Err(Error::InvalidArgument(format!("s = {s} exceeds n = {n}")));
    }
    Ok(BigUint::from(d - 1).pow((n - s + 1) as u32))
}

/// Largest multiple of `q` not exceeding `bound`.
pub fn multiple_refinement(bound: u64, q: u64) -> Result<u64> {
    if q == 0 {
        return Err(Error::InvalidArgument("multiple must be at least 1".into()));
    }
    Ok(bound / q * q)
}

/// Every bound available for one instance, side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub s: usize,
    pub d: u64,
    pub prime_power: Option<PrimePower>,
    pub mus: Vec<u64>,
    /// Prime-power terms, one per component; empty when the degree is not a
    /// prime power.
    pub terms: Vec<BoundTerm>,
    /// Small-case bound per component, where one applies.
    pub specials: Vec<Option<u64>>,
    pub naive: u64,
    pub main: Option<u64>,
    pub special: Option<u64>,
    pub le: Option<BigUint>,
    pub refined: Option<u64>,
    pub best: u64,
    pub caveats: Vec<String>,
}

/// Evaluates every applicable bound for the given generic Milnor numbers.
///
/// `multiple_of` is outside knowledge that the rank is divisible by some
/// integer; it enables the refined bound.
pub fn bound_report(
    n: usize,
    s: usize,
    d: u64,
    prime_power: Option<PrimePower>,
    mus: &[u64],
    multiple_of: Option<u64>,
) -> Result<BoundReport> {
    if s > n {
        return Err(Error::InvalidArgument(format!("s = {s} exceeds n = {n}")));
    }
    let mut caveats = Vec::new();
    let naive = naive_bound(mus);

    let terms = match prime_power {
        Some(pp) => mus
            .iter()
            .map(|&mu| component_bound(mu, pp.p, n, s))
            .collect::<Result<Vec<_>>>()?,
        None => {
            caveats.push(format!(
                "degree {d} is not a prime power; main bound disabled"
            ));
            Vec::new()
        }
    };
    let main = prime_power.map(|_| total_bound(&terms)).transpose()?;

    let specials: Vec<Option<u64>> = if s >= 1 && n > s {
        mus.iter()
            .map(|&mu| special_case_bound(mu, d, n - s))
            .collect()
    } else {
        vec![None; mus.len()]
    };
    let special = specials.iter().any(Option::is_some).then(|| {
        specials
            .iter()
            .zip(mus)
            .map(|(sp, &mu)| sp.unwrap_or(mu))
            .sum()
    });

    let le = if d >= 2 {
        Some(le_attaching_bound(d, n, s)?)
    } else {
        None
    };

    let mut best = naive;
    for b in [main, special].into_iter().flatten() {
        best = best.min(b);
    }
    if let Some(le) = &le {
        if *le < BigUint::from(best) {
            best = u64::try_from(le).expect("smaller than a u64");
        }
    }
    let refined = multiple_of
        .map(|q| multiple_refinement(best, q))
        .transpose()?;
    if let Some(r) = refined {
        best = best.min(r);
    }

    Ok(BoundReport {
        n,
        s,
        d,
        prime_power,
        mus: mus.to_vec(),
        terms,
        specials,
        naive,
        main,
        special,
        le,
        refined,
        best,
        caveats,
    })
}
