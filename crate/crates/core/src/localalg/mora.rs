//! Local standard bases via Mora's tangent cone algorithm.
//!
//! Everything here runs under [`MonomialOrder::NegDegRevLex`], where the
//! leading monomial of a polynomial is its lowest-degree part. The weak normal
//! form keeps a growing reduction set `T` and always reduces by an element of
//! least ecart, adding the current remainder to `T` whenever that would
//! increase the ecart. This is what makes reduction terminate without a
//! well-ordering.

use std::collections::BTreeSet;

use super::groebner::s_polynomial;
use super::{Budget, IdealBasis};
use crate::error::{Error, Result};
use crate::polyring::{MonomialOrder, Polynomial};
use crate::scalar::Field;

const LOCAL: MonomialOrder = MonomialOrder::NegDegRevLex;

struct StepCounter {
    steps: u64,
    limit: u64,
}

impl StepCounter {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.limit {
            return Err(Error::ResourceLimit(format!(
                "Mora normal form exceeded {} reduction steps",
                self.limit
            )));
        }
        Ok(())
    }
}

/// Mora's weak normal form of `h` with respect to `basis`.
///
/// The result is zero or has a leading monomial outside the leading ideal of
/// `basis`; it agrees with `h` modulo the ideal up to multiplication by a unit
/// of the local ring.
pub fn mora_normal_form<C: Field>(
    h: &Polynomial<C>,
    basis: &[Polynomial<C>],
) -> Result<Polynomial<C>> {
    let mut counter = StepCounter {
        steps: 0,
        limit: u64::MAX,
    };
    mora_nf_counted(h, basis, &mut counter)
}

fn mora_nf_counted<C: Field>(
    h: &Polynomial<C>,
    basis: &[Polynomial<C>],
    counter: &mut StepCounter,
) -> Result<Polynomial<C>> {
    let mut h = h.with_order(LOCAL);
    let mut t: Vec<Polynomial<C>> = basis.to_vec();
    loop {
        let Some(lm) = h.leading_monomial().cloned() else {
            return Ok(h);
        };
        let g = t
            .iter()
            .filter(|g| g.leading_monomial().unwrap().divides(&lm))
            .min_by_key(|g| g.ecart())
            .cloned();
        let Some(g) = g else {
            return Ok(h);
        };
        counter.tick()?;
        if g.ecart() > h.ecart() {
            t.push(h.clone());
        }
        h = s_polynomial(&h, &g).normalized();
    }
}

/// Standard basis of the ideal generated by `gens` in the local ring at the
/// origin.
pub fn standard_basis<C: Field>(
    nvars: usize,
    gens: &[Polynomial<C>],
    budget: &Budget,
) -> Result<IdealBasis<C>> {
    let mut counter = StepCounter {
        steps: 0,
        limit: budget.s_pairs.saturating_mul(1000),
    };
    let mut basis: Vec<Polynomial<C>> = Vec::new();
    let mut queue: BTreeSet<(u64, usize, usize)> = BTreeSet::new();

    let unit = |like: &Polynomial<C>| Polynomial::constant(like.vars().clone(), LOCAL, C::one());

    for g in gens.iter().filter(|g| !g.is_zero()) {
        let g = g.with_order(LOCAL).normalized();
        if g.leading_monomial().unwrap().is_one() {
            return Ok(IdealBasis {
                nvars,
                generators: vec![unit(&g)],
                order: LOCAL,
                reduced: true,
            });
        }
        let lm = g.leading_monomial().unwrap().clone();
        for (i, b) in basis.iter().enumerate() {
            queue.insert((
                b.leading_monomial().unwrap().lcm(&lm).degree(),
                i,
                basis.len(),
            ));
        }
        basis.push(g);
    }

    let mut processed = 0u64;
    while let Some((_, i, j)) = queue.pop_first() {
        let (li, lj) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        if li.is_coprime(lj) {
            continue;
        }
        processed += 1;
        if processed > budget.s_pairs {
            return Err(Error::ResourceLimit(format!(
                "standard basis exceeded the S-pair budget of {}",
                budget.s_pairs
            )));
        }
        let h = mora_nf_counted(&s_polynomial(&basis[i], &basis[j]), &basis, &mut counter)?;
        if h.is_zero() {
            continue;
        }
        let h = h.normalized();
        if h.leading_monomial().unwrap().is_one() {
            return Ok(IdealBasis {
                nvars,
                generators: vec![unit(&h)],
                order: LOCAL,
                reduced: true,
            });
        }
        let lm = h.leading_monomial().unwrap().clone();
        for (k, b) in basis.iter().enumerate() {
            queue.insert((
                b.leading_monomial().unwrap().lcm(&lm).degree(),
                k,
                basis.len(),
            ));
        }
        basis.push(h);
    }

    // Elements whose leading monomial is a multiple of another's add nothing
    // to the leading ideal.
    let mut keep: Vec<Polynomial<C>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k2, h)| {
            let hm = h.leading_monomial().unwrap();
            k2 != k && hm.divides(lm) && (hm != lm || k2 < k)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    keep.sort_by(|a, b| {
        LOCAL.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    Ok(IdealBasis {
        nvars,
        generators: keep,
        order: LOCAL,
        reduced: false,
    })
}
