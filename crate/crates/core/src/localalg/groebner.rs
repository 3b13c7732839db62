use std::collections::{BTreeSet, HashSet};

use super::{Budget, IdealBasis};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Field;

/// S-polynomial `lc(g) * (L/LM f) * f - lc(f) * (L/LM g) * g` with `L` the lcm
/// of the leading monomials.
pub(crate) fn s_polynomial<C: Field>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    let (fm, gm) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l).unwrap(), g.leading_coeff().unwrap());
    a.sub_scaled(f.leading_coeff().unwrap(), &gm.quotient_of(&l).unwrap(), g)
}

/// Full reduction of `h` by `basis` (every term, not only the leading one),
/// fraction-free with the result rescaled after each step.
pub fn normal_form<C: Field>(h: &Polynomial<C>, basis: &[Polynomial<C>]) -> Polynomial<C> {
    let mut h = h.clone();
    let mut i = 0;
    while i < h.len() {
        let (m, c) = h.terms()[i].clone();
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let q = g.leading_monomial().unwrap().quotient_of(&m).unwrap();
                // Terms ahead of position i only get rescaled, so the scan resumes at i.
                h = h
                    .scale(g.leading_coeff().unwrap())
                    .sub_scaled(&c, &q, g)
                    .normalized();
            }
            None => i += 1,
        }
    }
    h
}

struct PairQueue {
    queue: BTreeSet<(u64, usize, usize)>,
    pending: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue {
            queue: BTreeSet::new(),
            pending: HashSet::new(),
        }
    }

    fn push(&mut self, i: usize, j: usize, lcm_degree: u64) {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.queue.insert((lcm_degree, i, j));
        self.pending.insert((i, j));
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        let (_, i, j) = self.queue.pop_first()?;
        self.pending.remove(&(i, j));
        Some((i, j))
    }

    fn is_pending(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.pending.contains(&key)
    }
}

/// Reduced Gröbner basis under a global order, by Buchberger's algorithm
/// with the product and chain criteria.
pub fn groebner_basis<C: Field>(
    nvars: usize,
    gens: &[Polynomial<C>],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<IdealBasis<C>> {
    if !order.is_global() {
        return Err(Error::InvalidArgument(format!(
            "{order} is not a global ordering"
        )));
    }
    let mut basis: Vec<Polynomial<C>> = Vec::new();
    let mut pairs = PairQueue::new();

    let add = |h: Polynomial<C>, basis: &mut Vec<Polynomial<C>>, pairs: &mut PairQueue| {
        let k = basis.len();
        let lm = h.leading_monomial().unwrap().clone();
        for (i, g) in basis.iter().enumerate() {
            let l = g.leading_monomial().unwrap().lcm(&lm);
            pairs.push(i, k, l.degree());
        }
        basis.push(h);
    };

    for g in gens {
        let h = normal_form(&g.with_order(order).normalized(), &basis);
        if !h.is_zero() {
            add(h, &mut basis, &mut pairs);
        }
    }

    let mut processed: u64 = 0;
    while let Some((i, j)) = pairs.pop() {
        let (li, lj) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pairs.is_pending(i, k)
                && !pairs.is_pending(j, k)
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > budget.s_pairs {
            return Err(Error::ResourceLimit(format!(
                "Gröbner basis exceeded the S-pair budget of {}",
                budget.s_pairs
            )));
        }
        let h = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !h.is_zero() {
            add(h, &mut basis, &mut pairs);
        }
    }

    Ok(IdealBasis {
        nvars,
        generators: interreduce(basis),
        order,
        reduced: true,
    })
}

/// Drops redundant leading monomials and tail-reduces, returning the basis
/// sorted by increasing leading monomial.
fn interreduce<C: Field>(basis: Vec<Polynomial<C>>) -> Vec<Polynomial<C>> {
    let mut minimal: Vec<Polynomial<C>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k2, h)| {
            let hm = h.leading_monomial().unwrap();
            k2 != k && hm.divides(lm) && (hm != lm || k2 < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial<C>> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial<C>> = minimal
                .iter()
                .enumerate()
                .filter(|(k2, _)| *k2 != k)
                .map(|(_, g)| g.clone())
                .collect();
            normal_form(&minimal[k], &others).normalized()
        })
        .collect();
    if let Some(order) = out.first().map(|g| g.order()) {
        out.sort_by(|a, b| {
            order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
        });
    }
    out
}

/// Leading monomials of a basis.
pub fn leading_monomials<C: Field>(basis: &IdealBasis<C>) -> Vec<Monomial> {
    basis
        .generators
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;
    use crate::Rational;

    fn polys(src: &[&str], vars: &[&str]) -> Vec<Polynomial<Rational>> {
        let v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        src.iter()
            .map(|s| parse_polynomial(s, Some(&v)).unwrap())
            .collect()
    }

    #[test]
    fn already_reduced_input() {
        let g = polys(&["x", "y"], &["x", "y"]);
        let b = groebner_basis(
            g[0].nvars(),
            &g,
            MonomialOrder::DegRevLex,
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(b.generators.len(), 2);
        assert!(b.generators.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn monomial_input_is_interreduced_only() {
        let vars = ["x", "y", "r", "t"];
        let g = polys(&["t*x^3", "r^2*y", "r*y^2", "x^4"], &vars);
        let b = groebner_basis(
            g[0].nvars(),
            &g,
            MonomialOrder::DegRevLex,
            &Budget::default(),
        )
        .unwrap();
        let mut got: Vec<String> = b.generators.iter().map(|p| p.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["x^3*t", "x^4", "y*r^2", "y^2*r"]);
    }

    #[test]
    fn binomial_ideal_and_idempotence() {
        let g = polys(&["x^2 - y", "y^2"], &["x", "y"]);
        let b = groebner_basis(
            g[0].nvars(),
            &g,
            MonomialOrder::DegRevLex,
            &Budget::default(),
        )
        .unwrap();
        // x^4 = (x^2 - y)(x^2 + y) + y^2 lies in the ideal.
        let x4 = polys(&["x^4"], &["x", "y"]).pop().unwrap();
        assert!(normal_form(&x4, &b.generators).is_zero());
        let again = groebner_basis(
            2,
            &b.generators,
            MonomialOrder::DegRevLex,
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(again.generators, b.generators);
    }

    #[test]
    fn budget_is_enforced() {
        let g = polys(&["x^2 - y", "x*y - 1"], &["x", "y"]);
        let err = groebner_basis(
            g[0].nvars(),
            &g,
            MonomialOrder::DegRevLex,
            &Budget { s_pairs: 0 },
        )
        .unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }

    #[test]
    fn rejects_local_order() {
        let g = polys(&["x"], &["x"]);
        assert!(groebner_basis(
            g[0].nvars(),
            &g,
            MonomialOrder::NegDegRevLex,
            &Budget::default()
        )
        .is_err());
    }
}
