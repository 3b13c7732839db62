//! Truncation oracle for Milnor numbers.
//!
//! Independent of the standard-basis route: the local algebra is approximated
//! by `k[x]_{<N} / (J + m^N)`, whose dimension is computed by plain sparse
//! Gaussian elimination on the span of all truncated multiples `m * g_i`.

use std::collections::HashMap;

use super::MilnorNumber;
use crate::error::{Error, Result};
use crate::polyring::{monomials_of_degree, Monomial, Polynomial};
use crate::scalar::Field;

/// Outcome of [`milnor_truncation_oracle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    /// Dimensions at `N` and `N + 1` agree.
    Stable(u64),
    /// The truncated dimension was still moving; `cap` too small or the
    /// singularity is not isolated.
    Unstable { at_cap: u64, at_next: u64 },
}

impl OracleOutcome {
    pub fn value(self) -> Option<u64> {
        match self {
            OracleOutcome::Stable(v) => Some(v),
            OracleOutcome::Unstable { .. } => None,
        }
    }

    pub fn agrees_with(self, mu: MilnorNumber) -> bool {
        matches!((self, mu), (OracleOutcome::Stable(a), MilnorNumber::Finite(b)) if a == b)
    }
}

type Row<C> = Vec<(usize, C)>;

fn axpy_rows<C: Field>(row: &Row<C>, pivot: &Row<C>) -> Row<C> {
    // pivot_lead * row - row_lead * pivot, then rescaled.
    let (a, b) = (pivot[0].1.clone(), row[0].1.clone());
    let mut out: Row<C> = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take = match (row.get(i), pivot.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => unreachable!(),
        };
        let (col, v) = match take {
            std::cmp::Ordering::Less => {
                i += 1;
                (row[i - 1].0, a.clone() * row[i - 1].1.clone())
            }
            std::cmp::Ordering::Greater => {
                j += 1;
                (pivot[j - 1].0, -(b.clone() * pivot[j - 1].1.clone()))
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
                (
                    row[i - 1].0,
                    a.clone() * row[i - 1].1.clone() - b.clone() * pivot[j - 1].1.clone(),
                )
            }
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    let mut coeffs: Vec<C> = out.iter().map(|(_, c)| c.clone()).collect();
    C::normalize(&mut coeffs);
    for ((_, c), v) in out.iter_mut().zip(coeffs) {
        *c = v;
    }
    out
}

/// `dim k[x]_{<cap} / (J + m^cap)` for the ideal generated by `gens`.
pub fn truncated_quotient_dimension<C: Field>(
    gens: &[Polynomial<C>],
    nvars: usize,
    cap: u32,
) -> u64 {
    // Columns indexed by increasing degree so the pivot of a row is its
    // lowest-degree term.
    let mut columns: HashMap<Monomial, usize> = HashMap::new();
    let mut by_degree: Vec<Vec<Monomial>> = Vec::new();
    for deg in 0..cap {
        let ms = monomials_of_degree(nvars, deg);
        for m in &ms {
            let k = columns.len();
            columns.insert(m.clone(), k);
        }
        by_degree.push(ms);
    }
    let total = columns.len() as u64;

    let mut pivots: HashMap<usize, Row<C>> = HashMap::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let low = g.terms().iter().map(|(m, _)| m.degree()).min().unwrap();
        for deg in 0..u64::from(cap) {
            if deg + low >= u64::from(cap) {
                break;
            }
            for mult in &by_degree[deg as usize] {
                let mut row: Row<C> = g
                    .terms()
                    .iter()
                    .filter_map(|(t, c)| {
                        let prod = t.mul(mult);
                        columns.get(&prod).map(|&k| (k, c.clone()))
                    })
                    .collect();
                row.sort_by_key(|(k, _)| *k);
                while let Some(&(lead, _)) = row.first() {
                    match pivots.get(&lead) {
                        Some(p) => row = axpy_rows(&row, p),
                        None => {
                            let mut coeffs: Vec<C> = row.iter().map(|(_, c)| c.clone()).collect();
                            C::normalize(&mut coeffs);
                            for ((_, c), v) in row.iter_mut().zip(coeffs) {
                                *c = v;
                            }
                            pivots.insert(lead, row);
                            break;
                        }
                    }
                }
            }
        }
    }
    total - pivots.len() as u64
}

/// Milnor number by truncated linear algebra at `cap` and `cap + 1`.
pub fn milnor_truncation_oracle<C: Field>(
    g: &Polynomial<C>,
    degree_cap: u32,
) -> Result<OracleOutcome> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !g.constant_term().is_zero() {
        return Err(Error::ConstantTerm);
    }
    let jac = g.gradient();
    let a = truncated_quotient_dimension(&jac, g.nvars(), degree_cap);
    let b = truncated_quotient_dimension(&jac, g.nvars(), degree_cap + 1);
    Ok(if a == b {
        OracleOutcome::Stable(a)
    } else {
        OracleOutcome::Unstable {
            at_cap: a,
            at_next: b,
        }
    })
}
