//! Gröbner bases, local standard bases and Milnor numbers.

mod groebner;
mod mora;
mod oracle;
mod staircase;

use std::fmt;

pub use groebner::{groebner_basis, leading_monomials, normal_form};
pub use mora::{mora_normal_form, standard_basis};
pub use oracle::{milnor_truncation_oracle, truncated_quotient_dimension, OracleOutcome};
pub use staircase::{ideal_dimension, Staircase};

use crate::error::{Error, Result};
use crate::polyring::{MonomialOrder, Polynomial};
use crate::scalar::Field;

/// Default number of S-pairs a single basis computation may process.
pub const DEFAULT_S_PAIR_BUDGET: u64 = 200_000;

/// Resource guardrail shared by the basis engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub s_pairs: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            s_pairs: DEFAULT_S_PAIR_BUDGET,
        }
    }
}

/// Generators of an ideal together with the ordering they are a basis for.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBasis<C: Field> {
    pub nvars: usize,
    pub generators: Vec<Polynomial<C>>,
    pub order: MonomialOrder,
    /// Set for reduced Gröbner bases under a global order.
    pub reduced: bool,
}

impl<C: Field> IdealBasis<C> {
    pub fn is_unit(&self) -> bool {
        self.generators
            .iter()
            .any(|g| g.leading_monomial().is_some_and(|m| m.is_one()))
    }

    /// Whether every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.len() == 1)
    }
}

/// Milnor number, or the marker for a non-isolated critical point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MilnorNumber {
    Finite(u64),
    Infinite,
}

impl MilnorNumber {
    pub fn finite(self) -> Option<u64> {
        match self {
            MilnorNumber::Finite(v) => Some(v),
            MilnorNumber::Infinite => None,
        }
    }
}

impl fmt::Display for MilnorNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MilnorNumber::Finite(v) => write!(f, "{v}"),
            MilnorNumber::Infinite => f.write_str("infinite"),
        }
    }
}

/// Dimension of the local algebra `O_0 / J(g)`, read off the staircase of a
/// local standard basis of the Jacobian ideal.
pub fn milnor_number_at_origin<C: Field>(
    g: &Polynomial<C>,
    budget: &Budget,
) -> Result<MilnorNumber> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !g.constant_term().is_zero() {
        return Err(Error::ConstantTerm);
    }
    let basis = standard_basis(g.nvars(), &g.gradient(), budget)?;
    let stairs = Staircase::from_basis(&basis)?;
    Ok(match stairs.count {
        Some(c) => MilnorNumber::Finite(c),
        None => MilnorNumber::Infinite,
    })
}
