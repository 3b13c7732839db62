use std::cmp::Ordering;
use std::fmt;

use super::Monomial;

/// Monomial ordering used to sort polynomial terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic; a well-ordering with 1 smallest.
    #[default]
    DegRevLex,
    /// Pure lexicographic with `x_0 > x_1 > ...`.
    Lex,
    /// Negative degree reverse lexicographic: lower total degree is larger,
    /// ties broken by reverse lex. Makes 1 the largest monomial, which is
    /// what local standard bases need.
    NegDegRevLex,
}

fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        if x != y {
            // Smaller exponent in the last differing variable wins.
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(a, b)),
            MonomialOrder::NegDegRevLex => b.degree().cmp(&a.degree()).then_with(|| revlex(a, b)),
        }
    }

    pub fn is_global(self) -> bool {
        !matches!(self, MonomialOrder::NegDegRevLex)
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::NegDegRevLex => "negdegrevlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
