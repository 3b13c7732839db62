use super::groebner::leading_monomials;
use super::IdealBasis;
use crate::error::{Error, Result};
use crate::polyring::Monomial;
use crate::scalar::Field;

/// Hard cap on the number of box cells visited while counting standard
/// monomials.
const COUNT_LIMIT: u64 = 200_000_000;

/// Leading monomials of a basis and the standard monomials beneath them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub nvars: usize,
    /// Minimal generators of the leading ideal.
    pub corners: Vec<Monomial>,
    /// Number of standard monomials, `None` when there are infinitely many.
    pub count: Option<u64>,
}

impl Staircase {
    pub fn from_leading_monomials(nvars: usize, lms: &[Monomial]) -> Result<Self> {
        let corners = minimalize(lms);
        let count = count_standard_monomials(nvars, &corners)?;
        Ok(Staircase {
            nvars,
            corners,
            count,
        })
    }

    pub fn from_basis<C: Field>(basis: &IdealBasis<C>) -> Result<Self> {
        Self::from_leading_monomials(basis.nvars, &leading_monomials(basis))
    }

    pub fn is_finite(&self) -> bool {
        self.count.is_some()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.corners.iter().any(|c| c.divides(m))
    }
}

fn minimalize(lms: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (k, m) in lms.iter().enumerate() {
        let redundant = lms
            .iter()
            .enumerate()
            .any(|(k2, o)| k2 != k && o.divides(m) && (o != m || k2 < k));
        if !redundant {
            out.push(m.clone());
        }
    }
    out.sort();
    out
}

/// Counts monomials divisible by no corner. Finite exactly when every
/// variable has a pure power among the corners.
fn count_standard_monomials(nvars: usize, corners: &[Monomial]) -> Result<Option<u64>> {
    if corners.iter().any(|c| c.is_one()) {
        return Ok(Some(0));
    }
    let mut bounds = vec![u32::MAX; nvars];
    for c in corners {
        if let Some((i, e)) = c.as_pure_power() {
            bounds[i] = bounds[i].min(e);
        }
    }
    if bounds.contains(&u32::MAX) {
        return Ok(None);
    }
    let cells = bounds
        .iter()
        .try_fold(1u64, |acc, &b| acc.checked_mul(u64::from(b)));
    if cells.is_none_or(|c| c > COUNT_LIMIT) {
        return Err(Error::ResourceLimit(
            "staircase too large to enumerate".into(),
        ));
    }

    // Odometer walk over the box; skip a whole last-axis run once a cell is
    // divisible, since every later cell on that run is divisible too.
    let mut count = 0u64;
    let mut exps = vec![0u32; nvars];
    if nvars == 0 {
        return Ok(Some(1));
    }
    let last = nvars - 1;
    'outer: loop {
        let m = Monomial::from_exponents(&exps);
        if corners.iter().any(|c| c.divides(&m)) {
            exps[last] = bounds[last];
        } else {
            count += 1;
            exps[last] += 1;
        }
        let mut i = last;
        while exps[i] >= bounds[i] {
            exps[i] = 0;
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            exps[i] += 1;
        }
    }
    Ok(Some(count))
}

/// Krull dimension of `k[x]/I` from a Gröbner basis under a global order: the
/// largest set of variables `S` such that no leading monomial is supported
/// inside `S`. `None` for the unit ideal.
pub fn ideal_dimension<C: Field>(basis: &IdealBasis<C>) -> Option<usize> {
    let nvars = basis.nvars;
    let lms = leading_monomials(basis);
    if lms.iter().any(|m| m.is_one()) {
        return None;
    }
    let supports: Vec<u64> = lms
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    let best = (0u64..(1u64 << nvars))
        .filter(|&set| supports.iter().all(|&s| s & !set != 0))
        .map(|set| set.count_ones() as usize)
        .max()
        .unwrap_or(0);
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn box_staircase() {
        let s =
            Staircase::from_leading_monomials(3, &[m(&[24, 0, 0]), m(&[0, 23, 0]), m(&[0, 0, 21])])
                .unwrap();
        assert_eq!(s.count, Some(24 * 23 * 21));
    }

    #[test]
    fn mixed_corners() {
        // (x^2, xy, y^3): standard monomials 1, x, y, y^2
        let s =
            Staircase::from_leading_monomials(2, &[m(&[2, 0]), m(&[1, 1]), m(&[0, 3])]).unwrap();
        assert_eq!(s.count, Some(4));
        assert!(s.is_standard(&m(&[0, 2])));
        assert!(!s.is_standard(&m(&[1, 2])));
    }

    #[test]
    fn infinite_staircase() {
        // (xy) leaves x^k and y^k standard even though both variables occur.
        let s = Staircase::from_leading_monomials(2, &[m(&[1, 1])]).unwrap();
        assert_eq!(s.count, None);
        let unit = Staircase::from_leading_monomials(2, &[m(&[0, 0])]).unwrap();
        assert_eq!(unit.count, Some(0));
    }

    #[test]
    fn redundant_corners_removed() {
        let s =
            Staircase::from_leading_monomials(2, &[m(&[2, 0]), m(&[3, 1]), m(&[0, 1])]).unwrap();
        assert_eq!(s.corners, vec![m(&[0, 1]), m(&[2, 0])]);
        assert_eq!(s.count, Some(2));
    }
}
