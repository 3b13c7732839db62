use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept sorted in decreasing order under `order`, with no zero
/// coefficients and no repeated monomials. The leading term is therefore
/// `terms[0]`. Changing the order is explicit through [`Polynomial::with_order`].
#[derive(Clone, PartialEq)]
pub struct Polynomial<C: Field> {
    vars: Arc<[String]>,
    order: MonomialOrder,
    terms: Vec<(Monomial, C)>,
}

/// Replacement for a variable in [`Polynomial::substitute`].
#[derive(Clone, Debug, PartialEq)]
pub enum Substitution<C> {
    Value(C),
    Var(String),
}

impl<C: Field> Polynomial<C> {
    pub fn zero(vars: Arc<[String]>, order: MonomialOrder) -> Self {
        Polynomial {
            vars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, order: MonomialOrder, c: C) -> Self {
        let n = vars.len();
        Self::from_terms(vars, order, [(Monomial::one(n), c)])
    }

    /// The polynomial `x_i`.
    pub fn variable(vars: Arc<[String]>, order: MonomialOrder, i: usize) -> Self {
        let n = vars.len();
        Self::from_terms(vars, order, [(Monomial::var(n, i, 1), C::one())])
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(vars: Arc<[String]>, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut raw: Vec<(Monomial, C)> = terms.into_iter().collect();
        for (m, _) in &raw {
            assert_eq!(
                m.nvars(),
                vars.len(),
                "monomial arity does not match variable count"
            );
        }
        raw.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut terms: Vec<(Monomial, C)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.clone() + c,
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial { vars, order, terms }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Largest total degree of a term; zero for the zero polynomial.
    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    /// `deg f - deg LM(f)`, the quantity Mora's normal form keys on.
    pub fn ecart(&self) -> u64 {
        match self.leading_monomial() {
            Some(lm) => self.total_degree() - lm.degree(),
            None => 0,
        }
    }

    pub fn constant_term(&self) -> C {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    /// Re-sorts the terms under a different ordering.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial {
            vars: self.vars.clone(),
            order,
            terms,
        }
    }

    /// Renames the ambient variables without touching terms.
    pub fn with_vars(&self, vars: Arc<[String]>) -> Self {
        assert_eq!(vars.len(), self.nvars());
        Polynomial {
            vars,
            order: self.order,
            terms: self.terms.clone(),
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// `(true, d)` semantics folded into an option: `Some(d)` when every term
    /// has total degree `d`.
    pub fn homogeneous_degree(&self) -> Result<Option<u64>> {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        let first = degs.next().ok_or(Error::ZeroPolynomial)?;
        Ok(degs.all(|d| d == first).then_some(first))
    }

    pub fn is_homogeneous(&self) -> Result<bool> {
        Ok(self.homogeneous_degree()?.is_some())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone(), self.order);
        }
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// `c * m * self`; the term order is preserved because monomial orders
    /// are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone(), self.order);
        }
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// `self - c * m * g` by a single merge pass.
    pub fn sub_scaled(&self, c: &C, m: &Monomial, g: &Self) -> Self {
        debug_assert_eq!(self.order, g.order);
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|(t, gc)| (t.mul(m), gc.clone() * c.clone()))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.compare(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (t, v) = b.next().unwrap();
                    out.push((t, -v));
                }
                Ordering::Equal => {
                    let (t, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let v = x.clone() - y;
                    if !v.is_zero() {
                        out.push((t.clone(), v));
                    }
                }
            }
        }
        Polynomial {
            vars: self.vars.clone(),
            order,
            terms: out,
        }
    }

    /// Canonical scalar multiple, see [`Field::normalize`].
    pub fn normalized(mut self) -> Self {
        let mut coeffs: Vec<C> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        C::normalize(&mut coeffs);
        for ((_, c), v) in self.terms.iter_mut().zip(coeffs) {
            *c = v;
        }
        self
    }

    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(i < self.nvars(), "variable index out of range");
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| {
                let e = m.exponent(i);
                let mut d = m.clone();
                d.exponents_mut()[i] -= 1;
                (d, c.clone() * C::from_i64(i64::from(e)))
            });
        Self::from_terms(self.vars.clone(), self.order, terms)
    }

    /// All first partials, in variable order.
    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars())
            .map(|i| self.partial_derivative(i))
            .collect()
    }

    /// Evaluates some variables at constants and renames others.
    ///
    /// Variables mapped to values disappear from the result; renamed variables
    /// take the new name, merging with an existing variable of that name.
    pub fn substitute(&self, assignments: &BTreeMap<String, Substitution<C>>) -> Result<Self> {
        for name in assignments.keys() {
            if self.var_index(name).is_none() {
                return Err(Error::UnknownVariable(name.clone()));
            }
        }
        let mut new_vars: Vec<String> = Vec::new();
        let mut target: Vec<std::result::Result<usize, C>> = Vec::with_capacity(self.nvars());
        for v in self.vars.iter() {
            let name = match assignments.get(v) {
                Some(Substitution::Value(c)) => {
                    target.push(Err(c.clone()));
                    continue;
                }
                Some(Substitution::Var(w)) => w.clone(),
                None => v.clone(),
            };
            let idx = match new_vars.iter().position(|x| *x == name) {
                Some(i) => i,
                None => {
                    new_vars.push(name);
                    new_vars.len() - 1
                }
            };
            target.push(Ok(idx));
        }
        let n = new_vars.len();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut coeff = c.clone();
            let mut out = Monomial::one(n);
            for (i, &e) in m.exponents().iter().enumerate() {
                match &target[i] {
                    Ok(j) => out.exponents_mut()[*j] += e,
                    Err(v) => {
                        for _ in 0..e {
                            coeff = coeff * v.clone();
                        }
                    }
                }
            }
            (out, coeff)
        });
        Ok(Self::from_terms(new_vars.into(), self.order, terms))
    }

    /// Sets the listed variables to zero and drops them from the ring.
    pub fn restrict_to_zero(&self, zero_vars: &[usize]) -> Self {
        let mut drop: Vec<usize> = zero_vars.to_vec();
        drop.sort_unstable();
        drop.dedup();
        let vars: Arc<[String]> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| drop.binary_search(i).is_err())
            .map(|(_, v)| v.clone())
            .collect();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| drop.iter().all(|&i| m.exponent(i) == 0))
            .map(|(m, c)| (m.without(&drop), c.clone()));
        Self::from_terms(vars, self.order, terms)
    }

    /// Drops every term of total degree `>= cap`.
    pub fn truncate_degree(&self, cap: u64) -> Self {
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < cap)
                .cloned()
                .collect(),
        }
    }

    pub fn map_coefficients<D: Field>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(
            self.vars.clone(),
            self.order,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    /// Reduces rational coefficients into another field; `None` if some
    /// denominator vanishes there.
    pub fn try_convert<D: Field>(&self) -> Option<Polynomial<D>>
    where
        C: Into<num_rational::BigRational>,
    {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), D::from_rational(&c.clone().into())?));
        }
        Some(Polynomial::from_terms(self.vars.clone(), self.order, terms))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.vars.clone(), self.order, C::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn binary_merge(&self, other: &Self, subtract: bool) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let other = other.with_order(self.order);
        let c = if subtract { C::one() } else { -C::one() };
        self.sub_scaled(&c, &Monomial::one(self.nvars()), &other)
    }
}

impl<C: Field> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Polynomial({self}; vars={:?}, order={})",
            &self.vars[..],
            self.order
        )
    }
}

fn write_monomial(out: &mut String, vars: &[String], m: &Monomial) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&vars[i]);
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

impl<C: Field> fmt::Display for Polynomial<C> {
    /// Renders in the textual grammar accepted by the parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push('*');
                }
                write_monomial(&mut out, &self.vars, m);
            }
        }
        f.write_str(&out)
    }
}

impl<C: Field> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.binary_merge(rhs, false)
    }
}

impl<C: Field> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.binary_merge(rhs, true)
    }
}

impl<C: Field> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}

impl<C: Field> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        debug_assert_eq!(self.vars, rhs.vars);
        let mut acc: Vec<(Monomial, C)> = Vec::with_capacity(self.len() * rhs.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                acc.push((a.mul(b), ca.clone() * cb.clone()));
            }
        }
        Polynomial::from_terms(self.vars.clone(), self.order, acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;
    use crate::Rational;
    use num_traits::One;

    fn p(s: &str) -> Polynomial<Rational> {
        parse_polynomial(s, None).unwrap()
    }

    fn pv(s: &str, vars: &[&str]) -> Polynomial<Rational> {
        let v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        parse_polynomial(s, Some(&v)).unwrap()
    }

    #[test]
    fn derivative_examples() {
        let f = pv("w^24*z", &["w", "z"]);
        assert_eq!(f.partial_derivative(1), pv("w^24", &["w", "z"]));
        let g = pv("r^2*y^2 - t*x^3", &["r", "y", "t", "x"]);
        assert_eq!(
            g.partial_derivative(3),
            pv("-3*t*x^2", &["r", "y", "t", "x"])
        );
        let c = pv("5", &["u"]);
        assert!(c.partial_derivative(0).is_zero());
    }

    #[test]
    fn substitution_examples() {
        let f = p("z^2*y - x*y^2");
        let mut a = BTreeMap::new();
        a.insert("x".to_string(), Substitution::Value(Rational::one()));
        let g = f.substitute(&a).unwrap();
        assert_eq!(g, pv("z^2*y - y^2", &["z", "y"]));

        assert_eq!(f.substitute(&BTreeMap::new()).unwrap(), f);

        let f = p("r^2*y^2 - t*x^3");
        let mut a = BTreeMap::new();
        a.insert(
            "r".to_string(),
            Substitution::Value(Rational::from_integer(2.into())),
        );
        a.insert(
            "t".to_string(),
            Substitution::Value(Rational::from_integer(3.into())),
        );
        assert_eq!(f.substitute(&a).unwrap(), pv("4*y^2 - 3*x^3", &["y", "x"]));

        let mut a = BTreeMap::new();
        a.insert("q".to_string(), Substitution::Var("x".into()));
        assert_eq!(f.substitute(&a), Err(Error::UnknownVariable("q".into())));
    }

    #[test]
    fn renaming_merges_variables() {
        let f = p("x*y + y^2");
        let mut a = BTreeMap::new();
        a.insert("x".to_string(), Substitution::Var("y".into()));
        assert_eq!(f.substitute(&a).unwrap(), pv("2*y^2", &["y"]));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("z^2*y - x*y^2").homogeneous_degree().unwrap(), Some(3));
        assert_eq!(p("x + x^2").homogeneous_degree().unwrap(), None);
        assert_eq!(
            p("u^25 + w^24*z - x^22*y*z^2")
                .homogeneous_degree()
                .unwrap(),
            Some(25)
        );
        assert_eq!(p("0").homogeneous_degree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn arithmetic_and_order_change() {
        let a = p("x^2 + 2*x*y + y^2");
        let b = pv("x + y", &["x", "y"]);
        assert_eq!(&b * &b, a);
        assert!((&a - &a).is_zero());
        let lex = a.with_order(MonomialOrder::NegDegRevLex);
        assert_eq!(lex.leading_monomial().unwrap().degree(), 2);
        let c = p("x^3 + y");
        let local = c.with_order(MonomialOrder::NegDegRevLex);
        assert_eq!(local.leading_monomial().unwrap().exponents(), &[0, 1]);
        assert_eq!(local.ecart(), 2);
    }

    #[test]
    fn render_examples() {
        assert_eq!(p("x - 3*y^2 + 1/2").to_string(), "-3*y^2 + x + 1/2");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-x").to_string(), "-x");
    }
}
