use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

use super::UniPoly;
use crate::error::{Error, Result};

/// What a matrix stands for in the laboratory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MatrixRole {
    /// Milnor monodromy representative.
    MilnorT,
    /// Internal monodromy derived from a Milnor representative.
    InternalQ,
    #[default]
    Generic,
}

/// Dense square matrix over a commutative ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
    pub role: MatrixRole,
}

impl<T: Clone + Num> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix must be square".into()));
        }
        Ok(Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
            role: MatrixRole::Generic,
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Matrix {
            n,
            data,
            role: MatrixRole::Generic,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Companion matrix of a monic polynomial; its characteristic polynomial
    /// is the polynomial itself.
    pub fn companion(poly: &UniPoly<T>) -> Result<Self> {
        if !poly.is_monic() {
            return Err(Error::InvalidArgument(
                "companion needs a monic polynomial".into(),
            ));
        }
        let n = poly.degree().unwrap();
        Ok(Self::from_fn(n, |i, j| {
            if j == n - 1 {
                T::zero() - poly.coeff(i)
            } else if i == j + 1 {
                T::one()
            } else {
                T::zero()
            }
        }))
    }

    pub fn with_role(mut self, role: MatrixRole) -> Self {
        self.role = role;
        self
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn map<U: Clone + Num>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
            role: self.role,
        }
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        Self::from_fn(n, |i, j| {
            (0..n).fold(T::zero(), |acc, k| {
                acc + self.get(i, k).clone() * other.get(k, j).clone()
            })
        })
    }

    /// `self^e` by repeated squaring, applying `reduce` to every product.
    pub fn pow_with(&self, mut e: u64, reduce: impl Fn(T) -> T) -> Self {
        let mut base = self.map(|v| reduce(v.clone()));
        let mut acc = Self::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).map(|v| reduce(v.clone()));
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).map(|v| reduce(v.clone()));
            }
        }
        acc.role = self.role;
        acc
    }

    pub fn pow(&self, e: u64) -> Self {
        self.pow_with(e, |v| v)
    }

    /// Fraction-free Gaussian elimination. Every intermediate division is
    /// exact, so this works over any integral domain.
    pub fn determinant(&self) -> T {
        let n = self.n;
        if n == 0 {
            return T::one();
        }
        let mut a = self.data.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(pivot) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return T::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, pivot * n + j);
                }
                negate = !negate;
            }
            let akk = a[k * n + k].clone();
            for i in k + 1..n {
                let aik = a[i * n + k].clone();
                for j in k + 1..n {
                    let v = akk.clone() * a[i * n + j].clone() - aik.clone() * a[k * n + j].clone();
                    a[i * n + j] = v / prev.clone();
                }
            }
            prev = akk;
        }
        let det = a[n * n - 1].clone();
        if negate {
            T::zero() - det
        } else {
            det
        }
    }

    /// The matrix with row `r` and column `c` deleted.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let n = self.n;
        let data = (0..n)
            .filter(|&i| i != r)
            .flat_map(|i| (0..n).filter(move |&j| j != c).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Matrix {
            n: n - 1,
            data,
            role: MatrixRole::Generic,
        }
    }

    /// Classical adjoint, `adj(A) * A = det(A) * I`.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        if n == 1 {
            return Self::identity(1);
        }
        Self::from_fn(n, |i, j| {
            let m = self.minor(j, i).determinant();
            if (i + j) % 2 == 0 {
                m
            } else {
                T::zero() - m
            }
        })
    }
}

impl Matrix<BigInt> {
    /// Plain-text format: the size on the first line, then one row per line.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let bad = |msg: String| Error::InvalidArgument(format!("malformed matrix file: {msg}"));
        let n: usize = lines
            .next()
            .ok_or_else(|| bad("empty input".into()))?
            .parse()
            .map_err(|_| bad("first line must be the matrix size".into()))?;
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| bad(format!("missing row {}", r + 1)))?;
            let row: Vec<BigInt> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|_| bad(format!("bad entry `{t}` in row {}", r + 1)))
                })
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(bad(format!(
                    "row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            rows.push(row);
        }
        if lines.next().is_some() {
            return Err(bad("trailing content after the last row".into()));
        }
        Self::from_rows(rows)
    }

    /// Monic characteristic polynomial `det(xI - A)`, by evaluating at
    /// `x = 0..=n` with fraction-free determinants and interpolating exactly.
    pub fn charpoly_exact(&self) -> UniPoly<BigInt> {
        let n = self.n;
        let points: Vec<BigInt> = (0..=n).map(BigInt::from).collect();
        let values: Vec<BigInt> = points
            .iter()
            .map(|x| {
                Matrix::from_fn(n, |i, j| {
                    let d = if i == j { x.clone() } else { BigInt::zero() };
                    d - self.get(i, j).clone()
                })
                .determinant()
            })
            .collect();
        interpolate_integer(&points, &values)
    }

    /// Inverse for a unimodular matrix, via the adjugate.
    pub fn unimodular_inverse(&self) -> Result<Self> {
        let det = self.determinant();
        if !(det.is_one() || det == -BigInt::one()) {
            return Err(Error::InvalidArgument(format!(
                "determinant {det} is not a unit"
            )));
        }
        Ok(self.adjugate().map(|v| v * &det))
    }
}

/// Newton interpolation through integer points; the interpolant must have
/// integer coefficients.
fn interpolate_integer(xs: &[BigInt], ys: &[BigInt]) -> UniPoly<BigInt> {
    let n = xs.len();
    let xr: Vec<BigRational> = xs
        .iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect();
    let mut dd: Vec<BigRational> = ys
        .iter()
        .map(|y| BigRational::from_integer(y.clone()))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xr[i] - &xr[i - level]);
        }
    }
    let mut acc: UniPoly<BigRational> = UniPoly::zero();
    for i in (0..n).rev() {
        acc = acc
            .mul(&UniPoly::linear_root(xr[i].clone()))
            .add(&UniPoly::new(vec![dd[i].clone()]));
    }
    UniPoly::new(
        acc.coeffs()
            .iter()
            .map(|c| {
                assert!(
                    c.is_integer(),
                    "characteristic polynomial must have integer coefficients"
                );
                c.to_integer()
            })
            .collect(),
    )
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// Same layout as [`Matrix::parse_text`] reads.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| self.data[i * self.n + j].to_string())
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
