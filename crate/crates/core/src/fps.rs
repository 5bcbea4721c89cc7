//! Truncated formal power series with exact rational coefficients.
//!
//! Every series is stored in exponential form: a [`Series1`] holds `c_i` for
//! `sum c_i x^i / i!` and a [`Series2`] holds `c_{i,j}` for
//! `sum c_{i,j} x^i/i! * y^j/j!`. Under this convention derivatives are index
//! shifts and a linear substitution `f(a x + b y)` has the closed coefficient
//! map `f_{i+j} a^i b^j` (see [`compose_linear`]).
//!
//! Truncation orders are inclusive. Binary operations on series of different
//! orders silently truncate to the smaller one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rows `0..=n` of Pascal's triangle.
pub(crate) fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut row = vec![BigInt::one(); k + 1];
        for i in 1..k {
            row[i] = &rows[k - 1][i - 1] + &rows[k - 1][i];
        }
        rows.push(row);
    }
    rows
}

fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// Univariate truncated EGF.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series1 {
    coeffs: Vec<Rational>,
}

impl Series1 {
    pub fn zero(order: usize) -> Self {
        Series1 {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The series `x`, i.e. coefficient 1 at `x^1/1!`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Builds a series from its EGF coefficients `c_0..=c_N`.
    ///
    /// An empty vector gives the zero series of order 0.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Series1 { coeffs }
    }

    pub fn from_integers<I, T>(values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(
            values
                .into_iter()
                .map(|v| Rational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> Rational) -> Self {
        Series1 {
            coeffs: (0..=order).map(&mut f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// EGF coefficient of `x^i / i!`.
    pub fn coeff(&self, i: usize) -> Result<&Rational> {
        self.coeffs.get(i).ok_or(Error::BeyondOrder {
            i,
            j: 0,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Series1 {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series1 {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when every odd-index coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// `d/dx`; the order drops by one (order 0 stays at order 0 with value 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Series1 {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// `x * self`, exact: the order grows by one and `c_k` moves to
    /// `k * c_{k-1}`.
    pub fn times_x(&self) -> Self {
        Series1::from_fn(self.order() + 1, |k| {
            if k == 0 {
                Rational::zero()
            } else {
                &self.coeffs[k - 1] * rat(k as i64)
            }
        })
    }

    /// Quotient `self / divisor` by forward substitution.
    pub fn div(&self, divisor: &Series1) -> Result<Series1> {
        let order = self.order().min(divisor.order());
        let b0 = &divisor.coeffs[0];
        if b0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let binom = binomials(order);
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                let b = &divisor.coeffs[i];
                if b.is_zero() || q[k - i].is_zero() {
                    continue;
                }
                acc -= b * &q[k - i] * &binom[k][i];
            }
            q.push(acc / b0);
        }
        Ok(Series1 { coeffs: q })
    }
}

impl fmt::Display for Series1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*x^{i}/{i}!")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &Series1 {
    type Output = Series1;
    fn add(self, rhs: &Series1) -> Series1 {
        let order = self.order().min(rhs.order());
        Series1::from_fn(order, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }
}

impl Sub for &Series1 {
    type Output = Series1;
    fn sub(self, rhs: &Series1) -> Series1 {
        let order = self.order().min(rhs.order());
        Series1::from_fn(order, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }
}

impl Neg for &Series1 {
    type Output = Series1;
    fn neg(self) -> Series1 {
        Series1 {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Series1 {
    type Output = Series1;
    /// Binomial convolution `r_k = sum_i C(k,i) a_i b_{k-i}`.
    fn mul(self, rhs: &Series1) -> Series1 {
        let order = self.order().min(rhs.order());
        let binom = binomials(order);
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b * &binom[i + j][i];
            }
        }
        Series1 { coeffs: out }
    }
}

macro_rules! forward_owned_binops {
    ($ty:ty) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}

forward_owned_binops!(Series1);
forward_owned_binops!(Series2);

/// Offset of `(i, j)` in the total-degree-major triangular layout.
#[inline]
fn tri_index(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + j
}

/// Bivariate EGF truncated by total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series2 {
    order: usize,
    coeffs: Vec<Rational>,
}

impl Series2 {
    pub fn zero(order: usize) -> Self {
        Series2 {
            order,
            coeffs: vec![Rational::zero(); (order + 1) * (order + 2) / 2],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut coeffs = Vec::with_capacity((order + 1) * (order + 2) / 2);
        for d in 0..=order {
            for j in 0..=d {
                coeffs.push(f(d - j, j));
            }
        }
        Series2 { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// EGF coefficient of `x^i/i! * y^j/j!`.
    pub fn coeff(&self, i: usize, j: usize) -> Result<&Rational> {
        if i + j > self.order {
            return Err(Error::BeyondOrder {
                i,
                j,
                order: self.order,
            });
        }
        Ok(&self.coeffs[tri_index(i, j)])
    }

    /// Like [`coeff`](Self::coeff) but panics beyond the truncation order.
    pub fn at(&self, i: usize, j: usize) -> &Rational {
        assert!(i + j <= self.order, "({i}, {j}) beyond order {}", self.order);
        &self.coeffs[tri_index(i, j)]
    }

    /// Iterates `((i, j), coefficient)` in order of increasing total degree.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> + '_ {
        (0..=self.order)
            .flat_map(|d| (0..=d).map(move |j| (d - j, j)))
            .zip(self.coeffs.iter())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Series2 {
            order,
            coeffs: self.coeffs[..(order + 1) * (order + 2) / 2].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series2 {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `∂/∂x`: coefficient `(i, j)` of the result is `(i + 1, j)` of `self`.
    pub fn partial_x(&self) -> Self {
        let order = self.order.saturating_sub(1);
        if self.order == 0 {
            return Self::zero(0);
        }
        Self::from_fn(order, |i, j| self.at(i + 1, j).clone())
    }

    /// `∂/∂y`: coefficient `(i, j)` of the result is `(i, j + 1)` of `self`.
    pub fn partial_y(&self) -> Self {
        let order = self.order.saturating_sub(1);
        if self.order == 0 {
            return Self::zero(0);
        }
        Self::from_fn(order, |i, j| self.at(i, j + 1).clone())
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_vars(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.at(j, i).clone())
    }

    /// Keeps only the terms of even total degree.
    pub fn even_part(&self) -> Self {
        Self::from_fn(self.order, |i, j| {
            if (i + j) % 2 == 0 {
                self.at(i, j).clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Keeps only the terms of odd total degree.
    pub fn odd_part(&self) -> Self {
        Self::from_fn(self.order, |i, j| {
            if (i + j) % 2 == 1 {
                self.at(i, j).clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Restriction to `y = 0`.
    pub fn at_y_zero(&self) -> Series1 {
        Series1::from_fn(self.order, |i| self.at(i, 0).clone())
    }

    /// Quotient `self / divisor`, solved degree by degree.
    pub fn div(&self, divisor: &Series2) -> Result<Series2> {
        let order = self.order.min(divisor.order);
        let b0 = divisor.at(0, 0).clone();
        if b0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let binom = binomials(order);
        // Nonzero divisor terms other than the constant; typically sparse.
        let terms: Vec<((usize, usize), &Rational)> = divisor
            .iter()
            .skip(1)
            .filter(|&((i, j), c)| i + j <= order && !c.is_zero())
            .collect();
        let mut q = Series2::zero(order);
        for d in 0..=order {
            for j in 0..=d {
                let i = d - j;
                let mut acc = self.at(i, j).clone();
                for &((a, b), c) in &terms {
                    if a > i || b > j {
                        continue;
                    }
                    let prev = q.at(i - a, j - b);
                    if prev.is_zero() {
                        continue;
                    }
                    acc -= c * prev * (&binom[i][a] * &binom[j][b]);
                }
                q.coeffs[tri_index(i, j)] = acc / &b0;
            }
        }
        Ok(q)
    }
}

impl fmt::Display for Series2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((i, j), c) in self.iter() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*x^{i}/{i}!*y^{j}/{j}!")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(deg {})", self.order + 1)
    }
}

impl Add for &Series2 {
    type Output = Series2;
    fn add(self, rhs: &Series2) -> Series2 {
        let order = self.order.min(rhs.order);
        Series2::from_fn(order, |i, j| self.at(i, j) + rhs.at(i, j))
    }
}

impl Sub for &Series2 {
    type Output = Series2;
    fn sub(self, rhs: &Series2) -> Series2 {
        let order = self.order.min(rhs.order);
        Series2::from_fn(order, |i, j| self.at(i, j) - rhs.at(i, j))
    }
}

impl Neg for &Series2 {
    type Output = Series2;
    fn neg(self) -> Series2 {
        Series2 {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Series2 {
    type Output = Series2;
    /// `r_{i,j} = sum C(i,a) C(j,b) p_{a,b} q_{i-a,j-b}`.
    fn mul(self, rhs: &Series2) -> Series2 {
        let order = self.order.min(rhs.order);
        let binom = binomials(order);
        let mut out = Series2::zero(order);
        let lhs_terms: Vec<_> = self
            .truncate(order)
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(ij, c)| (ij, c.clone()))
            .collect();
        let rhs_terms: Vec<_> = rhs
            .truncate(order)
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(ij, c)| (ij, c.clone()))
            .collect();
        for ((a, b), p) in &lhs_terms {
            for ((c, d), q) in &rhs_terms {
                let (i, j) = (a + c, b + d);
                if i + j > order {
                    continue;
                }
                out.coeffs[tri_index(i, j)] += p * q * (&binom[i][*a] * &binom[j][*b]);
            }
        }
        out
    }
}

/// The bivariate series `f(a x + b y)` truncated at total degree `order`.
///
/// Coefficient `(i, j)` is `f_{i+j} a^i b^j`. The order is capped by `f`'s.
pub fn compose_linear(f: &Series1, a: &Rational, b: &Rational, order: usize) -> Series2 {
    let order = order.min(f.order());
    let a_pows: Vec<Rational> = (0..=order).map(|k| pow(a, k)).collect();
    let b_pows: Vec<Rational> = (0..=order).map(|k| pow(b, k)).collect();
    Series2::from_fn(order, |i, j| &f.coeffs[i + j] * &a_pows[i] * &b_pows[j])
}

/// The elementary series available from [`elementary`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Elementary {
    Exp,
    Sinh,
    Cosh,
    Tanh,
    Sin,
    Cos,
}

impl FromStr for Elementary {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exp" => Elementary::Exp,
            "sinh" => Elementary::Sinh,
            "cosh" => Elementary::Cosh,
            "tanh" => Elementary::Tanh,
            "sin" => Elementary::Sin,
            "cos" => Elementary::Cos,
            other => return Err(Error::UnknownSeries(other.to_owned())),
        })
    }
}

/// Exact EGF coefficients of an elementary function at `x = 0`.
pub fn elementary(kind: Elementary, order: usize) -> Series1 {
    match kind {
        Elementary::Exp => Series1::from_fn(order, |_| Rational::one()),
        Elementary::Cosh => Series1::from_fn(order, |k| rat(i64::from(k % 2 == 0))),
        Elementary::Sinh => Series1::from_fn(order, |k| rat(i64::from(k % 2 == 1))),
        Elementary::Cos => Series1::from_fn(order, |k| match k % 4 {
            0 => rat(1),
            2 => rat(-1),
            _ => rat(0),
        }),
        Elementary::Sin => Series1::from_fn(order, |k| match k % 4 {
            1 => rat(1),
            3 => rat(-1),
            _ => rat(0),
        }),
        Elementary::Tanh => elementary(Elementary::Sinh, order)
            .div(&elementary(Elementary::Cosh, order))
            .expect("cosh has constant term 1"),
    }
}

/// Looks up an elementary series by name (`exp`, `sinh`, `cosh`, `tanh`, `sin`, `cos`).
pub fn elementary_by_name(name: &str, order: usize) -> Result<Series1> {
    Ok(elementary(name.parse()?, order))
}

pub(crate) fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub(crate) fn is_nonneg_integer(r: &Rational) -> bool {
    is_integer(r) && !r.is_negative()
}
