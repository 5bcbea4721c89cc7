//! Two more families of permutations of `{-m, ..., n}` ending with 0: the
//! alternating ones (Entringer numbers) and all of them counted by descents
//! (bivariate Eulerian polynomials).

use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fps::{compose_linear, elementary, is_nonneg_integer, rat, Elementary, Series2};
use crate::permlab::{brute_descent_poly_ending_zero, FeasibilityLimits};

/// Dense integer polynomial in `t`; no trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// Coefficients of `t^0, t^1, ...`; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Keeps the terms of degree `<= d`.
    pub fn truncate(&self, d: usize) -> Self {
        Self::new(self.coeffs.iter().take(d + 1).cloned().collect())
    }

    /// True when the coefficients between the lowest and highest nonzero
    /// degree read the same in both directions.
    pub fn is_palindromic_on_support(&self) -> bool {
        let start = self.coeffs.iter().position(|c| !c.is_zero());
        match start {
            None => true,
            Some(s) => {
                let body = &self.coeffs[s..];
                body.iter().eq(body.iter().rev())
            }
        }
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::new(out)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c < &BigInt::zero() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{d}")?,
                (_, false) => write!(f, "{mag}t^{d}")?,
            }
        }
        Ok(())
    }
}

/// `(cos y + sin y) / cos(x + y)` to total degree `order`. The coefficient
/// at `(m, n)` counts alternating permutations of `{-m, ..., n}` ending with 0.
pub fn entringer_series(order: usize) -> Series2 {
    let one = rat(1);
    let zero = rat(0);
    let cos = elementary(Elementary::Cos, order);
    let sin = elementary(Elementary::Sin, order);
    let numerator =
        &compose_linear(&cos, &zero, &one, order) + &compose_linear(&sin, &zero, &one, order);
    let denominator = compose_linear(&cos, &one, &one, order);
    numerator.div(&denominator).expect("cos(0) = 1")
}

/// Entringer count at `(m, n)` read off [`entringer_series`].
pub fn entringer_count(series: &Series2, m: usize, n: usize) -> Result<BigUint> {
    let c = series.coeff(m, n)?;
    if !is_nonneg_integer(c) {
        return Err(Error::NonIntegral {
            at: format!("({m}, {n})"),
            value: c.to_string(),
            divisor: "1".into(),
        });
    }
    Ok(c.numer().to_biguint().expect("nonnegative"))
}

/// `sum_{j=0}^{terms} (j+1)^m j^n t^j`: the `(m, n)` EGF coefficient of
/// `e^x / (1 - t e^{x+y})`, cut off after `t^terms`.
pub fn closed_form_coefficient(m: usize, n: usize, terms: usize) -> TPoly {
    TPoly::new(
        (0..=terms)
            .map(|j| num_traits::pow(BigInt::from(j + 1), m) * num_traits::pow(BigInt::from(j), n))
            .collect(),
    )
}

fn one_minus_t_pow(e: usize) -> TPoly {
    let base = TPoly::from_i64(&[1, -1]);
    (0..e).fold(TPoly::one(), |acc, _| &acc * &base)
}

fn eulerian_with_terms(m: usize, n: usize, terms: usize) -> TPoly {
    let d = m + n;
    (&closed_form_coefficient(m, n, terms) * &one_minus_t_pow(d + 1)).truncate(d)
}

/// `A_{m,n}(t)`: permutations of `{-m, ..., n}` ending with 0, by descents.
///
/// Computed as `(1 - t)^{m+n+1} sum_j (j+1)^m j^n t^j` truncated at degree
/// `m + n`. Only `j <= m + n` can reach those degrees; the function recomputes
/// with `2(m+n) + 2` terms and fails if the two disagree.
pub fn eulerian_poly(m: usize, n: usize) -> Result<TPoly> {
    let d = m + n;
    let short = eulerian_with_terms(m, n, d);
    let long = eulerian_with_terms(m, n, 2 * d + 2);
    if short != long {
        return Err(Error::IdentityFailure {
            identity: "eulerian truncation stabilizes",
            i: m,
            j: n,
        });
    }
    Ok(short)
}

/// Checks, for every `m + n <= max_total`:
///
/// * `poly(m, n)` equals the brute-force descent polynomial (when `m + n + 1`
///   is within `limits`),
/// * the `t^j` coefficient `(j+1)^m j^n` of the closed form equals the
///   `(m, n)` coefficient of `e^x e^{j(x+y)}` expanded with the series kernel.
pub fn verify_eulerian_identity_with<F>(max_total: usize, limits: &FeasibilityLimits, poly: F) -> bool
where
    F: Fn(usize, usize) -> Result<TPoly>,
{
    let one = rat(1);
    let zero = rat(0);
    let exp = elementary(Elementary::Exp, max_total);
    let e_x = compose_linear(&exp, &one, &zero, max_total);
    let expanded: Vec<Series2> = (0..=max_total)
        .map(|j| {
            let jj = rat(j as i64);
            &e_x * &compose_linear(&exp, &jj, &jj, max_total)
        })
        .collect();
    for total in 0..=max_total {
        for m in 0..=total {
            let n = total - m;
            let Ok(candidate) = poly(m, n) else {
                return false;
            };
            if m + n < limits.labeled_max_len {
                match brute_descent_poly_ending_zero(m, n, limits) {
                    Ok(brute) if brute == candidate => {}
                    _ => return false,
                }
            }
            let closed = closed_form_coefficient(m, n, total);
            for (j, series) in expanded.iter().enumerate().take(total + 1) {
                let c = series.at(m, n);
                if *c != crate::fps::Rational::from_integer(closed.coeff(j)) {
                    return false;
                }
            }
        }
    }
    true
}

/// [`verify_eulerian_identity_with`] applied to [`eulerian_poly`].
pub fn verify_eulerian_identity(max_total: usize, limits: &FeasibilityLimits) -> bool {
    verify_eulerian_identity_with(max_total, limits, eulerian_poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permlab::brute_alternating_ending_zero;

    #[test]
    fn tpoly_basics() {
        let p = TPoly::from_i64(&[0, 1, 1, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.to_string(), "t + t^2");
        assert_eq!(p.eval(&BigInt::one()), BigInt::from(2));
        assert!(TPoly::zero().is_zero());
        assert_eq!(TPoly::from_i64(&[1, -3]).to_string(), "1 - 3t");
        assert!(TPoly::from_i64(&[0, 1, 4, 1]).is_palindromic_on_support());
        assert!(!TPoly::from_i64(&[0, 1, 4, 2]).is_palindromic_on_support());
    }

    #[test]
    fn entringer_small() {
        let s = entringer_series(6);
        assert_eq!(entringer_count(&s, 0, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(entringer_count(&s, 1, 0).unwrap(), BigUint::from(0u32));
        assert_eq!(entringer_count(&s, 1, 1).unwrap(), BigUint::from(1u32));
        let lim = FeasibilityLimits::default();
        for total in 0..=5 {
            for m in 0..=total {
                let n = total - m;
                assert_eq!(
                    entringer_count(&s, m, n).unwrap(),
                    brute_alternating_ending_zero(m, n, &lim).unwrap(),
                    "({m}, {n})"
                );
            }
        }
    }

    #[test]
    fn eulerian_small() {
        assert_eq!(eulerian_poly(0, 0).unwrap(), TPoly::one());
        assert_eq!(eulerian_poly(0, 2).unwrap(), TPoly::from_i64(&[0, 1, 1]));
        assert_eq!(eulerian_poly(1, 0).unwrap(), TPoly::one());
        // Classical Eulerian polynomial for n = 3 after the shift by t.
        assert_eq!(eulerian_poly(0, 3).unwrap(), TPoly::from_i64(&[0, 1, 4, 1]));
    }

    #[test]
    fn eulerian_identity_and_tampering() {
        let lim = FeasibilityLimits::default();
        assert!(verify_eulerian_identity(0, &lim));
        assert!(verify_eulerian_identity(4, &lim));
        let tampered = |m, n| {
            let p = eulerian_poly(m, n)?;
            if (m, n) == (1, 1) {
                return Ok(&p * &TPoly::from_i64(&[0, 1]));
            }
            Ok(p)
        };
        assert!(!verify_eulerian_identity_with(4, &lim, tampered));
    }

    #[test]
    fn eulerian_total_is_factorial() {
        let mut fact = BigInt::one();
        for total in 0..=8usize {
            if total > 0 {
                fact *= total;
            }
            for m in 0..=total {
                let p = eulerian_poly(m, total - m).unwrap();
                assert_eq!(p.eval(&BigInt::one()), fact);
            }
        }
    }

    /// Classical symmetry; not part of the identities verified elsewhere.
    #[test]
    fn one_sided_eulerian_palindromic() {
        for n in 1..=8 {
            assert!(eulerian_poly(0, n).unwrap().is_palindromic_on_support());
        }
    }
}
