//! Closed-form generating functions for `p_n(k)` and the series identities
//! behind them.
//!
//! Everything is computed in scaled variables so that no irrational constant
//! appears: the bivariate series built here is
//!
//! ```text
//! P(x, y) = cosh(x - y) / (cosh(x + y) - (x + y) sinh(x + y))
//!         = sum_{n,k} 2^n p_n(k) x^{n+k}/(n+k)! y^{n-k}/(n-k)!
//! ```
//!
//! and substituting `x -> x/sqrt(2)`, `y -> y/sqrt(2)` gives the unweighted
//! generating function of `p_n(k)`. Likewise [`uudd_series`] is
//! `tanh u / (1 - u tanh u)`, whose `u^{2n+1}/(2n+1)!` coefficient is
//! `2^n V_n`, with `V_n` the number of up-up-or-down-down permutations of
//! length `2n + 1`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fps::{compose_linear, elementary, rat, Elementary, Rational, Series1, Series2};
use crate::pnk::PnkTable;

fn pow2(n: usize) -> BigInt {
    BigInt::one() << n
}

/// Converts an integral, nonnegative coefficient divided by `divisor` into a
/// count, or reports where it failed.
fn exact_quotient(value: &Rational, divisor: &BigInt, at: impl FnOnce() -> String) -> Result<BigUint> {
    let fail = |at: String| Error::NonIntegral {
        at,
        value: value.to_string(),
        divisor: divisor.to_string(),
    };
    if !value.denom().is_one() {
        return Err(fail(at()));
    }
    let (q, r) = value.numer().div_rem(divisor);
    if !r.is_zero() || q.sign() == Sign::Minus {
        return Err(fail(at()));
    }
    Ok(q.to_biguint().expect("nonnegative"))
}

/// The series `x + y`.
fn x_plus_y(order: usize) -> Series2 {
    Series2::from_fn(order, |i, j| rat(i64::from(i + j == 1)))
}

/// Bivariate generating function of `2^n p_n(k)` (see the module docs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledPSeries {
    series: Series2,
}

impl ScaledPSeries {
    pub fn series(&self) -> &Series2 {
        &self.series
    }

    pub fn into_series(self) -> Series2 {
        self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// Largest `n` whose whole row is available.
    pub fn max_n(&self) -> usize {
        self.series.order() / 2
    }

    /// `p_n(k)` from the coefficient at `(n+k, n-k)` divided by `2^n`.
    pub fn extract_pnk(&self, n: usize, k: i64) -> Result<BigUint> {
        if k.unsigned_abs() as usize > n {
            return Err(Error::InvalidArgument(format!("|k| = {} exceeds n = {n}", k.abs())));
        }
        let i = (n as i64 + k) as usize;
        let j = (n as i64 - k) as usize;
        let c = self.series.coeff(i, j)?;
        exact_quotient(c, &pow2(n), || format!("p_{n}({k})"))
    }

    /// Row `n` of the triangle read from the series.
    pub fn extract_row(&self, n: usize) -> Result<Vec<BigUint>> {
        let n_i = n as i64;
        (-n_i..=n_i).map(|k| self.extract_pnk(n, k)).collect()
    }

    /// Odd total degrees vanish and the series is symmetric in `x` and `y`.
    pub fn has_expected_shape(&self) -> bool {
        self.series
            .iter()
            .all(|((i, j), c)| ((i + j) % 2 == 0 || c.is_zero()) && c == self.series.at(j, i))
    }
}

/// Builds `cosh(x-y) / (cosh(x+y) - (x+y) sinh(x+y))` to total degree `order`.
pub fn build_p(order: usize) -> ScaledPSeries {
    let one = rat(1);
    let cosh = elementary(Elementary::Cosh, order);
    let sinh = elementary(Elementary::Sinh, order);
    let numerator = compose_linear(&cosh, &one, &-&one, order);
    let cosh_sum = compose_linear(&cosh, &one, &one, order);
    let sinh_sum = compose_linear(&sinh, &one, &one, order);
    let denominator = &cosh_sum - &(&x_plus_y(order) * &sinh_sum);
    let series = numerator
        .div(&denominator)
        .expect("denominator has constant term 1");
    ScaledPSeries { series }
}

/// The scaled bivariate series assembled directly from a table:
/// coefficient `2^n p_n(k)` at `(n+k, n-k)` and zero elsewhere.
pub fn scaled_series_from_table(table: &PnkTable) -> Series2 {
    Series2::from_fn(2 * table.max_n(), |i, j| {
        if (i + j) % 2 == 1 {
            return Rational::zero();
        }
        let n = (i + j) / 2;
        let k = i as i64 - n as i64;
        let p = table.get(n, k).cloned().unwrap_or_default();
        Rational::from_integer(BigInt::from(p) * pow2(n))
    })
}

/// `L(G) = dG/dx - dG/dy`.
pub fn apply_l(s: &Series2) -> Series2 {
    &s.partial_x() - &s.partial_y()
}

/// `Q = L(P) / 2` and `R = P + Q`.
pub fn build_q_r(p: &ScaledPSeries) -> (Series2, Series2) {
    let q = apply_l(p.series()).scale(&Rational::new(1.into(), 2.into()));
    let r = p.series() + &q;
    (q, r)
}

/// `L(L(P)) = 4P` through the available order.
pub fn verify_l_squared(p: &ScaledPSeries) -> bool {
    let l2 = apply_l(&apply_l(p.series()));
    l2 == p.series().truncate(l2.order()).scale(&rat(4))
}

/// `P(x, 0) = 1 + x Q(x, 0)`: coefficient-wise, `P_{2n,0} = 2n Q_{2n-1,0}` for
/// `n >= 1`, odd coefficients of `P(x,0)` vanish, and `P_{0,0} = 1`.
pub fn verify_diagonal_edge(p: &ScaledPSeries) -> bool {
    let (q, _) = build_q_r(p);
    let lhs = p.series().at_y_zero();
    let rhs = &Series1::one(lhs.order()) + &q.at_y_zero().times_x();
    lhs == rhs
}

/// Doubly indexed array with `a_{i+1,j} - a_{i,j+1} = 2 a_{i,j}`, stored for
/// `i + j <= order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeidelArray {
    cells: Series2,
}

impl SeidelArray {
    /// Fills the array from its first row `a_{i,0}` using
    /// `a_{i,j+1} = a_{i+1,j} - 2 a_{i,j}`.
    pub fn from_seed(seed: &[Rational]) -> Result<Self> {
        let order = seed
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::InvalidArgument("empty seed".into()))?;
        let mut cols: Vec<Vec<Rational>> = vec![seed.to_vec()];
        for j in 0..order {
            let prev = &cols[j];
            let next: Vec<Rational> = (0..prev.len() - 1)
                .map(|i| &prev[i + 1] - &prev[i] * rat(2))
                .collect();
            cols.push(next);
        }
        let cells = Series2::from_fn(order, |i, j| cols[j][i].clone());
        Ok(SeidelArray { cells })
    }

    /// Views any coefficient array as a candidate Seidel array.
    pub fn from_series(cells: Series2) -> Self {
        SeidelArray { cells }
    }

    pub fn order(&self) -> usize {
        self.cells.order()
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&Rational> {
        self.cells.coeff(i, j)
    }

    /// The array read as the coefficients of a bivariate EGF.
    pub fn as_series(&self) -> &Series2 {
        &self.cells
    }

    /// First `(i, j)` where the defining relation fails, if any.
    pub fn relation_violation(&self) -> Option<(usize, usize)> {
        let c = &self.cells;
        (0..c.order()).flat_map(|d| (0..=d).map(move |j| (d - j, j))).find(|&(i, j)| {
            c.at(i + 1, j) - c.at(i, j + 1) != c.at(i, j) * rat(2)
        })
    }

    pub fn satisfies_relation(&self) -> bool {
        self.relation_violation().is_none()
    }

    /// `a_{j,i} = (-1)^{i+j} a_{i,j}` everywhere.
    pub fn is_sign_symmetric(&self) -> bool {
        self.cells.iter().all(|((i, j), c)| {
            let mirrored = self.cells.at(j, i);
            if (i + j) % 2 == 0 {
                mirrored == c
            } else {
                *mirrored == -c
            }
        })
    }
}

fn first_mismatch(a: &Series2, b: &Series2) -> Option<(usize, usize)> {
    let order = a.order().min(b.order());
    a.iter()
        .filter(|((i, j), _)| i + j <= order)
        .find(|&((i, j), c)| c != b.at(i, j))
        .map(|(ij, _)| ij)
}

/// Fills the Seidel array from `seed` and checks it against the closed form
/// `e^{-2y} A(x + y)`, where `A(x) = sum seed_i x^i/i!`.
///
/// Returns the array and the closed-form series.
pub fn seidel_closed_form(seed: &[Rational]) -> Result<(SeidelArray, Series2)> {
    let array = SeidelArray::from_seed(seed)?;
    let order = array.order();
    let a = Series1::from_coeffs(seed.to_vec());
    let exp = elementary(Elementary::Exp, order);
    let closed = &compose_linear(&exp, &rat(0), &rat(-2), order)
        * &compose_linear(&a, &rat(1), &rat(1), order);
    if let Some((i, j)) = first_mismatch(array.as_series(), &closed) {
        return Err(Error::IdentityFailure {
            identity: "a(i,j) = [x^i y^j] e^{-2y} A(x+y)",
            i,
            j,
        });
    }
    Ok((array, closed))
}

/// Even/odd total-degree split of a sign-symmetric Seidel array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeidelSplit {
    pub array: SeidelArray,
    /// Terms of even total degree; equals `cosh(x - y) B(x + y)`.
    pub even: Series2,
    /// Terms of odd total degree; equals `sinh(x - y) B(x + y)`.
    pub odd: Series2,
    /// `B(x) = e^{-x} A(x)`, which has only even powers.
    pub b: Series1,
}

/// Checks `a_{0,i} = (-1)^i a_{i,0}` on the array induced by `seed`, then
/// verifies that `B(x) = e^{-x} A(x)` is even and that the even and odd parts
/// of the array are `cosh(x-y) B(x+y)` and `sinh(x-y) B(x+y)`.
pub fn seidel_even_odd_split(seed: &[Rational]) -> Result<SeidelSplit> {
    let array = SeidelArray::from_seed(seed)?;
    let order = array.order();
    for i in 0..=order {
        let expected = if i % 2 == 0 {
            array.as_series().at(i, 0).clone()
        } else {
            -array.as_series().at(i, 0)
        };
        if *array.as_series().at(0, i) != expected {
            return Err(Error::SymmetryViolation(i));
        }
    }

    let a = Series1::from_coeffs(seed.to_vec());
    let exp_neg = compose_linear(&elementary(Elementary::Exp, order), &rat(-1), &rat(0), order)
        .at_y_zero();
    let b = &exp_neg * &a;
    if let Some(i) = (1..=order).step_by(2).find(|&i| !b.coeffs()[i].is_zero()) {
        return Err(Error::IdentityFailure {
            identity: "B(x) = e^{-x} A(x) is even",
            i,
            j: 0,
        });
    }

    let one = rat(1);
    let b_sum = compose_linear(&b, &one, &one, order);
    let cosh_diff = compose_linear(&elementary(Elementary::Cosh, order), &one, &-&one, order);
    let sinh_diff = compose_linear(&elementary(Elementary::Sinh, order), &one, &-&one, order);
    let even = array.as_series().even_part();
    let odd = array.as_series().odd_part();
    if let Some((i, j)) = first_mismatch(&even, &(&cosh_diff * &b_sum)) {
        return Err(Error::IdentityFailure {
            identity: "even part = cosh(x-y) B(x+y)",
            i,
            j,
        });
    }
    if let Some((i, j)) = first_mismatch(&odd, &(&sinh_diff * &b_sum)) {
        return Err(Error::IdentityFailure {
            identity: "odd part = sinh(x-y) B(x+y)",
            i,
            j,
        });
    }
    Ok(SeidelSplit {
        array,
        even,
        odd,
        b,
    })
}

/// `1 / (cosh x - x sinh x)`.
pub fn b_closed_form(order: usize) -> Series1 {
    let denom = &elementary(Elementary::Cosh, order)
        - &(&Series1::x(order) * &elementary(Elementary::Sinh, order));
    Series1::one(order).div(&denom).expect("constant term 1")
}

/// `P(x, 0) = cosh x / (cosh x - x sinh x)`; the `x^{2n}/(2n)!` coefficient is
/// `2^n p_n(n)`.
pub fn diag_series(order: usize) -> Series1 {
    let cosh = elementary(Elementary::Cosh, order);
    let denom = &cosh - &(&Series1::x(order) * &elementary(Elementary::Sinh, order));
    cosh.div(&denom).expect("constant term 1")
}

/// `tanh u / (1 - u tanh u)`; the `u^{2n+1}/(2n+1)!` coefficient is `2^n V_n`.
pub fn uudd_series(order: usize) -> Series1 {
    let tanh = elementary(Elementary::Tanh, order);
    let denom = &Series1::one(order) - &(&Series1::x(order) * &tanh);
    tanh.div(&denom).expect("constant term 1")
}

/// `V_n` from [`uudd_series`] output.
pub fn extract_v(series: &Series1, n: usize) -> Result<BigUint> {
    let c = series.coeff(2 * n + 1)?;
    exact_quotient(c, &pow2(n), || format!("V_{n}"))
}

/// `V_0..=V_max` from a freshly built [`uudd_series`].
pub fn v_values(max_n: usize) -> Result<Vec<BigUint>> {
    let s = uudd_series(2 * max_n + 1);
    (0..=max_n).map(|n| extract_v(&s, n)).collect()
}

/// `2 p_n(n) = 2n V_{n-1}` for `1 <= n <= max_n`: the number of 2 x n
/// whirlpool permutations computed two ways.
pub fn verify_w_relation(table: &PnkTable, max_n: usize) -> bool {
    if max_n == 0 {
        return true;
    }
    if table.max_n() < max_n {
        return false;
    }
    let Ok(v) = v_values(max_n - 1) else {
        return false;
    };
    (1..=max_n).all(|n| {
        let edge = table.get(n, n as i64).expect("checked above");
        BigUint::from(2u32) * edge == BigUint::from(2 * n) * &v[n - 1]
    })
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Substitutes `x -> t x`, `y -> (1 - t) x`, integrates over `t` in `[0, 1]`
/// with the beta integral `int t^i (1-t)^j dt = i! j! / (i+j+1)!`, and
/// multiplies by `x`. The result has order `s.order() + 1`.
pub fn beta_collapse(s: &Series2) -> Series1 {
    let order = s.order() + 1;
    let mut out = Series1::zero(order).coeffs().to_vec();
    let facts: Vec<BigInt> = (0..=order).map(factorial).collect();
    for ((i, j), c) in s.iter() {
        if c.is_zero() {
            continue;
        }
        let m = i + j;
        // c x^i y^j / (i! j!) becomes c * beta(i, j) / (i! j!) x^{m+1}; the EGF
        // coefficient at m + 1 then picks up another (m+1)!.
        let beta = Rational::new(&facts[i] * &facts[j], facts[m + 1].clone());
        let monomial = Rational::new(BigInt::one(), &facts[i] * &facts[j]);
        out[m + 1] += c * beta * monomial * &facts[m + 1];
    }
    Series1::from_coeffs(out)
}

/// Row sums agree with `V_n` for `0 <= n <= max_n`, both directly and after
/// collapsing the table's bivariate series with the beta integral and
/// comparing against [`uudd_series`].
pub fn verify_beta_row_sum(table: &PnkTable, max_n: usize) -> bool {
    if table.max_n() < max_n {
        return false;
    }
    let Ok(v) = v_values(max_n) else {
        return false;
    };
    let sums_ok = (0..=max_n).all(|n| table.row_sum(n).ok().as_ref() == Some(&v[n]));
    let rows: Vec<Vec<BigUint>> = table.rows()[..=max_n].to_vec();
    let truncated = PnkTable::from_rows(rows).expect("prefix of a valid table");
    let collapsed = beta_collapse(&scaled_series_from_table(&truncated));
    let target = uudd_series(collapsed.order());
    sums_ok && collapsed == target
}
