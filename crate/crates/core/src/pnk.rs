//! The `p_n(k)` triangle from the absolute-difference recurrence
//! `p_{n+1}(k) = sum_{j=-n}^{n} |j - k| p_n(j)`, `p_0(0) = 1`, together with
//! checks of the identities it satisfies.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Rows `0..=N` of `p_n(k)`; row `n` has `2n + 1` entries and `p_n(k)` sits at
/// offset `n + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PnkTable {
    rows: Vec<Vec<BigUint>>,
}

impl PnkTable {
    /// Builds rows `0..=max_n` by direct evaluation of the recurrence.
    pub fn build(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigUint::one()]);
        for n in 0..max_n {
            let prev = &rows[n];
            let next: Vec<BigUint> = (0..2 * n + 3)
                .map(|kk| {
                    // k = kk - (n + 1), j = jj - n, so |j - k| = |jj + 1 - kk|.
                    prev.iter()
                        .enumerate()
                        .filter(|(_, p)| !p.is_zero())
                        .map(|(jj, p)| p * BigUint::from((jj + 1).abs_diff(kk)))
                        .sum()
                })
                .collect();
            rows.push(next);
        }
        PnkTable { rows }
    }

    /// Wraps externally supplied rows. Only the shape is checked, so a
    /// deliberately wrong table can be handed to the verifiers.
    pub fn from_rows(rows: Vec<Vec<BigUint>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidArgument("a table needs row 0".into()));
        }
        for (n, row) in rows.iter().enumerate() {
            if row.len() != 2 * n + 1 {
                return Err(Error::InvalidArgument(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    2 * n + 1
                )));
            }
        }
        Ok(PnkTable { rows })
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Result<&[BigUint]> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or(Error::IndexOutOfRange {
                index: n,
                max: self.max_n(),
            })
    }

    /// `p_n(k)`, or `None` outside the table.
    pub fn get(&self, n: usize, k: i64) -> Option<&BigUint> {
        let offset = usize::try_from(n as i64 + k).ok()?;
        self.rows.get(n)?.get(offset)
    }

    fn signed(&self, n: usize, k: i64) -> BigInt {
        self.get(n, k).cloned().map(BigInt::from).unwrap_or_default()
    }

    /// Mutable access for tests that need a corrupted table.
    pub fn get_mut(&mut self, n: usize, k: i64) -> Option<&mut BigUint> {
        let offset = usize::try_from(n as i64 + k).ok()?;
        self.rows.get_mut(n)?.get_mut(offset)
    }

    /// `sum_k p_n(k)`.
    pub fn row_sum(&self, n: usize) -> Result<BigUint> {
        Ok(self.row(n)?.iter().sum())
    }

    /// Every row reads the same in both directions: `p_n(-k) = p_n(k)`.
    pub fn verify_symmetry(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row.iter().eq(row.iter().rev()))
    }

    /// `p_{n+1}(k+1) - 2 p_{n+1}(k) + p_{n+1}(k-1) = 2 p_n(k)` for all
    /// `0 <= n < N`, `|k| <= n`.
    pub fn verify_second_difference(&self) -> bool {
        (0..self.max_n()).all(|n| {
            let n_i = n as i64;
            (-n_i..=n_i).all(|k| {
                let lhs = self.signed(n + 1, k + 1) - 2 * self.signed(n + 1, k)
                    + self.signed(n + 1, k - 1);
                lhs == 2 * self.signed(n, k)
            })
        })
    }

    /// `(n - 1) p_n(n) = n p_n(n - 1)` for `1 <= n <= N`.
    pub fn verify_edge_relation(&self) -> bool {
        (1..=self.max_n()).all(|n| {
            let n_i = n as i64;
            BigInt::from(n_i - 1) * self.signed(n, n_i) == BigInt::from(n_i) * self.signed(n, n_i - 1)
        })
    }

    /// `p_n(k) >= p_n(k-1)` for `n >= 2` and `1 <= k <= n`. Observed in
    /// practice; no proof is claimed.
    pub fn verify_half_row_monotone(&self) -> bool {
        (2..=self.max_n()).all(|n| {
            let row = &self.rows[n];
            row[n..].windows(2).all(|w| w[1] >= w[0])
        })
    }
}

/// Free-function spelling of [`PnkTable::build`].
pub fn build_table(max_n: usize) -> PnkTable {
    PnkTable::build(max_n)
}
