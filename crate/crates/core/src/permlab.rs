//! Brute-force oracles over small labeled sets.
//!
//! Every counter streams permutations in lexicographic order with
//! [`next_permutation`], so memory stays linear in the permutation length. The
//! search space is split by the choice of the first entry and the parts are
//! counted in parallel.

use std::collections::BTreeSet;
use std::env;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extras::TPoly;

/// Upper limits on brute-force work, expressed as permutation lengths (or cell
/// counts for whirlpool matrices).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FeasibilityLimits {
    /// Largest `n` accepted by [`brute_pnk_row`] (enumerates `(2n+1)!`).
    pub pnk_max_n: usize,
    /// Largest `rows * cols` accepted by [`count_whirlpool`].
    pub whirlpool_max_cells: usize,
    /// Largest length accepted by [`brute_uudd_count`].
    pub uudd_max_len: usize,
    /// Largest `m + n + 1` for the last-entry-zero counters.
    pub labeled_max_len: usize,
}

impl Default for FeasibilityLimits {
    fn default() -> Self {
        FeasibilityLimits {
            pnk_max_n: 5,
            whirlpool_max_cells: 9,
            uudd_max_len: 11,
            labeled_max_len: 11,
        }
    }
}

impl FeasibilityLimits {
    /// Environment variable holding a permutation-length ceiling that raises
    /// every default limit.
    pub const ENV_CEILING: &'static str = "UUDD_MAX_PERM_LEN";

    /// Raises every limit so that permutations up to `len` entries are allowed.
    /// Never lowers a limit.
    pub fn raised_to(self, len: usize) -> Self {
        FeasibilityLimits {
            pnk_max_n: self.pnk_max_n.max(len.saturating_sub(1) / 2),
            whirlpool_max_cells: self.whirlpool_max_cells.max(len),
            uudd_max_len: self.uudd_max_len.max(len),
            labeled_max_len: self.labeled_max_len.max(len),
        }
    }

    /// Defaults, raised by [`Self::ENV_CEILING`] when it is set to an integer.
    pub fn from_env() -> Self {
        let base = Self::default();
        match env::var(Self::ENV_CEILING).ok().and_then(|v| v.parse().ok()) {
            Some(len) => base.raised_to(len),
            None => base,
        }
    }
}

fn check_bound(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        return Err(Error::BoundExceeded { what, value, bound });
    }
    Ok(())
}

/// A sequence of distinct integers covering a contiguous range `lo..=hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    entries: Vec<i64>,
}

impl Permutation {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let Some(&lo) = entries.iter().min() else {
            return Err(Error::InvalidPermutation("empty sequence".into()));
        };
        let mut seen = vec![false; entries.len()];
        for &e in &entries {
            let off = usize::try_from(e - lo).ok().filter(|&o| o < entries.len());
            match off {
                Some(o) if !seen[o] => seen[o] = true,
                Some(_) => {
                    return Err(Error::InvalidPermutation(format!("{e} appears twice")))
                }
                None => {
                    return Err(Error::InvalidPermutation(format!(
                        "entries do not form a contiguous range starting at {lo}"
                    )))
                }
            }
        }
        Ok(Permutation { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lo(&self) -> i64 {
        self.entries.iter().copied().min().unwrap_or_default()
    }

    pub fn hi(&self) -> i64 {
        self.entries.iter().copied().max().unwrap_or_default()
    }

    pub fn last(&self) -> i64 {
        *self.entries.last().expect("permutations are nonempty")
    }

    pub fn is_uudd(&self) -> bool {
        is_uudd(&self.entries)
    }

    pub fn classify_extrema(&self) -> Extrema {
        classify_extrema(&self.entries)
    }
}

/// One-based peak and valley indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Extrema {
    pub peaks: BTreeSet<usize>,
    pub valleys: BTreeSet<usize>,
}

/// Up-up-or-down-down test: `a_{2i-1} < a_{2i}` iff `a_{2i} < a_{2i+1}` for
/// every `i` with `2i + 1 <= len` (one-based).
pub fn is_uudd<T: Ord>(a: &[T]) -> bool {
    a.windows(3)
        .step_by(2)
        .all(|w| (w[0] < w[1]) == (w[1] < w[2]))
}

pub fn classify_extrema<T: Ord>(a: &[T]) -> Extrema {
    let mut out = Extrema::default();
    for (idx, w) in a.windows(3).enumerate() {
        let i = idx + 2;
        if w[0] < w[1] && w[1] > w[2] {
            out.peaks.insert(i);
        } else if w[0] > w[1] && w[1] < w[2] {
            out.valleys.insert(i);
        }
    }
    out
}

/// Rearranges `a` into the next permutation in lexicographic order. Returns
/// `false` (leaving `a` sorted ascending) after the last one.
pub fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Visits every arrangement of `pool` followed by the fixed `tail`.
///
/// The work is split by first entry; each part folds into its own accumulator
/// and the parts are merged with `merge`.
fn fold_arrangements<A, I, V, M>(pool: &[i64], tail: &[i64], init: I, visit: V, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[i64]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let mut sorted = pool.to_vec();
    sorted.sort_unstable();
    if sorted.is_empty() {
        let mut acc = init();
        visit(&mut acc, tail);
        return acc;
    }
    (0..sorted.len())
        .into_par_iter()
        .map(|first| {
            let mut buf = Vec::with_capacity(sorted.len() + tail.len());
            buf.push(sorted[first]);
            buf.extend(sorted.iter().enumerate().filter(|&(i, _)| i != first).map(|(_, &v)| v));
            buf.extend_from_slice(tail);
            let body = 1..sorted.len();
            let mut acc = init();
            loop {
                visit(&mut acc, &buf);
                if !next_permutation(&mut buf[body.clone()]) {
                    break;
                }
            }
            acc
        })
        .reduce(&init, &merge)
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn symmetric_range(n: usize) -> Vec<i64> {
    let n = n as i64;
    (-n..=n).collect()
}

/// Counts up-up-or-down-down permutations of `{-n, ..., n}` by last entry.
///
/// Offset `n + k` of the result holds the count ending in `k`.
pub fn brute_pnk_row(n: usize, limits: &FeasibilityLimits) -> Result<Vec<BigUint>> {
    check_bound("n", n, limits.pnk_max_n)?;
    let width = 2 * n + 1;
    let counts = fold_arrangements(
        &symmetric_range(n),
        &[],
        || vec![0u64; width],
        |acc, p| {
            if is_uudd(p) {
                acc[(p[p.len() - 1] + n as i64) as usize] += 1;
            }
        },
        add_counts,
    );
    Ok(counts.into_iter().map(BigUint::from).collect())
}

/// Classifies the up-up-or-down-down permutations of `{-(n+1), ..., n+1}` the
/// way the removal argument for the recurrence does: drop the last two entries,
/// relabel the rest order-preservingly onto `{-n, ..., n}`, and record the
/// new last entry `j` alongside the original last entry `k`.
///
/// Returns `counts[n+1+k][n+j]`. The recurrence predicts
/// `|j - k| * p_n(j)` in each cell.
pub fn removal_case_counts(n: usize, limits: &FeasibilityLimits) -> Result<Vec<Vec<BigUint>>> {
    check_bound("n", n + 1, limits.pnk_max_n)?;
    let big = 2 * n + 3;
    let small = 2 * n + 1;
    let counts = fold_arrangements(
        &symmetric_range(n + 1),
        &[],
        || vec![0u64; big * small],
        |acc, p| {
            if !is_uudd(p) {
                return;
            }
            let k = p[big - 1];
            let pivot = p[small - 1];
            let rank = p[..small].iter().filter(|&&v| v < pivot).count();
            acc[(k + n as i64 + 1) as usize * small + rank] += 1;
        },
        add_counts,
    );
    Ok(counts
        .chunks(small)
        .map(|row| row.iter().copied().map(BigUint::from).collect())
        .collect())
}

/// Number of up-up-or-down-down permutations of `{1, ..., length}`; `length`
/// must be odd.
pub fn brute_uudd_count(length: usize, limits: &FeasibilityLimits) -> Result<BigUint> {
    if length.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "length must be odd, got {length}"
        )));
    }
    check_bound("length", length, limits.uudd_max_len)?;
    let pool: Vec<i64> = (1..=length as i64).collect();
    let count = fold_arrangements(
        &pool,
        &[],
        || 0u64,
        |acc, p| *acc += u64::from(is_uudd(p)),
        |a, b| a + b,
    );
    Ok(BigUint::from(count))
}

/// The eight rank patterns of a 2x2 block, read clockwise from the top-left,
/// in which increasing values walk around the block.
const VORTEX_PATTERNS: [[u8; 4]; 8] = {
    let mut out = [[0u8; 4]; 8];
    let mut idx = 0;
    let mut start = 0;
    while start < 4 {
        let mut dir = 0;
        while dir < 2 {
            let mut r = 0;
            while r < 4 {
                let pos = if dir == 0 { (start + r) % 4 } else { (start + 4 - r) % 4 };
                out[idx][pos] = r as u8;
                r += 1;
            }
            idx += 1;
            dir += 1;
        }
        start += 1;
    }
    out
};

fn is_vortex<T: Ord>(tl: &T, tr: &T, br: &T, bl: &T) -> bool {
    let cells = [tl, tr, br, bl];
    let mut ranks = [0u8; 4];
    for (i, c) in cells.iter().enumerate() {
        ranks[i] = cells.iter().filter(|o| *o < c).count() as u8;
    }
    VORTEX_PATTERNS.contains(&ranks)
}

fn grid_is_whirlpool<T: Ord>(rows: usize, cols: usize, cells: &[T]) -> bool {
    for r in 0..rows.saturating_sub(1) {
        for c in 0..cols.saturating_sub(1) {
            let at = |rr: usize, cc: usize| &cells[rr * cols + cc];
            if !is_vortex(at(r, c), at(r, c + 1), at(r + 1, c + 1), at(r + 1, c)) {
                return false;
            }
        }
    }
    true
}

/// An `rows x cols` filling of `1..=rows*cols`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhirlpoolMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl WhirlpoolMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix("empty shape".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        if sorted.iter().zip(1u32..).any(|(&a, b)| a != b) {
            return Err(Error::InvalidMatrix(format!(
                "entries are not a permutation of 1..={}",
                rows * cols
            )));
        }
        Ok(WhirlpoolMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: &[&[u32]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn is_whirlpool(&self) -> bool {
        grid_is_whirlpool(self.rows, self.cols, &self.entries)
    }
}

/// Number of whirlpool fillings of a `rows x cols` matrix.
pub fn count_whirlpool(rows: usize, cols: usize, limits: &FeasibilityLimits) -> Result<BigUint> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidArgument("empty shape".into()));
    }
    check_bound("rows*cols", rows * cols, limits.whirlpool_max_cells)?;
    let pool: Vec<i64> = (1..=(rows * cols) as i64).collect();
    let count = fold_arrangements(
        &pool,
        &[],
        || 0u64,
        |acc, p| *acc += u64::from(grid_is_whirlpool(rows, cols, p)),
        |a, b| a + b,
    );
    Ok(BigUint::from(count))
}

/// The nonzero labels `{-m, ..., -1, 1, ..., n}`.
fn labels_around_zero(m: usize, n: usize) -> Vec<i64> {
    (-(m as i64)..=n as i64).filter(|&v| v != 0).collect()
}

/// `a_1 > a_2 < a_3 > ...`
fn is_down_up_alternating(a: &[i64]) -> bool {
    a.windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
}

/// Alternating permutations (`a_1 > a_2 < a_3 > ...`) of `{-m, ..., n}` that
/// end with 0.
pub fn brute_alternating_ending_zero(
    m: usize,
    n: usize,
    limits: &FeasibilityLimits,
) -> Result<BigUint> {
    check_bound("m+n+1", m + n + 1, limits.labeled_max_len)?;
    let count = fold_arrangements(
        &labels_around_zero(m, n),
        &[0],
        || 0u64,
        |acc, p| *acc += u64::from(is_down_up_alternating(p)),
        |a, b| a + b,
    );
    Ok(BigUint::from(count))
}

/// Sum of `t^des(p)` over permutations `p` of `{-m, ..., n}` ending with 0,
/// where `des` counts indices with `a_i > a_{i+1}` (including the final step
/// into 0).
pub fn brute_descent_poly_ending_zero(
    m: usize,
    n: usize,
    limits: &FeasibilityLimits,
) -> Result<TPoly> {
    check_bound("m+n+1", m + n + 1, limits.labeled_max_len)?;
    let width = m + n + 1;
    let counts = fold_arrangements(
        &labels_around_zero(m, n),
        &[0],
        || vec![0u64; width],
        |acc, p| {
            let des = p.windows(2).filter(|w| w[0] > w[1]).count();
            acc[des] += 1;
        },
        add_counts,
    );
    Ok(TPoly::new(counts.into_iter().map(Into::into).collect()))
}
