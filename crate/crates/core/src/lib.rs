//! Exact enumeration of up-up-or-down-down permutations.
//!
//! A permutation `a_1 a_2 ... a_m` is *up-up-or-down-down* when
//! `a_{2i-1} < a_{2i}` holds exactly when `a_{2i} < a_{2i+1}`, i.e. every peak
//! and every valley sits at an odd index. This crate counts them three ways:
//!
//! * [`permlab`]: brute-force enumeration (the ground truth for small sizes),
//! * [`pnk`]: the triangle `p_n(k)` from the absolute-difference recurrence,
//! * [`genfun`]: coefficient extraction from the bivariate exponential
//!   generating function, built with the exact series kernel in [`fps`].
//!
//! [`extras`] covers two related last-entry-fixed families (Entringer numbers
//! and bivariate Eulerian polynomials), and [`cli`] drives everything from the
//! `uudd` binary.
//!
//! Index convention used throughout: row `n` of a `p_n(k)` triangle is a dense
//! vector of length `2n + 1` and `p_n(k)` lives at offset `n + k`.

pub mod cli;
pub mod error;
pub mod extras;
pub mod fps;
pub mod genfun;
pub mod permlab;
pub mod pnk;

pub use error::{Error, Result};
pub use extras::TPoly;
pub use fps::{Rational, Series1, Series2};
pub use genfun::{ScaledPSeries, SeidelArray};
pub use permlab::{FeasibilityLimits, Permutation, WhirlpoolMatrix};
pub use pnk::PnkTable;
