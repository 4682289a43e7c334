//! Exact computations with trades, inclusion and intersection matrices of
//! subset systems, and two-row Specht modules.
//!
//! Ground sets are `X = {1..n}` with `n ≤ 64`; all arithmetic is exact over
//! the rationals.

mod error;

pub mod boolean;
pub mod cli;
pub mod combinatorics;
pub mod linalg;
pub mod specht;
pub mod trades;
pub mod verify;

pub use error::{Error, Result};
